#include "perfcode/distribution.hpp"

#include <bit>

#include "perfcode/errors.hpp"

namespace perfcode {

DistributionTable::DistributionTable(BinaryCode from, std::vector<std::int64_t> counts)
    : from_(std::move(from)), counts_(std::move(counts)) {
    const auto width = static_cast<std::size_t>(from_.length()) + 1;
    if (from_.empty()) throw UsageError("distribution table needs a nonempty source code");
    if (counts_.size() != width * from_.size()) throw UsageError("distribution table has the wrong shape");
    std::vector<std::int64_t> sums(width, 0);
    for (std::size_t i = 0; i < from_.size(); ++i) {
        for (std::size_t l = 0; l < width; ++l) sums[l] += counts_[i * width + l];
    }
    const auto size = static_cast<std::int64_t>(from_.size());
    mean_.reserve(width);
    for (const auto s : sums) mean_.emplace_back(s, size);
}

std::span<const std::int64_t> DistributionTable::per_word(std::size_t index) const {
    const auto width = static_cast<std::size_t>(from_.length()) + 1;
    return std::span<const std::int64_t>(counts_).subspan(index * width, width);
}

std::span<const std::int64_t> DistributionTable::per_word(const BinaryWord& x) const {
    const auto index = from_.find(x);
    if (!index) throw UsageError("word " + x.to_string() + " is not in the source code");
    return per_word(*index);
}

Rational DistributionTable::mean(int l) const {
    if (l < 0 || l > from_.length()) return Rational{0};
    return mean_[static_cast<std::size_t>(l)];
}

DistributionTable mean_distribution(const BinaryCode& from, const BinaryCode& to) {
    if (from.length() != to.length()) throw UsageError("codes have different lengths");
    if (from.empty()) throw UsageError("mean distribution of an empty code is undefined");
    const auto width = static_cast<std::size_t>(from.length()) + 1;
    std::vector<std::int64_t> counts(width * from.size(), 0);
    const auto target = to.raw();
    for (std::size_t i = 0; i < from.size(); ++i) {
        const std::uint64_t x = from.raw()[i];
        std::int64_t* row = counts.data() + i * width;
        for (const auto y : target) ++row[std::popcount(x ^ y)];
    }
    return {from, std::move(counts)};
}

}  // namespace perfcode
