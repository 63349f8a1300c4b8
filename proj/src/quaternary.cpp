#include "perfcode/quaternary.hpp"

#include <algorithm>
#include <string>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

constexpr int kMaxIndicatorLength = 12;

void check_m(int m) {
    if (m < 1 || m > kMaxQuaternaryLength) {
        throw UsageError("quaternary code length " + std::to_string(m) + " outside 1.." +
                         std::to_string(kMaxQuaternaryLength));
    }
}

}  // namespace

QuaternaryCode::QuaternaryCode(int m) : m_(m) { check_m(m); }

QuaternaryCode::QuaternaryCode(int m, std::vector<std::uint64_t> packed) : m_(m), packed_(std::move(packed)) {
    check_m(m);
    const std::uint64_t mask = low_mask(2 * m);
    for (const auto p : packed_) {
        if ((p & ~mask) != 0) throw UsageError("quaternary codeword has digits beyond the code length");
    }
    std::sort(packed_.begin(), packed_.end());
    packed_.erase(std::unique(packed_.begin(), packed_.end()), packed_.end());
}

QuaternaryCode QuaternaryCode::from_words(int m, std::span<const QuaternaryWord> words) {
    std::vector<std::uint64_t> packed;
    packed.reserve(words.size());
    for (const auto& w : words) {
        if (w.length() != m) throw UsageError("quaternary word length mismatch");
        packed.push_back(w.packed());
    }
    return {m, std::move(packed)};
}

QuaternaryCode QuaternaryCode::from_indicator(int m, std::span<const std::uint8_t> membership) {
    check_m(m);
    if (m > kMaxIndicatorLength || membership.size() != (std::size_t{1} << (2 * m))) {
        throw UsageError("indicator size does not match Q^m");
    }
    std::vector<std::uint64_t> packed;
    for (std::size_t i = 0; i < membership.size(); ++i) {
        if (membership[i]) packed.push_back(i);
    }
    return {m, std::move(packed)};
}

std::optional<std::size_t> QuaternaryCode::find(const QuaternaryWord& w) const {
    if (w.length() != m_) throw UsageError("quaternary word length mismatch");
    const auto it = std::lower_bound(packed_.begin(), packed_.end(), w.packed());
    if (it == packed_.end() || *it != w.packed()) return std::nullopt;
    return static_cast<std::size_t>(it - packed_.begin());
}

bool QuaternaryCode::contains(const QuaternaryWord& w) const { return find(w).has_value(); }

std::vector<std::uint8_t> QuaternaryCode::indicator() const {
    if (m_ > kMaxIndicatorLength) throw BudgetError("Q^m too large for an indicator table");
    std::vector<std::uint8_t> ind(std::size_t{1} << (2 * m_), 0);
    for (const auto p : packed_) ind[p] = 1;
    return ind;
}

QuaternaryCode complement(const QuaternaryCode& code) {
    auto ind = code.indicator();
    for (auto& v : ind) v ^= 1U;
    return QuaternaryCode::from_indicator(code.m(), ind);
}

QuaternaryCode with_suffix(const QuaternaryCode& code, int symbol) {
    if (symbol < 0 || symbol > 3) throw UsageError("quaternary digit out of range");
    std::vector<std::uint64_t> packed;
    packed.reserve(code.size());
    for (const auto p : code.raw()) packed.push_back((p << 2) | static_cast<std::uint64_t>(symbol));
    return {code.m() + 1, std::move(packed)};
}

QuaternaryCode set_union(const QuaternaryCode& a, const QuaternaryCode& b) {
    if (a.m() != b.m()) throw UsageError("quaternary code length mismatch");
    std::vector<std::uint64_t> packed(a.raw().begin(), a.raw().end());
    packed.insert(packed.end(), b.raw().begin(), b.raw().end());
    return {a.m(), std::move(packed)};
}

}  // namespace perfcode
