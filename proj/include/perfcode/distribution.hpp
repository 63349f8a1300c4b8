#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "perfcode/code.hpp"

namespace perfcode {

using Rational = boost::rational<std::int64_t>;

// Distance distributions of a code Cj seen from the words of a code Ci.
//   per_word(x)[l] = number of words of Cj at distance l from x, for x in Ci
//   mean(l)        = average of per_word(x)[l] over x in Ci, as an exact fraction
class DistributionTable {
public:
    DistributionTable(BinaryCode from, std::vector<std::int64_t> counts);

    int n() const noexcept { return from_.length(); }
    const BinaryCode& from() const noexcept { return from_; }

    std::span<const std::int64_t> per_word(std::size_t index) const;
    std::span<const std::int64_t> per_word(const BinaryWord& x) const;
    const std::vector<Rational>& mean() const noexcept { return mean_; }
    // Out-of-range levels read as zero.
    Rational mean(int l) const;

private:
    BinaryCode from_;
    std::vector<std::int64_t> counts_;
    std::vector<Rational> mean_;
};

DistributionTable mean_distribution(const BinaryCode& from, const BinaryCode& to);

}  // namespace perfcode
