#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "perfcode/word.hpp"

namespace perfcode {

// A set of words of Q^m kept in lexicographic order without duplicates.
class QuaternaryCode {
public:
    QuaternaryCode() = default;
    explicit QuaternaryCode(int m);
    QuaternaryCode(int m, std::vector<std::uint64_t> packed);

    static QuaternaryCode from_words(int m, std::span<const QuaternaryWord> words);
    // Words x with membership[rank(x)] set, where rank is the lexicographic index in Q^m.
    static QuaternaryCode from_indicator(int m, std::span<const std::uint8_t> membership);

    int m() const noexcept { return m_; }
    std::size_t size() const noexcept { return packed_.size(); }
    bool empty() const noexcept { return packed_.empty(); }
    std::span<const std::uint64_t> raw() const noexcept { return packed_; }
    QuaternaryWord operator[](std::size_t i) const { return {m_, packed_[i]}; }
    auto words() const {
        return packed_ | std::views::transform([m = m_](std::uint64_t p) { return QuaternaryWord{m, p}; });
    }

    bool contains(const QuaternaryWord& w) const;
    std::optional<std::size_t> find(const QuaternaryWord& w) const;
    // One byte per vertex of Q^m; requires m <= 12.
    std::vector<std::uint8_t> indicator() const;

    friend bool operator==(const QuaternaryCode&, const QuaternaryCode&) = default;

private:
    int m_ = 0;
    std::vector<std::uint64_t> packed_;
};

QuaternaryCode complement(const QuaternaryCode& code);
// M -> M s, appending the symbol s to every word.
QuaternaryCode with_suffix(const QuaternaryCode& code, int symbol);
QuaternaryCode set_union(const QuaternaryCode& a, const QuaternaryCode& b);

}  // namespace perfcode
