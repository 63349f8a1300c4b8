#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "perfcode/word.hpp"

namespace perfcode {

// Result of a yes/no property check that names a counterexample when the answer is no.
template <class Witness>
struct Checked {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept { return holds; }

    static Checked pass() { return {true, std::nullopt}; }
    static Checked fail(Witness w) { return {false, std::move(w)}; }
};

// A set of binary words of one length, kept sorted lexicographically without duplicates.
class BinaryCode {
public:
    BinaryCode() = default;
    explicit BinaryCode(int length);
    // Sorts and removes duplicates.
    BinaryCode(int length, std::vector<std::uint64_t> bits);

    static BinaryCode from_words(int length, std::span<const BinaryWord> words);

    int length() const noexcept { return length_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    BinaryWord operator[](std::size_t i) const { return {length_, bits_[i]}; }
    // Bit patterns in lexicographic word order.
    std::span<const std::uint64_t> raw() const noexcept { return bits_; }
    auto words() const {
        return bits_ | std::views::transform([n = length_](std::uint64_t b) { return BinaryWord{n, b}; });
    }

    bool contains(const BinaryWord& w) const;
    // Position of `w` in lexicographic order, if present.
    std::optional<std::size_t> find(const BinaryWord& w) const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    int length_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A multiset of equal-length binary words. Entries are sorted lexicographically, unique as
// keys, and carry a positive multiplicity.
class MultisetCode {
public:
    struct Entry {
        std::uint64_t bits;
        std::uint32_t multiplicity;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    MultisetCode() = default;
    explicit MultisetCode(int length);
    // Merges repeated words by summing their multiplicities; zero multiplicities are dropped.
    MultisetCode(int length, std::vector<Entry> entries);

    static MultisetCode from_set(const BinaryCode& code, std::uint32_t multiplicity = 1);

    int length() const noexcept { return length_; }
    std::size_t distinct_size() const noexcept { return entries_.size(); }
    std::uint64_t total_size() const noexcept { return total_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const Entry> entries() const noexcept { return entries_; }
    BinaryWord word(std::size_t i) const { return {length_, entries_[i].bits}; }

    std::uint32_t multiplicity(const BinaryWord& w) const;
    std::uint32_t max_multiplicity() const noexcept;
    BinaryCode support() const;

    friend bool operator==(const MultisetCode&, const MultisetCode&) = default;

private:
    int length_ = 0;
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

MultisetCode multiset_union(const MultisetCode& a, const MultisetCode& b);

// Set algebra and coordinate manipulation on codes.
BinaryCode set_union(const BinaryCode& a, const BinaryCode& b);
BinaryCode set_difference(const BinaryCode& a, const BinaryCode& b);
bool disjoint(const BinaryCode& a, const BinaryCode& b);
BinaryCode translate(const BinaryCode& code, const BinaryWord& shift);
MultisetCode translate(const MultisetCode& code, const BinaryWord& shift);
// C -> C s, appending the fixed suffix `s` to every word.
BinaryCode with_suffix(const BinaryCode& code, std::string_view suffix);
// Words of `code` whose last coordinates equal `suffix`, with the suffix removed.
BinaryCode with_suffix_removed(const MultisetCode& code, std::string_view suffix);

// Lookup from word pattern to a dense index. Uses a direct table for short lengths and a
// hash map otherwise.
class WordIndex {
public:
    static constexpr std::uint32_t npos = 0xFFFFFFFFU;

    WordIndex(int length, std::span<const std::uint64_t> bits);

    std::uint32_t find(std::uint64_t bits) const;

private:
    static constexpr int kDenseLimit = 22;

    int length_;
    std::vector<std::uint32_t> dense_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

std::uint64_t binomial(int n, int k);

// Minimum distance over distinct codewords; empty when the code has fewer than two words.
std::optional<int> code_distance(const BinaryCode& code);
// True when every two distinct codewords are at distance >= d.
bool has_min_distance(const BinaryCode& code, int d);

// Entry l counts codewords (with multiplicity) at distance l from x.
std::vector<std::int64_t> weight_distribution(const BinaryWord& x, const BinaryCode& code);
std::vector<std::int64_t> weight_distribution(const BinaryWord& x, const MultisetCode& code);

// On failure the witness is a word y = x + 1 whose multiplicity differs from that of x,
// for the lexicographically first such x.
Checked<BinaryWord> is_antipodal(const MultisetCode& code);
Checked<BinaryWord> is_antipodal(const BinaryCode& code);

}  // namespace perfcode
