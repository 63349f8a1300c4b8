#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace perfcode {

inline constexpr int kMaxBinaryLength = 63;
inline constexpr int kMaxQuaternaryLength = 31;

constexpr std::uint64_t low_mask(int length) noexcept {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

constexpr std::uint64_t reverse_bits(std::uint64_t v) noexcept {
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    return (v >> 32) | (v << 32);
}

// Maps a bit pattern (bit i = coordinate i+1) to an integer whose natural order is the
// lexicographic order of the word read as x1 x2 ... xn. The map is an involution.
constexpr std::uint64_t lex_key(std::uint64_t bits, int length) noexcept {
    return length == 0 ? 0 : reverse_bits(bits) >> (64 - length);
}

// A vertex of the n-cube H^n, 1 <= n <= 63. Bit i of the pattern is coordinate i+1.
class BinaryWord {
public:
    constexpr BinaryWord() = default;
    BinaryWord(int length, std::uint64_t bits);

    static BinaryWord zero(int length) { return {length, 0}; }
    static BinaryWord ones(int length) { return {length, low_mask(length)}; }
    static BinaryWord from_lex_key(int length, std::uint64_t key) { return {length, perfcode::lex_key(key, length)}; }
    // Characters '0'/'1', coordinate 1 first.
    static BinaryWord parse(std::string_view text);

    constexpr int length() const noexcept { return length_; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }
    int weight() const noexcept { return std::popcount(bits_); }
    std::uint64_t lex_key() const noexcept { return perfcode::lex_key(bits_, length_); }

    // 1-based coordinate access.
    bool at(int coordinate) const;
    BinaryWord flipped(int coordinate) const;
    BinaryWord complement() const noexcept { return BinaryWord{length_, bits_ ^ low_mask(length_), Unchecked{}}; }
    // Concatenation x y: y's coordinates follow x's.
    BinaryWord concat(const BinaryWord& tail) const;
    BinaryWord concat(std::string_view tail) const { return concat(parse(tail)); }
    // Drops the last `count` coordinates.
    BinaryWord truncated(int count) const;

    BinaryWord operator+(const BinaryWord& other) const;

    std::string to_string() const;

    // Comparing words of different lengths is a usage error.
    friend bool operator==(const BinaryWord& a, const BinaryWord& b);
    friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

private:
    struct Unchecked {};
    constexpr BinaryWord(int length, std::uint64_t bits, Unchecked) : bits_(bits), length_(length) {}

    std::uint64_t bits_ = 0;
    int length_ = 0;
};

int hamming_distance(const BinaryWord& x, const BinaryWord& y);

// A vertex of Q^m over {0,1,2,3}, 1 <= m <= 31. Digits are packed two bits each with
// coordinate 1 most significant, so the packed value is also the word's lexicographic rank.
class QuaternaryWord {
public:
    constexpr QuaternaryWord() = default;
    QuaternaryWord(int length, std::uint64_t packed);

    static QuaternaryWord parse(std::string_view text);

    constexpr int length() const noexcept { return length_; }
    constexpr std::uint64_t packed() const noexcept { return packed_; }

    // 1-based coordinate access.
    int digit(int coordinate) const;
    QuaternaryWord with_digit(int coordinate, int value) const;
    QuaternaryWord append(int value) const;

    std::string to_string() const;

    friend bool operator==(const QuaternaryWord& a, const QuaternaryWord& b);
    friend std::strong_ordering operator<=>(const QuaternaryWord& a, const QuaternaryWord& b);

private:
    std::uint64_t packed_ = 0;
    int length_ = 0;
};

int hamming_distance(const QuaternaryWord& x, const QuaternaryWord& y);

}  // namespace perfcode
