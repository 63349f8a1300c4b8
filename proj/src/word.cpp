#include "perfcode/word.hpp"

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

void require_same_length(int a, int b) {
    if (a != b) {
        throw UsageError("word length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

void require_coordinate(int coordinate, int length) {
    if (coordinate < 1 || coordinate > length) {
        throw UsageError("coordinate " + std::to_string(coordinate) + " outside 1.." + std::to_string(length));
    }
}

}  // namespace

BinaryWord::BinaryWord(int length, std::uint64_t bits) : bits_(bits), length_(length) {
    if (length < 1 || length > kMaxBinaryLength) {
        throw UsageError("binary word length " + std::to_string(length) + " outside 1.." +
                         std::to_string(kMaxBinaryLength));
    }
    if ((bits & ~low_mask(length)) != 0) throw UsageError("bits set beyond word length");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBinaryLength)) {
        throw UsageError("binary word must have 1.." + std::to_string(kMaxBinaryLength) + " symbols");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (c != '0') {
            throw UsageError(std::string("invalid binary symbol '") + c + "'");
        }
    }
    return {static_cast<int>(text.size()), bits};
}

bool BinaryWord::at(int coordinate) const {
    require_coordinate(coordinate, length_);
    return (bits_ >> (coordinate - 1)) & 1U;
}

BinaryWord BinaryWord::flipped(int coordinate) const {
    require_coordinate(coordinate, length_);
    return {length_, bits_ ^ (std::uint64_t{1} << (coordinate - 1)), Unchecked{}};
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
    return {length_ + tail.length_, bits_ | (tail.bits_ << length_)};
}

BinaryWord BinaryWord::truncated(int count) const {
    if (count < 0 || count >= length_) throw UsageError("cannot drop " + std::to_string(count) + " coordinates");
    const int length = length_ - count;
    return {length, bits_ & low_mask(length), Unchecked{}};
}

BinaryWord BinaryWord::operator+(const BinaryWord& other) const {
    require_same_length(length_, other.length_);
    return {length_, bits_ ^ other.bits_, Unchecked{}};
}

std::string BinaryWord::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

bool operator==(const BinaryWord& a, const BinaryWord& b) {
    require_same_length(a.length_, b.length_);
    return a.bits_ == b.bits_;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    require_same_length(a.length_, b.length_);
    return a.lex_key() <=> b.lex_key();
}

int hamming_distance(const BinaryWord& x, const BinaryWord& y) {
    require_same_length(x.length(), y.length());
    return std::popcount(x.bits() ^ y.bits());
}

QuaternaryWord::QuaternaryWord(int length, std::uint64_t packed) : packed_(packed), length_(length) {
    if (length < 1 || length > kMaxQuaternaryLength) {
        throw UsageError("quaternary word length " + std::to_string(length) + " outside 1.." +
                         std::to_string(kMaxQuaternaryLength));
    }
    if ((packed & ~low_mask(2 * length)) != 0) throw UsageError("digits set beyond word length");
}

QuaternaryWord QuaternaryWord::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQuaternaryLength)) {
        throw UsageError("quaternary word must have 1.." + std::to_string(kMaxQuaternaryLength) + " symbols");
    }
    std::uint64_t packed = 0;
    for (const char c : text) {
        if (c < '0' || c > '3') throw UsageError(std::string("invalid quaternary symbol '") + c + "'");
        packed = (packed << 2) | static_cast<std::uint64_t>(c - '0');
    }
    return {static_cast<int>(text.size()), packed};
}

int QuaternaryWord::digit(int coordinate) const {
    require_coordinate(coordinate, length_);
    return static_cast<int>((packed_ >> (2 * (length_ - coordinate))) & 3U);
}

QuaternaryWord QuaternaryWord::with_digit(int coordinate, int value) const {
    require_coordinate(coordinate, length_);
    if (value < 0 || value > 3) throw UsageError("quaternary digit out of range");
    const int shift = 2 * (length_ - coordinate);
    const std::uint64_t cleared = packed_ & ~(std::uint64_t{3} << shift);
    return {length_, cleared | (static_cast<std::uint64_t>(value) << shift)};
}

QuaternaryWord QuaternaryWord::append(int value) const {
    if (value < 0 || value > 3) throw UsageError("quaternary digit out of range");
    return {length_ + 1, (packed_ << 2) | static_cast<std::uint64_t>(value)};
}

std::string QuaternaryWord::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 1; i <= length_; ++i) s[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + digit(i));
    return s;
}

bool operator==(const QuaternaryWord& a, const QuaternaryWord& b) {
    require_same_length(a.length_, b.length_);
    return a.packed_ == b.packed_;
}

std::strong_ordering operator<=>(const QuaternaryWord& a, const QuaternaryWord& b) {
    require_same_length(a.length_, b.length_);
    return a.packed_ <=> b.packed_;
}

int hamming_distance(const QuaternaryWord& x, const QuaternaryWord& y) {
    require_same_length(x.length(), y.length());
    const std::uint64_t diff = x.packed() ^ y.packed();
    return std::popcount((diff | (diff >> 1)) & 0x5555555555555555ULL);
}

}  // namespace perfcode
