#include "perfcode/code.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

void check_length(int length) {
    if (length < 1 || length > kMaxBinaryLength) {
        throw UsageError("code length " + std::to_string(length) + " outside 1.." + std::to_string(kMaxBinaryLength));
    }
}

void require_same_length(int a, int b) {
    if (a != b) throw UsageError("code length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Sort patterns in lexicographic word order by sorting their keys.
void lex_sort_unique(std::vector<std::uint64_t>& bits, int length) {
    for (auto& b : bits) b = lex_key(b, length);
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    for (auto& b : bits) b = lex_key(b, length);
}

struct LexLess {
    int length;
    bool operator()(std::uint64_t a, std::uint64_t b) const { return lex_key(a, length) < lex_key(b, length); }
};

}  // namespace

BinaryCode::BinaryCode(int length) : length_(length) { check_length(length); }

BinaryCode::BinaryCode(int length, std::vector<std::uint64_t> bits) : length_(length), bits_(std::move(bits)) {
    check_length(length);
    const std::uint64_t mask = low_mask(length);
    for (const auto b : bits_) {
        if ((b & ~mask) != 0) throw UsageError("codeword has bits beyond the code length");
    }
    lex_sort_unique(bits_, length_);
}

BinaryCode BinaryCode::from_words(int length, std::span<const BinaryWord> words) {
    std::vector<std::uint64_t> bits;
    bits.reserve(words.size());
    for (const auto& w : words) {
        require_same_length(length, w.length());
        bits.push_back(w.bits());
    }
    return {length, std::move(bits)};
}

std::optional<std::size_t> BinaryCode::find(const BinaryWord& w) const {
    require_same_length(length_, w.length());
    const auto it = std::lower_bound(bits_.begin(), bits_.end(), w.bits(), LexLess{length_});
    if (it == bits_.end() || *it != w.bits()) return std::nullopt;
    return static_cast<std::size_t>(it - bits_.begin());
}

bool BinaryCode::contains(const BinaryWord& w) const { return find(w).has_value(); }

MultisetCode::MultisetCode(int length) : length_(length) { check_length(length); }

MultisetCode::MultisetCode(int length, std::vector<Entry> entries) : length_(length) {
    check_length(length);
    const std::uint64_t mask = low_mask(length);
    for (auto& e : entries) {
        if ((e.bits & ~mask) != 0) throw UsageError("codeword has bits beyond the code length");
        e.bits = lex_key(e.bits, length);
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.bits < b.bits; });
    for (const auto& e : entries) {
        if (e.multiplicity == 0) continue;
        if (!entries_.empty() && entries_.back().bits == e.bits) {
            entries_.back().multiplicity += e.multiplicity;
        } else {
            entries_.push_back(e);
        }
        total_ += e.multiplicity;
    }
    for (auto& e : entries_) e.bits = lex_key(e.bits, length);
}

MultisetCode MultisetCode::from_set(const BinaryCode& code, std::uint32_t multiplicity) {
    std::vector<Entry> entries;
    entries.reserve(code.size());
    for (const auto b : code.raw()) entries.push_back({b, multiplicity});
    return {code.length(), std::move(entries)};
}

std::uint32_t MultisetCode::multiplicity(const BinaryWord& w) const {
    require_same_length(length_, w.length());
    const LexLess less{length_};
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), w.bits(),
                                     [&](const Entry& e, std::uint64_t b) { return less(e.bits, b); });
    return (it != entries_.end() && it->bits == w.bits()) ? it->multiplicity : 0;
}

std::uint32_t MultisetCode::max_multiplicity() const noexcept {
    std::uint32_t best = 0;
    for (const auto& e : entries_) best = std::max(best, e.multiplicity);
    return best;
}

BinaryCode MultisetCode::support() const {
    std::vector<std::uint64_t> bits;
    bits.reserve(entries_.size());
    for (const auto& e : entries_) bits.push_back(e.bits);
    return {length_, std::move(bits)};
}

MultisetCode multiset_union(const MultisetCode& a, const MultisetCode& b) {
    require_same_length(a.length(), b.length());
    std::vector<MultisetCode::Entry> entries(a.entries().begin(), a.entries().end());
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return {a.length(), std::move(entries)};
}

BinaryCode set_union(const BinaryCode& a, const BinaryCode& b) {
    require_same_length(a.length(), b.length());
    std::vector<std::uint64_t> bits(a.raw().begin(), a.raw().end());
    bits.insert(bits.end(), b.raw().begin(), b.raw().end());
    return {a.length(), std::move(bits)};
}

BinaryCode set_difference(const BinaryCode& a, const BinaryCode& b) {
    require_same_length(a.length(), b.length());
    std::vector<std::uint64_t> bits;
    std::set_difference(a.raw().begin(), a.raw().end(), b.raw().begin(), b.raw().end(), std::back_inserter(bits),
                        LexLess{a.length()});
    return {a.length(), std::move(bits)};
}

bool disjoint(const BinaryCode& a, const BinaryCode& b) {
    require_same_length(a.length(), b.length());
    const LexLess less{a.length()};
    auto i = a.raw().begin();
    auto j = b.raw().begin();
    while (i != a.raw().end() && j != b.raw().end()) {
        if (*i == *j) return false;
        if (less(*i, *j)) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

BinaryCode translate(const BinaryCode& code, const BinaryWord& shift) {
    require_same_length(code.length(), shift.length());
    std::vector<std::uint64_t> bits(code.raw().begin(), code.raw().end());
    for (auto& b : bits) b ^= shift.bits();
    return {code.length(), std::move(bits)};
}

MultisetCode translate(const MultisetCode& code, const BinaryWord& shift) {
    require_same_length(code.length(), shift.length());
    std::vector<MultisetCode::Entry> entries(code.entries().begin(), code.entries().end());
    for (auto& e : entries) e.bits ^= shift.bits();
    return {code.length(), std::move(entries)};
}

BinaryCode with_suffix(const BinaryCode& code, std::string_view suffix) {
    const BinaryWord tail = BinaryWord::parse(suffix);
    const int length = code.length() + tail.length();
    check_length(length);
    std::vector<std::uint64_t> bits;
    bits.reserve(code.size());
    for (const auto b : code.raw()) bits.push_back(b | (tail.bits() << code.length()));
    return {length, std::move(bits)};
}

BinaryCode with_suffix_removed(const MultisetCode& code, std::string_view suffix) {
    const BinaryWord tail = BinaryWord::parse(suffix);
    const int length = code.length() - tail.length();
    if (length < 1) throw UsageError("suffix is not shorter than the code length");
    std::vector<std::uint64_t> bits;
    for (const auto& e : code.entries()) {
        if ((e.bits >> length) == tail.bits()) bits.push_back(e.bits & low_mask(length));
    }
    return {length, std::move(bits)};
}

WordIndex::WordIndex(int length, std::span<const std::uint64_t> bits) : length_(length) {
    if (bits.size() >= npos) throw BudgetError("too many words to index");
    if (length <= kDenseLimit) {
        dense_.assign(std::size_t{1} << length, npos);
        for (std::size_t i = 0; i < bits.size(); ++i) dense_[bits[i]] = static_cast<std::uint32_t>(i);
    } else {
        sparse_.reserve(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) sparse_.emplace(bits[i], static_cast<std::uint32_t>(i));
    }
}

std::uint32_t WordIndex::find(std::uint64_t bits) const {
    if (!dense_.empty()) return dense_[bits];
    const auto it = sparse_.find(bits);
    return it == sparse_.end() ? npos : it->second;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

// Calls f(mask) for every n-bit mask of weight w (Gosper's hack); stops when f returns true.
template <class F>
bool any_mask_of_weight(int n, int w, F&& f) {
    if (w == 0) return f(std::uint64_t{0});
    if (w > n) return false;
    std::uint64_t mask = low_mask(w);
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        if (f(mask)) return true;
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return false;
}

bool pairwise_cheaper(std::size_t size, int n, int radius) {
    std::uint64_t probes = 0;
    for (int d = 1; d <= radius; ++d) probes += binomial(n, d);
    return size / 2 < probes;
}

}  // namespace

bool has_min_distance(const BinaryCode& code, int d) {
    if (code.size() < 2 || d <= 1) return true;
    const auto bits = code.raw();
    const int n = code.length();
    if (pairwise_cheaper(bits.size(), n, d - 1)) {
        for (std::size_t i = 0; i < bits.size(); ++i) {
            for (std::size_t j = i + 1; j < bits.size(); ++j) {
                if (std::popcount(bits[i] ^ bits[j]) < d) return false;
            }
        }
        return true;
    }
    const WordIndex index(n, bits);
    for (const auto b : bits) {
        for (int r = 1; r < d; ++r) {
            if (any_mask_of_weight(n, r, [&](std::uint64_t mask) { return index.find(b ^ mask) != WordIndex::npos; })) {
                return false;
            }
        }
    }
    return true;
}

std::optional<int> code_distance(const BinaryCode& code) {
    if (code.size() < 2) return std::nullopt;
    const auto bits = code.raw();
    const int n = code.length();
    if (pairwise_cheaper(bits.size(), n, n)) {
        int best = n;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            for (std::size_t j = i + 1; j < bits.size(); ++j) best = std::min(best, std::popcount(bits[i] ^ bits[j]));
        }
        return best;
    }
    for (int d = 2; d <= n; ++d) {
        if (!has_min_distance(code, d)) return d - 1;
    }
    return n;
}

std::vector<std::int64_t> weight_distribution(const BinaryWord& x, const BinaryCode& code) {
    require_same_length(x.length(), code.length());
    std::vector<std::int64_t> dist(static_cast<std::size_t>(code.length()) + 1, 0);
    for (const auto b : code.raw()) ++dist[static_cast<std::size_t>(std::popcount(b ^ x.bits()))];
    return dist;
}

std::vector<std::int64_t> weight_distribution(const BinaryWord& x, const MultisetCode& code) {
    require_same_length(x.length(), code.length());
    std::vector<std::int64_t> dist(static_cast<std::size_t>(code.length()) + 1, 0);
    for (const auto& e : code.entries()) dist[static_cast<std::size_t>(std::popcount(e.bits ^ x.bits()))] += e.multiplicity;
    return dist;
}

Checked<BinaryWord> is_antipodal(const MultisetCode& code) {
    for (std::size_t i = 0; i < code.distinct_size(); ++i) {
        const BinaryWord x = code.word(i);
        const BinaryWord y = x.complement();
        if (code.multiplicity(y) != code.entries()[i].multiplicity) return Checked<BinaryWord>::fail(y);
    }
    return Checked<BinaryWord>::pass();
}

Checked<BinaryWord> is_antipodal(const BinaryCode& code) { return is_antipodal(MultisetCode::from_set(code)); }

}  // namespace perfcode
