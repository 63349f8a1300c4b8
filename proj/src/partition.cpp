#include "perfcode/partition.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::vector<int> row_of(std::span<const std::uint8_t> labels, std::size_t parts, int n, std::uint64_t x) {
    std::vector<int> row(parts, 0);
    for (int k = 0; k < n; ++k) ++row[labels[x ^ (std::uint64_t{1} << k)]];
    return row;
}

BinaryCode collect_label(std::span<const std::uint8_t> labels, int n, std::uint8_t label) {
    std::vector<std::uint64_t> bits;
    for (std::uint64_t v = 0; v < labels.size(); ++v) {
        if (labels[v] == label) bits.push_back(v);
    }
    return {n, std::move(bits)};
}

}  // namespace

Partition::Partition(int n, std::vector<BinaryCode> parts) : n_(n), parts_(std::move(parts)) {
    if (n < 1 || n > kMaxPartitionLength) {
        throw BudgetError("partitions are limited to n <= " + std::to_string(kMaxPartitionLength));
    }
    if (parts_.size() < 2 || parts_.size() > 255) throw UsageError("a partition needs 2..255 parts");
    constexpr std::uint8_t kUnset = 0xFF;
    labels_.assign(std::size_t{1} << n, kUnset);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& part = parts_[i];
        if (part.length() != n) throw UsageError("part " + std::to_string(i + 1) + " has the wrong length");
        if (part.empty()) throw PreconditionError("part " + std::to_string(i + 1) + " is empty");
        for (const auto b : part.raw()) {
            if (labels_[b] != kUnset) {
                throw PreconditionError("parts " + std::to_string(labels_[b] + 1) + " and " + std::to_string(i + 1) +
                                        " share the word " + BinaryWord(n, b).to_string());
            }
            labels_[b] = static_cast<std::uint8_t>(i);
        }
    }
    for (std::uint64_t key = 0; key < labels_.size(); ++key) {
        const std::uint64_t v = lex_key(key, n);
        if (labels_[v] == kUnset) {
            throw PreconditionError("the parts do not cover " + BinaryWord(n, v).to_string());
        }
    }
}

std::size_t Partition::part_of(const BinaryWord& x) const {
    if (x.length() != n_) throw UsageError("word length does not match the partition");
    return labels_[x.bits()];
}

std::ostream& operator<<(std::ostream& os, const ParameterMatrix& s) {
    for (const auto& row : s.rows) os << join(row) << '\n';
    return os;
}

ParameterMatrix four_part_matrix(int n) {
    return {{{0, 1, n - 1, 0}, {1, 0, n - 1, 0}, {1, 1, n - 4, 2}, {0, 0, n - 1, 1}}};
}

ParameterMatrix merged_matrix(int n) { return {{{1, n - 1, 0}, {2, n - 4, 2}, {0, n - 1, 1}}}; }

ParameterMatrix refined_matrix(int n) {
    return {{{0, 1, n - 1, 0, 0},
             {1, 0, n - 1, 0, 0},
             {1, 1, n - 4, 1, 1},
             {0, 0, n - 1, 0, 1},
             {0, 0, n - 1, 1, 0}}};
}

ParameterMatrix extended_matrix(int extended_length) {
    const int n = extended_length;
    return {{{0, n, 0, 0}, {2, 0, n - 2, 0}, {0, n - 2, 0, 2}, {0, 0, n, 0}}};
}

ParameterMatrix perfect_code_matrix(int n) { return {{{0, n}, {1, n - 1}}}; }

std::vector<int> neighbour_row(const Partition& partition, const BinaryWord& x) {
    if (x.length() != partition.n()) throw UsageError("word length does not match the partition");
    return row_of(partition.labels(), partition.part_count(), partition.n(), x.bits());
}

std::variant<ParameterMatrix, EquitableWitness> compute_parameters(const Partition& partition) {
    const int n = partition.n();
    const auto labels = partition.labels();
    const auto r = partition.part_count();
    ParameterMatrix s;
    for (const auto& part : partition.parts()) s.rows.push_back(row_of(labels, r, n, part.raw().front()));
    for (std::uint64_t key = 0; key < labels.size(); ++key) {
        const std::uint64_t v = lex_key(key, n);
        auto row = row_of(labels, r, n, v);
        if (row != s.rows[labels[v]]) {
            return EquitableWitness{BinaryWord(n, v), labels[v], std::move(row), s.rows[labels[v]]};
        }
    }
    return s;
}

Checked<EquitableWitness> verify_equitable(const Partition& partition, const ParameterMatrix& s) {
    const auto r = partition.part_count();
    if (s.size() != r) throw UsageError("parameter matrix has " + std::to_string(s.size()) + " rows, expected " +
                                        std::to_string(r));
    for (const auto& row : s.rows) {
        if (row.size() != r) throw UsageError("parameter matrix is not square");
    }
    const int n = partition.n();
    const auto labels = partition.labels();
    for (std::uint64_t key = 0; key < labels.size(); ++key) {
        const std::uint64_t v = lex_key(key, n);
        auto row = row_of(labels, r, n, v);
        if (row != s.rows[labels[v]]) {
            return Checked<EquitableWitness>::fail({BinaryWord(n, v), labels[v], std::move(row), s.rows[labels[v]]});
        }
    }
    return Checked<EquitableWitness>::pass();
}

ShortenedParameters check_doubly_shortened_parameters(const BinaryCode& c1) {
    const int n = c1.length();
    const auto padded = static_cast<unsigned>(n + 3);
    if (!std::has_single_bit(padded) || padded < 8) {
        throw PreconditionError("length " + std::to_string(n) + " is not of the form 2^m - 3 with m >= 3");
    }
    const int m = std::countr_zero(padded);
    if (n - m >= 63 || c1.size() != (std::uint64_t{1} << (n - m))) {
        throw PreconditionError("cardinality " + std::to_string(c1.size()) + " differs from 2^(n-m) = 2^" +
                                std::to_string(n - m));
    }
    if (!has_min_distance(c1, 3)) throw PreconditionError("code distance is less than 3");
    return {n, m};
}

Partition derive_partition(const BinaryCode& c1) {
    const auto [n, m] = check_doubly_shortened_parameters(c1);
    if (n > Partition::kMaxPartitionLength) {
        throw BudgetError("length " + std::to_string(n) + " exceeds the partition budget");
    }
    std::vector<std::uint8_t> label(std::size_t{1} << n, 3);
    const std::uint64_t ones = low_mask(n);
    for (const auto c : c1.raw()) label[c] = 0;
    for (const auto c : c1.raw()) {
        if (label[c ^ ones] == 0) {
            throw PreconditionError("C1 contains the antipodal pair " + BinaryWord(n, c).to_string() + ", " +
                                    BinaryWord(n, c ^ ones).to_string());
        }
        label[c ^ ones] = 1;
    }
    for (const auto c : c1.raw()) {
        for (int k = 0; k < n; ++k) {
            auto& l = label[c ^ (std::uint64_t{1} << k)];
            if (l == 3) l = 2;
        }
    }
    std::vector<BinaryCode> parts;
    for (std::uint8_t p = 0; p < 4; ++p) parts.push_back(collect_label(label, n, p));
    return {n, std::move(parts)};
}

Partition merge_parts(const Partition& partition, std::size_t i, std::size_t j) {
    const auto r = partition.part_count();
    if (i >= r || j >= r) throw UsageError("part index out of range");
    if (i == j) throw UsageError("cannot merge a part with itself");
    std::vector<BinaryCode> parts;
    parts.push_back(set_union(partition.part(i), partition.part(j)));
    for (std::size_t k = 0; k < r; ++k) {
        if (k != i && k != j) parts.push_back(partition.part(k));
    }
    if (parts.size() < 2) throw UsageError("merging would leave a single part");
    return {partition.n(), std::move(parts)};
}

Partition split_refine(const Partition& partition, const BinaryCode& first, const BinaryCode& second) {
    if (partition.part_count() != 4) throw UsageError("split_refine expects a four-part partition");
    const auto& c4 = partition.part(3);
    if (first.length() != c4.length() || second.length() != c4.length()) {
        throw UsageError("split parts have the wrong length");
    }
    if (!disjoint(first, second)) throw PreconditionError("the two split parts intersect");
    if (set_union(first, second) != c4) throw PreconditionError("the split parts do not form C4");
    if (!has_min_distance(first, 3) || !has_min_distance(second, 3)) {
        throw PreconditionError("a split part has code distance below 3");
    }
    return {partition.n(), {partition.part(0), partition.part(1), partition.part(2), first, second}};
}

Partition extend_partition(const Partition& merged) {
    if (merged.part_count() != 3) throw PreconditionError("extend_partition expects the merged partition {C12, C3, C4}");
    const int n = merged.n();
    if (!verify_equitable(merged, merged_matrix(n))) {
        throw PreconditionError("input partition is not equitable with the merged parameters");
    }
    const int extended = n + 1;
    if (extended > Partition::kMaxPartitionLength) throw BudgetError("extended length exceeds the partition budget");

    auto extend = [&](const BinaryCode& part, unsigned parity_offset) {
        std::vector<std::uint64_t> bits;
        bits.reserve(part.size());
        for (const auto b : part.raw()) {
            const auto check = static_cast<std::uint64_t>((std::popcount(b) + parity_offset) & 1U);
            bits.push_back(b | (check << n));
        }
        return BinaryCode(extended, std::move(bits));
    };
    const BinaryCode g1 = extend(merged.part(0), 0);
    const BinaryCode g4 = extend(merged.part(2), 1);

    constexpr std::uint8_t kFree = 0xFF;
    std::vector<std::uint8_t> label(std::size_t{1} << extended, kFree);
    for (const auto b : g1.raw()) label[b] = 0;
    for (const auto b : g4.raw()) label[b] = 3;
    auto mark_ball = [&](const BinaryCode& centre, std::uint8_t part) {
        for (const auto b : centre.raw()) {
            for (int k = 0; k < extended; ++k) {
                auto& l = label[b ^ (std::uint64_t{1} << k)];
                if (l == kFree) {
                    l = part;
                } else if (l != part && l != 0 && l != 3) {
                    throw PreconditionError("the radius-1 neighbourhoods of G1 and G4 overlap");
                }
            }
        }
    };
    mark_ball(g1, 1);
    mark_ball(g4, 2);
    for (std::size_t v = 0; v < label.size(); ++v) {
        if (label[v] == kFree) throw PreconditionError("vertex outside G1..G4 after extension");
    }
    return {extended, {g1, collect_label(label, extended, 1), collect_label(label, extended, 2), g4}};
}

DistributionTables::DistributionTables(const Partition& partition) : parts_(partition.part_count()) {
    tables_.reserve(parts_ * parts_);
    for (std::size_t i = 0; i < parts_; ++i) {
        for (std::size_t j = 0; j < parts_; ++j) tables_.push_back(mean_distribution(partition.part(i), partition.part(j)));
    }
}

bool RelationReport::ok() const {
    return failures.empty() && std::all_of(fixed_values.begin(), fixed_values.end(), [](const auto& c) { return c.holds; });
}

RelationReport check_distribution_relations(const Partition& partition, const DistributionTables& tables) {
    if (partition.part_count() != 4 || tables.part_count() != 4) {
        throw UsageError("distribution relations need the four-part partition");
    }
    const int n = partition.n();
    RelationReport report;
    report.n = n;
    auto expect = [&](const char* name, int i, int j, int l, Rational lhs, Rational rhs) {
        if (lhs != rhs) report.failures.push_back({name, i + 1, j + 1, l, lhs, rhs});
    };
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& t1 = tables.at(i, 0);
        const auto& t2 = tables.at(i, 1);
        const auto& t3 = tables.at(i, 2);
        const auto& t4 = tables.at(i, 3);
        const int ii = static_cast<int>(i);
        for (int l = 0; l <= n; ++l) {
            expect("antipodal-shift", ii, 1, l, t2.mean(l), t1.mean(n - l));
            expect("neighbour-count", ii, 2, l, t3.mean(l),
                   Rational(n - l + 1) * t1.mean(l - 1) + Rational(l + 1) * t1.mean(l + 1) - t2.mean(l));
            expect("level-sum", ii, 3, l, t4.mean(l),
                   Rational(static_cast<std::int64_t>(binomial(n, l))) - t1.mean(l) - t2.mean(l) - t3.mean(l));
        }
        for (std::size_t j = 0; j < 4; ++j) {
            const auto size_i = static_cast<std::int64_t>(partition.part(i).size());
            const auto size_j = static_cast<std::int64_t>(partition.part(j).size());
            for (int l = 0; l <= n; ++l) {
                expect("pair-count", ii, static_cast<int>(j), l, Rational(size_i) * tables.at(i, j).mean(l),
                       Rational(size_j) * tables.at(j, i).mean(l));
            }
        }
    }

    auto value = [&](const char* name, std::size_t i, std::size_t j, int l, Rational expected) {
        const Rational actual = tables.at(i, j).mean(l);
        std::ostringstream detail;
        detail << "expected " << expected << ", got " << actual;
        report.fixed_values.push_back({name, actual == expected, detail.str()});
    };
    value("A11[n]", 0, 0, n, Rational(0));
    value("A11[n-1]", 0, 0, n - 1, Rational(1));
    value("A24[1]", 1, 3, 1, Rational(0));
    value("A42[1]", 3, 1, 1, Rational(0));
    value("A44[1]", 3, 3, 1, Rational(1));
    value("A34[1]", 2, 3, 1, Rational(2));

    const auto& t34 = tables.at(2, 3);
    std::optional<std::size_t> bad;
    for (std::size_t k = 0; k < partition.part(2).size() && !bad; ++k) {
        if (t34.per_word(k)[1] != 2) bad = k;
    }
    report.fixed_values.push_back(
        {"A4[1](x) = 2 on C3", !bad,
         bad ? "fails at " + partition.part(2)[*bad].to_string()
             : "all " + std::to_string(partition.part(2).size()) + " words"});
    return report;
}

RelationReport check_distribution_relations(const BinaryCode& c1) {
    const Partition partition = derive_partition(c1);
    return check_distribution_relations(partition, DistributionTables(partition));
}

Checked<InvarianceMismatch> invariance_check(std::span<const BinaryCode> codes) {
    if (codes.empty()) throw UsageError("invariance_check needs at least one code");
    const int n = check_doubly_shortened_parameters(codes.front()).n;
    for (const auto& c : codes) {
        if (check_doubly_shortened_parameters(c).n != n) throw UsageError("codes have different parameters");
    }
    const Partition reference_partition = derive_partition(codes.front());
    const DistributionTables reference(reference_partition);
    for (std::size_t k = 1; k < codes.size(); ++k) {
        const Partition partition = derive_partition(codes[k]);
        const DistributionTables tables(partition);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                for (int l = 0; l <= n; ++l) {
                    const Rational expected = reference.at(i, j).mean(l);
                    const Rational actual = tables.at(i, j).mean(l);
                    if (expected != actual) {
                        return Checked<InvarianceMismatch>::fail(
                            {k, static_cast<int>(i) + 1, static_cast<int>(j) + 1, l, expected, actual});
                    }
                }
            }
        }
    }
    return Checked<InvarianceMismatch>::pass();
}

}  // namespace perfcode
