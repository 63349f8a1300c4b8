#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/distribution.hpp"

namespace perfcode {

// An ordered partition of V(H^n) into nonempty parts. Construction validates disjointness and
// coverage and keeps a per-vertex part label, so n is limited to kMaxPartitionLength.
class Partition {
public:
    static constexpr int kMaxPartitionLength = 26;

    Partition(int n, std::vector<BinaryCode> parts);

    int n() const noexcept { return n_; }
    std::size_t part_count() const noexcept { return parts_.size(); }
    const BinaryCode& part(std::size_t i) const { return parts_.at(i); }
    const std::vector<BinaryCode>& parts() const noexcept { return parts_; }
    // Part index of every vertex, indexed by bit pattern.
    std::span<const std::uint8_t> labels() const noexcept { return labels_; }
    std::size_t part_of(const BinaryWord& x) const;

private:
    int n_;
    std::vector<BinaryCode> parts_;
    std::vector<std::uint8_t> labels_;
};

// Row i, column j: neighbours in part j of any vertex of part i.
struct ParameterMatrix {
    std::vector<std::vector<int>> rows;

    std::size_t size() const noexcept { return rows.size(); }
    friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;
};

std::ostream& operator<<(std::ostream& os, const ParameterMatrix& s);

// The matrices of the constructions in this library, for word length n.
ParameterMatrix four_part_matrix(int n);
ParameterMatrix merged_matrix(int n);
ParameterMatrix refined_matrix(int n);
ParameterMatrix extended_matrix(int extended_length);
ParameterMatrix perfect_code_matrix(int n);

struct EquitableWitness {
    BinaryWord vertex;
    std::size_t part;
    std::vector<int> observed;
    std::vector<int> expected;
};

// Neighbour counts of one vertex, per part.
std::vector<int> neighbour_row(const Partition& partition, const BinaryWord& x);

// Either the parameter matrix, or the lexicographically smallest vertex whose neighbour counts
// differ from those of the smallest vertex in its part.
std::variant<ParameterMatrix, EquitableWitness> compute_parameters(const Partition& partition);

// Witness is the lexicographically smallest vertex whose neighbour counts differ from its row of `s`.
Checked<EquitableWitness> verify_equitable(const Partition& partition, const ParameterMatrix& s);

// Parameters (n, m) of a (2^m - 3, 2^(n-m), 3) code; throws PreconditionError naming the
// failing check.
struct ShortenedParameters {
    int n;
    int m;
};
ShortenedParameters check_doubly_shortened_parameters(const BinaryCode& c1);

// {C1, C2, C3, C4}: C2 = C1 + 1, C3 = vertices at distance 1 from C1 outside C2, C4 the rest.
Partition derive_partition(const BinaryCode& c1);

// Parts i and j (0-based) replaced by their union, placed first; other parts keep their order.
Partition merge_parts(const Partition& partition, std::size_t i, std::size_t j);

// {C1, C2, C3, C', C''} from a four-part partition and a split of C4 into distance-3 codes.
Partition split_refine(const Partition& partition, const BinaryCode& first, const BinaryCode& second);

// From the merged partition {C12, C3, C4} of H^n: the partition {G1, G2, G3, G4} of H^(n+1)
// with G1 = C12 extended by even parity, G4 = C4 extended by odd parity, G2 = vertices at
// distance 1 from G1 and G3 = vertices at distance 1 from G4.
Partition extend_partition(const Partition& merged);

// Mean distributions between every ordered pair of parts, brute-forced.
class DistributionTables {
public:
    explicit DistributionTables(const Partition& partition);

    std::size_t part_count() const noexcept { return parts_; }
    // 0-based part indices.
    const DistributionTable& at(std::size_t i, std::size_t j) const { return tables_.at(i * parts_ + j); }

private:
    std::size_t parts_;
    std::vector<DistributionTable> tables_;
};

struct RelationFailure {
    std::string relation;
    int i;  // 1-based part indices
    int j;
    int l;
    Rational lhs;
    Rational rhs;
};

struct NamedCheck {
    std::string name;
    bool holds;
    std::string detail;
};

struct RelationReport {
    int n = 0;
    std::vector<RelationFailure> failures;
    std::vector<NamedCheck> fixed_values;

    bool ok() const;
};

// The relations among the sixteen mean distributions of {C1, C2, C3, C4}:
//   A^{i2}_l = A^{i1}_{n-l}
//   A^{i3}_l = (n-l+1) A^{i1}_{l-1} + (l+1) A^{i1}_{l+1} - A^{i2}_l
//   A^{i4}_l = C(n,l) - A^{i1}_l - A^{i2}_l - A^{i3}_l
//   |Ci| A^{ij}_l = |Cj| A^{ji}_l
// checked exactly against brute-force tables, plus the fixed values forced at distances 1,
// n-1 and n.
RelationReport check_distribution_relations(const BinaryCode& c1);
RelationReport check_distribution_relations(const Partition& partition, const DistributionTables& tables);

struct InvarianceMismatch {
    std::size_t code;  // index into the supplied list
    int i;             // 1-based part indices
    int j;
    int l;
    Rational expected;
    Rational actual;
};

// True when all sixteen mean distributions coincide across the supplied codes.
Checked<InvarianceMismatch> invariance_check(std::span<const BinaryCode> codes);

}  // namespace perfcode
