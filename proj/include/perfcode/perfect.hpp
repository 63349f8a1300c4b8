#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/splitgraph.hpp"

namespace perfcode {

struct SweepOptions {
    static constexpr int kDefaultMaxLength = 25;

    // Exhaustive sweeps allocate one counter per vertex; longer codes are refused.
    int max_length = kDefaultMaxLength;
    unsigned threads = 1;
};

struct CoverageWitness {
    BinaryWord vertex;
    unsigned coverage;  // saturates at 255
    unsigned expected;
};

// Every vertex of H^n lies within distance 1 of exactly one codeword. The witness is the
// lexicographically smallest vertex covered a different number of times.
Checked<CoverageWitness> is_1perfect(const BinaryCode& code, const SweepOptions& options = {});
// Every vertex lies within distance 1 of exactly two codewords, counted with multiplicity.
Checked<CoverageWitness> is_twofold_1perfect(const MultisetCode& code, const SweepOptions& options = {});

// Words ending in 0 (resp. 00), with those coordinates removed.
BinaryCode shorten(const BinaryCode& code);
BinaryCode double_shorten(const BinaryCode& code);
// Words with x_coordinate = 0, that coordinate removed (1-based).
BinaryCode shorten_at(const BinaryCode& code, int coordinate);
BinaryCode double_shorten_at(const BinaryCode& code, int first, int second);

// C1 00 u C2 11 u C' 01 u C'' 10 for a split (C', C'') of C4.
BinaryCode lengthen(const BinaryCode& c1, const BinaryCode& first, const BinaryCode& second);

// 2*C1 00 u 2*C2 11 u C4 01 u C4 10.
MultisetCode build_B(const BinaryCode& c1);
// C1 00 u C2 00 u C1 11 u C2 11 u C4 01 u C4 10.
MultisetCode build_D(const BinaryCode& c1);

enum class TwofoldVariant { B, D };

// Every word of C1 00 occurs in the multiset with multiplicity 2; the witness is the first
// that does not.
Checked<BinaryWord> check_doubled(const MultisetCode& code, const BinaryCode& c1);

enum class ShiftScope { mixed_suffix, all };
// x + 0...011 is a word for every word x (ending in 01 or 10 only, or all words).
Checked<BinaryWord> check_shift_closed(const MultisetCode& code, ShiftScope scope);

struct TwofoldSplit {
    BinaryCode first;
    BinaryCode second;
};

// Halves of B (or D) built from a split (C', C'') of C4:
//   B: C1 00 u C2 11 u C' 01 u C'' 10  and  C1 00 u C2 11 u C' 10 u C'' 01
//   D: C1 00 u C2 11 u C' 01 u C'' 10  and  C2 00 u C1 11 u C' 10 u C'' 01
// Each half is verified 1-perfect. When C4 is unsplittable the odd cycle of its
// {1,2}-graph is returned.
std::variant<TwofoldSplit, OddCycleWitness> split_twofold(const MultisetCode& twofold, const BinaryCode& c1,
                                                         TwofoldVariant variant, const SweepOptions& options = {});

// Code G1' 0 u G1'' 1 u G4' 0 u G4'' 1 from splits of the extended parts G1 and G4, with its
// 1-perfectness verdict.
struct Factorization {
    BinaryCode code;
    bool perfect = false;
};
Factorization factorization_check(const Split& g1, const Split& g4, int extended_length,
                                  const SweepOptions& options = {});

enum class Verdict { holds, fails, unknown };
const char* to_string(Verdict v);

// The four equivalent statements about C1:
//   a) C1 00 lies in a 1-perfect code      b) C4 is splittable
//   c) B is splittable                      d) D is splittable
// b), c) and d) are decided by independent bipartiteness tests; a) is witnessed by a verified
// 1-perfect code when one can be built.
struct EquivalenceReport {
    Verdict a = Verdict::unknown;
    Verdict b = Verdict::unknown;
    Verdict c = Verdict::unknown;
    Verdict d = Verdict::unknown;
    std::size_t components = 0;
    std::optional<BinaryCode> perfect_code;
    std::optional<Split> c4_split;
    std::optional<TwofoldSplit> b_split;
    std::optional<TwofoldSplit> d_split;
    std::optional<OddCycleWitness> c4_cycle;
    std::optional<OddCycleWitness> b_cycle;
    std::optional<OddCycleWitness> d_cycle;

    bool all_hold() const;
    std::string summary() const;
};

// Throws std::logic_error if the verdicts disagree.
EquivalenceReport equivalence_report(const BinaryCode& c1, const SweepOptions& options = {});

}  // namespace perfcode
