#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/perfect.hpp"
#include "perfcode/quaternary.hpp"
#include "perfcode/splitgraph.hpp"

namespace perfcode {

// Codes in Q^m are handled through per-vertex tables, so m is limited here.
inline constexpr int kMaxMdsLength = 12;

// An axis-parallel 4-clique of Q^m: the four words agreeing with `base` off `position`
// (1-based). `base` has digit 0 at `position`.
struct Line {
    int position;
    QuaternaryWord base;

    QuaternaryWord point(int symbol) const { return base.with_digit(position, symbol); }
};

struct LineWitness {
    Line line;
    std::vector<QuaternaryWord> hits;
    int expected;
};

// Every line meets M in exactly `expected` words. The witness is the first failing line,
// ordered by position and then by base.
Checked<LineWitness> check_lines(const QuaternaryCode& code, int expected);
inline Checked<LineWitness> is_mds(const QuaternaryCode& code) { return check_lines(code, 1); }
inline Checked<LineWitness> is_double_mds(const QuaternaryCode& code) { return check_lines(code, 2); }

struct MdsSplit {
    QuaternaryCode first;
    QuaternaryCode second;
    std::size_t components = 0;
};

// Closed walk in Q^m with odd length; consecutive words (and last-first) at distance 1.
struct QuaternaryCycle {
    std::vector<QuaternaryWord> words;
};

using MdsSplitResult = std::variant<MdsSplit, QuaternaryCycle>;

// Two disjoint MDS codes whose union is M, from a 2-colouring of the graph joining the two
// words of M on each line. Throws PreconditionError unless M is double-MDS.
MdsSplitResult split_double_mds(const QuaternaryCode& code);
bool is_splittable(const QuaternaryCode& code);

bool is_quaternary_odd_cycle(const QuaternaryCycle& cycle);

// The pairs P_s of H^4 and P'_s of H^3 indexed by a quaternary symbol.
std::array<BinaryWord, 2> p_pair(int symbol);
std::array<BinaryWord, 2> p_prime_pair(int symbol);

// S(M) = union over mu in M of P_{mu_1} ... P_{mu_{m-1}} P'_{mu_m} + C*, with
// C* = {000 c_1 000 c_2 ... 000 c_{m-1} 000 : c in C}. Length 4m - 1.
// C must be 1-perfect of length m - 1; {0} serves for m = 2.
BinaryCode s_of_m(const QuaternaryCode& code, const BinaryCode& perfect);

// The word of S(M) that stands for mu: first elements of the P-pairs plus the first
// codeword of C.
BinaryWord s_of_m_representative(const QuaternaryWord& mu, const BinaryCode& perfect);

struct TwofoldSofM {
    MultisetCode code;
    bool twofold_perfect = false;
    bool splittable = false;
    // Split of M carried to S(M') and S(M''), both verified 1-perfect.
    std::optional<TwofoldSplit> split;
    // Odd cycle of M carried to S(M), checked against the {1,2}-graph.
    std::optional<OddCycleWitness> cycle;
    bool witness_verified = false;
    // Bipartiteness of the {1,2}-graph of S(M) computed directly.
    bool direct_splittable = false;
};

TwofoldSofM s_of_m_twofold(const QuaternaryCode& code, const BinaryCode& perfect, const SweepOptions& options = {});

// M = M0 0 u M0 1 u M1 2 u M1 3 with M0 the complement of M1 in Q^(m-1), split as (M', M'').
// D = S(M), C = S(M' 0 u M'' 1), C1 = {x : x00 in C}.
struct PipelineReport {
    int k = 0;
    int m = 0;
    bool hypothesis_met = false;  // M1 unsplittable
    bool m_double_mds = false;
    std::size_t c_size = 0;
    std::size_t c1_size = 0;
    std::size_t expected_c1_size = 0;
    std::optional<int> c1_distance;
    bool c_distance_3 = false;
    bool d_twofold = false;
    bool c1_00_in_d = false;
    bool d_shift_closed = false;  // x + 0...011 in D for every x in D
    bool d_matches_build_D = false;
    EquivalenceReport equivalence;

    bool consistent() const;
    std::string summary() const;
};

struct PipelineResult {
    BinaryCode c1;
    PipelineReport report;
};

// k in {3, 4} and M1 a double-MDS code in Q^(m-1), m = 2^(k-2), whose complement splits.
// C1 has length 2^k - 3 and 2^(2^k - k - 3) words.
PipelineResult c1_pipeline(const QuaternaryCode& m1, int k, const SweepOptions& options = {});

// Partial latin hypercube of order 4: cells indexed by x in Q^dims and a layer 0..layers-1,
// with no symbol repeated along a line (varying one index of x, or the layer).
class LatinHypercuboid {
public:
    LatinHypercuboid(int dims, int layers, std::vector<std::uint8_t> cells);

    int dims() const noexcept { return dims_; }
    int layers() const noexcept { return layers_; }
    int at(std::uint64_t x, int layer) const { return cells_[x * static_cast<std::uint64_t>(layers_) + layer]; }
    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

    friend bool operator==(const LatinHypercuboid&, const LatinHypercuboid&) = default;

private:
    int dims_;
    int layers_;
    std::vector<std::uint8_t> cells_;
};

// MDS code in Q^m -> latin hypercube with m - 1 indices (dims m - 2, four layers indexed by
// x_{m-1}, symbol x_m). Double-MDS code in Q^m -> 4^(m-1) x 2 cuboid whose layers are the
// two MDS codes of its split. Anything else, or an unsplittable double-MDS code, is a
// PreconditionError naming the failing line or odd cycle.
LatinHypercuboid to_latin(const QuaternaryCode& code);
QuaternaryCode from_latin(const LatinHypercuboid& latin);

// Completion of a two-layer cuboid to four layers via a split of the complement of its
// double-MDS code, or the odd cycle that rules it out.
std::variant<LatinHypercuboid, QuaternaryCycle> complete(const LatinHypercuboid& cuboid);

struct SearchOptions {
    int m = 2;
    std::uint64_t budget = 1'000'000;  // search-tree nodes
    bool symmetry_reduction = false;
    // Default: splittability of M differs from splittability of its complement.
    std::function<bool(const QuaternaryCode&)> predicate;
    std::ostream* hit_log = nullptr;  // JSON lines
};

struct SearchFindings {
    std::uint64_t enumerated = 0;  // leaves visited
    std::uint64_t nodes = 0;
    bool complete = false;
    // Multiplier from enumerated leaves to all double-MDS codes (6 under symmetry reduction).
    std::uint64_t orbit_factor = 1;
    std::uint64_t splittable = 0;
    std::uint64_t complement_splittable = 0;
    std::vector<QuaternaryCode> hits;
};

// Backtracking over the cells of Q^m in lexicographic order with per-line counters.
// With symmetry reduction the first line is fixed to {0...00, 0...01}.
SearchFindings search_double_mds(const SearchOptions& options);

}  // namespace perfcode
