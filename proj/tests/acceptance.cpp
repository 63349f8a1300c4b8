// Acceptance gate: one PASS/FAIL line per criterion. Tolerances are exact equality for every
// combinatorial value and the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/mds.hpp"
#include "perfcode/partition.hpp"
#include "perfcode/perfect.hpp"
#include "perfcode/splitgraph.hpp"
#include "perfcode/sts.hpp"

using namespace perfcode;

namespace {

constexpr double kPartitionSeconds = 1.0;   // criterion 1
constexpr double kLengthenSeconds = 10.0;   // criterion 5
constexpr double kTwofoldSeconds = 5.0;     // criterion 6

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks of one criterion.
class Criterion {
public:
    void require(bool holds, const std::string& what) {
        if (!holds) failures_.push_back(what);
    }
    void note(const std::string& what) { notes_.push_back(what); }
    bool passed() const { return failures_.empty(); }

    std::string line(int number) const {
        std::ostringstream os;
        os << "CRITERION " << number << ": " << (passed() ? "PASS" : "FAIL");
        const auto& items = passed() ? notes_ : failures_;
        for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "; " : " (") << items[i];
        if (!items.empty()) os << ')';
        return os.str();
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", v);
    return buf;
}

const BinaryCode& hamming_c1() {
    static const BinaryCode c1 = double_shorten(hamming(4));
    return c1;
}

const BinaryCode& phelps_c1() {
    static const BinaryCode c1 = double_shorten(
        phelps_perfect(4, permute_symbols(linear_mds(4, MdsStructure::Z4), seeded_symbol_permutations(4, 7)), hamming(2)));
    return c1;
}

QuaternaryCode splittable_q3() {
    const auto z4 = linear_mds(3, MdsStructure::Z4);
    return set_union(z4, permute_symbols(z4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3, 0}}));
}

QuaternaryCode unsplittable_q3() {
    SearchOptions options;
    options.m = 3;
    options.symmetry_reduction = true;
    options.predicate = [](const QuaternaryCode& c) { return !is_splittable(c); };
    return search_double_mds(options).hits.at(0);
}

// Criterion 1 and the partition part of criterion 11.
void check_four_part(Criterion& c, const BinaryCode& c1) {
    const auto p = derive_partition(c1);
    const auto s = compute_parameters(p);
    const ParameterMatrix expected{{{0, 1, 12, 0}, {1, 0, 12, 0}, {1, 1, 9, 2}, {0, 0, 12, 1}}};
    c.require(std::holds_alternative<ParameterMatrix>(s) && std::get<ParameterMatrix>(s) == expected,
              "parameter matrix differs");
    c.require(p.part(0).size() == 512 && p.part(1).size() == 512 && p.part(2).size() == 6144 &&
                  p.part(3).size() == 1024,
              "part sizes differ from 512/512/6144/1024");
}

// Criterion 2 values on one code.
void check_fixed_values(Criterion& c, const BinaryCode& c1, const std::string& name) {
    const auto p = derive_partition(c1);
    const DistributionTables t(p);
    c.require(t.at(0, 0).mean(13) == Rational(0), name + ": A11[13] != 0");
    c.require(t.at(0, 0).mean(12) == Rational(1), name + ": A11[12] != 1");
    c.require(t.at(1, 3).mean(1) == Rational(0), name + ": A24[1] != 0");
    c.require(t.at(3, 1).mean(1) == Rational(0), name + ": A42[1] != 0");
    c.require(t.at(3, 3).mean(1) == Rational(1), name + ": A44[1] != 1");
    const auto& c3_to_c4 = t.at(2, 3);
    std::size_t good = 0;
    for (std::size_t i = 0; i < p.part(2).size(); ++i) good += c3_to_c4.per_word(i)[1] == 2 ? 1 : 0;
    c.require(good == 6144, name + ": A4_1(x) = 2 on " + std::to_string(good) + " of 6144 words of C3");
}

// Lengthening checks of criterion 5 for one C1; returns the number of components.
std::size_t check_lengthening(Criterion& c, const BinaryCode& c1, bool enumerate, const std::string& name) {
    const auto p = derive_partition(c1);
    const auto& c4 = p.part(3);
    const auto result = split_code(c4);
    if (!std::holds_alternative<Split>(result)) {
        c.require(false, name + ": C4 not splittable");
        return 0;
    }
    const auto& s = std::get<Split>(result);
    c.require(is_1perfect(lengthen(c1, s.first, s.second)).holds, name + ": lengthened code not 1-perfect");
    if (!enumerate) return s.components;

    // All 2^nu splits are enumerated (2^8 = 256 at n = 13), not only the first 64.
    SplitEnumerator splits(c4, std::uint64_t{1} << 20);
    std::set<std::vector<std::uint64_t>> distinct;
    std::size_t perfect = 0;
    while (auto pair = splits.next()) {
        const auto code = lengthen(c1, pair->first, pair->second);
        perfect += is_1perfect(code).holds ? 1 : 0;
        distinct.emplace(code.raw().begin(), code.raw().end());
    }
    const auto expected = std::size_t{1} << s.components;
    c.require(distinct.size() == expected, name + ": " + std::to_string(distinct.size()) + " distinct codes, expected 2^nu");
    c.require(perfect == expected, name + ": only " + std::to_string(perfect) + " enumerated codes 1-perfect");
    const auto stats = component_stats(build_graph(c4, {1, 2}));
    c.require(stats.min_size >= 64, name + ": smallest component has " + std::to_string(stats.min_size) + " words");
    c.note(name + ": nu=" + std::to_string(s.components) + ", " + std::to_string(distinct.size()) +
           " distinct 1-perfect codes, min component " + std::to_string(stats.min_size));
    return s.components;
}

Criterion criterion1() {
    Criterion c;
    const auto start = Clock::now();
    check_four_part(c, hamming_c1());
    const double t = seconds_since(start);
    c.require(t < kPartitionSeconds, "took " + fixed(t));
    c.note(fixed(t));
    return c;
}

Criterion criterion2() {
    Criterion c;
    c.require(phelps_c1() != hamming_c1(), "the two codes coincide");
    check_fixed_values(c, hamming_c1(), "hamming");
    check_fixed_values(c, phelps_c1(), "phelps");
    c.note("Hamming- and Phelps-derived (13,512,3) codes");
    return c;
}

Criterion criterion3() {
    Criterion c;
    const std::vector<BinaryCode> codes{
        hamming_c1(),
        phelps_c1(),
        double_shorten(phelps_perfect(
            4, permute_symbols(linear_mds(4, MdsStructure::Z2xZ2), seeded_symbol_permutations(4, 11)), hamming(2))),
        double_shorten_at(hamming(4), 1, 2),
        double_shorten(permute_coordinates(hamming(4), seeded_coordinate_permutation(15, 3))),
    };
    for (std::size_t i = 0; i < codes.size(); ++i) {
        c.require(check_doubly_shortened_parameters(codes[i]).n == 13, "code " + std::to_string(i) + " not (13,512,3)");
    }
    const auto check = invariance_check(codes);
    c.require(check.holds, "mean distributions differ");
    c.note(std::to_string(codes.size()) + " codes");
    return c;
}

Criterion criterion4() {
    Criterion c;
    // Corrected neighbour-count relation on brute-force totals at n = 5 first.
    oracle::Words c1;
    for (const auto& w : oracle::hamming(3)) {
        if (w.substr(5) == "00") c1.push_back(w.substr(0, 5));
    }
    const int n = 5;
    const auto parts = oracle::four_parts(c1, n);
    bool oracle_ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto t1 = oracle::distribution_totals(parts[i], parts[0], n);
        const auto t2 = oracle::distribution_totals(parts[i], parts[1], n);
        const auto t3 = oracle::distribution_totals(parts[i], parts[2], n);
        auto at = [&](const std::vector<std::int64_t>& t, int l) {
            return l < 0 || l > n ? std::int64_t{0} : t[static_cast<std::size_t>(l)];
        };
        for (int l = 0; l <= n; ++l) {
            const auto rhs = (n - l + 1) * at(t1, l - 1) + (l + 1) * at(t1, l + 1) - at(t2, l);
            oracle_ok = oracle_ok && rhs == at(t3, l);
        }
    }
    c.require(oracle_ok, "corrected relation fails on the n=5 brute-force oracle");
    const auto small = check_distribution_relations(double_shorten(hamming(3)));
    c.require(small.ok(), "library relations fail at n=5");
    const auto report = check_distribution_relations(hamming_c1());
    c.require(report.ok(), std::to_string(report.failures.size()) + " relation failures at n=13");
    c.note("n=5 oracle and n=13, " + std::to_string(report.fixed_values.size()) + " fixed values");
    return c;
}

Criterion criterion5() {
    Criterion c;
    const auto start = Clock::now();
    check_lengthening(c, double_shorten(hamming(3)), false, "n=5");
    check_lengthening(c, hamming_c1(), true, "n=13");
    const double t = seconds_since(start);
    c.require(t < kLengthenSeconds, "took " + fixed(t));
    c.note(fixed(t));
    return c;
}

Criterion criterion6() {
    Criterion c;
    const auto start = Clock::now();
    const auto& c1 = hamming_c1();
    for (const auto variant : {TwofoldVariant::B, TwofoldVariant::D}) {
        const std::string name = variant == TwofoldVariant::B ? "B" : "D";
        const auto code = variant == TwofoldVariant::B ? build_B(c1) : build_D(c1);
        c.require(code.total_size() == 8 * c1.size(), name + ": total multiplicity is not 8|C1|");
        c.require(is_twofold_1perfect(code).holds, name + ": not twofold 1-perfect");
        c.require(is_antipodal(code).holds, name + ": not antipodal");
        const auto c1_00 = with_suffix(c1, "00");
        bool contained = true;
        for (const auto w : c1_00.words()) contained = contained && code.multiplicity(w) > 0;
        c.require(contained, name + ": C1 00 not contained");
        if (variant == TwofoldVariant::B) c.require(check_doubled(code, c1).holds, "B: property a) fails");
        const auto scope = variant == TwofoldVariant::B ? ShiftScope::mixed_suffix : ShiftScope::all;
        c.require(check_shift_closed(code, scope).holds, name + ": property b) fails");
        const auto result = split_twofold(code, c1, variant);
        if (const auto* halves = std::get_if<TwofoldSplit>(&result)) {
            c.require(is_1perfect(halves->first).holds && is_1perfect(halves->second).holds, name + ": half not 1-perfect");
            c.require(multiset_union(MultisetCode::from_set(halves->first), MultisetCode::from_set(halves->second)) == code,
                      name + ": halves do not reassemble the code");
        } else {
            c.require(false, name + ": not splittable");
        }
    }
    const double t = seconds_since(start);
    c.require(t < kTwofoldSeconds, "took " + fixed(t));
    c.note(fixed(t));
    return c;
}

Criterion criterion7() {
    Criterion c;
    const auto p = derive_partition(hamming_c1());
    auto matrix_of = [](const Partition& q) {
        auto s = compute_parameters(q);
        return std::holds_alternative<ParameterMatrix>(s) ? std::get<ParameterMatrix>(s) : ParameterMatrix{};
    };
    const auto merged = merge_parts(p, 0, 1);
    c.require(matrix_of(merged) == ParameterMatrix{{{1, 12, 0}, {2, 9, 2}, {0, 12, 1}}}, "merged matrix differs");

    const auto split = std::get<Split>(split_code(p.part(3)));
    const auto refined = split_refine(p, split.first, split.second);
    const ParameterMatrix refined_expected{
        {{0, 1, 12, 0, 0}, {1, 0, 12, 0, 0}, {1, 1, 9, 1, 1}, {0, 0, 12, 0, 1}, {0, 0, 12, 1, 0}}};
    c.require(matrix_of(refined) == refined_expected, "refined matrix differs");

    const auto extended = extend_partition(merged);
    c.require(matrix_of(extended) == ParameterMatrix{{{0, 14, 0, 0}, {2, 0, 12, 0}, {0, 12, 0, 2}, {0, 0, 14, 0}}},
              "extended matrix differs");
    const auto g1 = split_code(extended.part(0));
    const auto g4 = split_code(extended.part(3));
    if (std::holds_alternative<Split>(g1) && std::holds_alternative<Split>(g4)) {
        const auto f = factorization_check(std::get<Split>(g1), std::get<Split>(g4), 14);
        c.require(f.perfect && f.code.length() == 15 && f.code.size() == 2048, "factorization code not 1-perfect");
        c.require(is_1perfect(f.code).holds, "factorization code fails the sweep");
    } else {
        c.require(false, "G1 or G4 not splittable");
    }
    c.note("3-, 5- and 4-part matrices at n=13/14; factorization gives a (15,2048) 1-perfect code");
    return c;
}

Criterion criterion8() {
    Criterion c;
    const auto report = check_unsplittable_example();
    c.require(report.total_multiplicity == 70, "total multiplicity " + std::to_string(report.total_multiplicity));
    c.require(report.twofold.holds, "some pair is not covered exactly twice");
    c.require(report.property_a, "property a) fails");
    c.require(report.property_b, "property b) fails");
    c.require(report.cycle.has_value() && report.cycle_valid, "no valid odd cycle");
    if (report.cycle) {
        c.require(report.cycle->words.size() == 5, "cycle length " + std::to_string(report.cycle->words.size()));
        c.require(is_odd_cycle(*report.cycle, {2}), "cycle does not replay on the distance-2 graph");
    }
    c.note("crc32 " + report.checksum + ", " + std::to_string(report.distinct_words) + " distinct words");
    return c;
}

Criterion criterion9() {
    Criterion c;
    const auto diag = QuaternaryCode(2, {0b0000, 0b0101, 0b1010, 0b1111});
    const auto s2 = s_of_m(diag, hamming(1));
    c.require(s2.length() == 7 && s2.size() == 16 && is_1perfect(s2).holds, "m=2 diagonal S(M) is not a 16-word 1-perfect code");
    const auto s4 = s_of_m(linear_mds(4, MdsStructure::Z4), hamming(2));
    c.require(s4.length() == 15 && s4.size() == 2048 && is_1perfect(s4).holds, "m=4 S(M) is not a 2048-word 1-perfect code");

    // Splittable double-MDS input in Q^2.
    const auto q2 = set_union(diag, QuaternaryCode(2, {0b0001, 0b0110, 0b1011, 0b1100}));
    const auto t2 = s_of_m_twofold(q2, hamming(1));
    c.require(t2.twofold_perfect, "m=2 twofold S(M) not twofold 1-perfect");
    c.require(t2.splittable == is_splittable(q2) && t2.direct_splittable == t2.splittable && t2.split.has_value(),
              "m=2 splittability verdicts disagree");

    // Unsplittable double-MDS input in Q^4 built from one in Q^3.
    const auto m1 = unsplittable_q3();
    const auto m0 = complement(m1);
    const auto q4 = set_union(set_union(with_suffix(m0, 0), with_suffix(m0, 1)),
                              set_union(with_suffix(m1, 2), with_suffix(m1, 3)));
    const auto t4 = s_of_m_twofold(q4, hamming(2));
    c.require(t4.twofold_perfect, "m=4 twofold S(M) not twofold 1-perfect");
    c.require(!is_splittable(q4) && !t4.splittable && !t4.direct_splittable, "m=4 splittability verdicts disagree");
    c.require(t4.cycle.has_value() && t4.witness_verified, "m=4 transported odd cycle not verified");
    if (t4.cycle) c.note("transported odd cycle of length " + std::to_string(t4.cycle->words.size()));
    return c;
}

Criterion criterion10() {
    Criterion c;
    SearchOptions q2;
    q2.m = 2;
    const auto found2 = search_double_mds(q2);
    const auto oracle2 = oracle::count_double_mds_q2();
    c.require(found2.complete, "Q^2 search incomplete");
    c.require(found2.enumerated * found2.orbit_factor == oracle2, "Q^2 count differs from the brute-force count");
    c.require(found2.splittable == found2.enumerated && found2.complement_splittable == found2.enumerated,
              "some Q^2 instance or complement is unsplittable");
    c.require(found2.hits.empty(), "Q^2 counterexample found");

    SearchOptions q3;
    q3.m = 3;
    q3.symmetry_reduction = true;
    const auto found3 = search_double_mds(q3);
    c.require(found3.complete, "Q^3 search did not finish within the default budget");
    c.require(found3.hits.empty(), "Q^3 counterexample found");
    q3.budget = 1000;
    const auto partial = search_double_mds(q3);
    c.require(!partial.complete, "budget of 1000 nodes not reported as partial");
    c.note("Q^2: " + std::to_string(oracle2) + " codes; Q^3: " +
           std::to_string(found3.enumerated * found3.orbit_factor) + " codes in " + std::to_string(found3.nodes) +
           " nodes, complete, 0 counterexamples");
    return c;
}

Criterion criterion11() {
    Criterion c;
    const auto result = c1_pipeline(splittable_q3(), 4);
    const auto& r = result.report;
    c.require(r.consistent(), "pipeline report inconsistent");
    c.require(!r.hypothesis_met, "report claims the hypothesis holds for a splittable stand-in");
    const auto& c1 = result.c1;
    c.require(check_doubly_shortened_parameters(c1).n == 13, "C1 is not (13,512,3)");
    check_four_part(c, c1);
    check_fixed_values(c, c1, "pipeline");
    const std::vector<BinaryCode> pair{hamming_c1(), c1};
    c.require(invariance_check(pair).holds, "distributions differ from the Hamming-derived code");
    c.require(check_distribution_relations(c1).ok(), "relations fail");
    check_lengthening(c, c1, false, "pipeline");
    c.note("(13,512,3) C1 from a splittable stand-in M1 in Q^3; hypothesis reported NOT met");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::function<Criterion()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                           criterion5, criterion6, criterion7, criterion8,
                                                           criterion9, criterion10, criterion11};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i]();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << c.line(static_cast<int>(i + 1)) << std::endl;
        failed += c.passed() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << std::endl;
    return failed == 0 ? 0 : 1;
}
