#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/mds.hpp"
#include "perfcode/perfect.hpp"

using namespace perfcode;

namespace {

QuaternaryCode q(int m, std::initializer_list<const char*> words) {
    std::vector<QuaternaryWord> out;
    for (const auto* w : words) out.push_back(QuaternaryWord::parse(w));
    return QuaternaryCode::from_words(m, out);
}

std::set<std::string> as_set(const QuaternaryCode& code) {
    const auto words = oracle::quaternary_strings(code);
    return {words.begin(), words.end()};
}

// S(M) by string concatenation of the printed pairs.
std::set<std::string> s_of_m_oracle(const std::set<std::string>& mds, const oracle::Words& perfect) {
    static const char* p[4][2] = {{"0000", "1111"}, {"0011", "1100"}, {"0101", "1010"}, {"0110", "1001"}};
    static const char* pp[4][2] = {{"000", "111"}, {"011", "100"}, {"101", "010"}, {"110", "001"}};
    std::set<std::string> out;
    for (const auto& mu : mds) {
        const auto m = mu.size();
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
            std::string word;
            for (std::size_t i = 0; i < m; ++i) {
                const auto digit = static_cast<std::size_t>(mu[i] - '0');
                const auto pick = (choice >> i) & 1U;
                word += i + 1 < m ? p[digit][pick] : pp[digit][pick];
            }
            for (const auto& c : perfect) {
                auto x = word;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (c[i] == '1') x[4 * i + 3] = x[4 * i + 3] == '0' ? '1' : '0';
                }
                out.insert(x);
            }
        }
    }
    return out;
}

// An unsplittable double-MDS code in Q^3, taken from the search.
QuaternaryCode unsplittable_q3() {
    SearchOptions options;
    options.m = 3;
    options.symmetry_reduction = true;
    options.predicate = [](const QuaternaryCode& c) { return !is_splittable(c); };
    const auto found = search_double_mds(options);
    REQUIRE_FALSE(found.hits.empty());
    return found.hits.front();
}

}  // namespace

TEST_CASE("MDS and double-MDS checks against the line oracle") {
    const auto diag = q(2, {"00", "11", "22", "33"});
    CHECK(is_mds(diag).holds);
    CHECK(oracle::hits_every_line(as_set(diag), 2, 1));
    const auto rows = q(2, {"00", "01", "02", "03"});
    const auto check = is_mds(rows);
    CHECK_FALSE(check.holds);
    REQUIRE(check.witness);
    CHECK(check.witness->expected == 1);
    CHECK(check.witness->hits.size() != 1);
    CHECK_FALSE(oracle::hits_every_line(as_set(rows), 2, 1));

    const auto twice = set_union(diag, q(2, {"01", "12", "23", "30"}));
    CHECK(is_double_mds(twice).holds);
    CHECK(is_double_mds(complement(twice)).holds);
    CHECK_FALSE(is_mds(twice).holds);
}

TEST_CASE("splitting a union of two MDS codes") {
    const auto a = q(2, {"00", "11", "22", "33"});
    const auto b = q(2, {"01", "12", "23", "30"});
    const auto split = split_double_mds(set_union(a, b));
    REQUIRE(std::holds_alternative<MdsSplit>(split));
    const auto& s = std::get<MdsSplit>(split);
    const bool same = (s.first == a && s.second == b) || (s.first == b && s.second == a);
    CHECK(same);
    CHECK(s.components == 1);
    CHECK_THROWS_AS(split_double_mds(a), PreconditionError);
}

TEST_CASE("double-MDS codes in Q^2 match the exhaustive count") {
    REQUIRE(oracle::count_double_mds_q2() == 90);
    SearchOptions options;
    options.m = 2;
    options.predicate = [](const QuaternaryCode&) { return true; };
    const auto all = search_double_mds(options);
    CHECK(all.complete);
    CHECK(all.enumerated == 90);
    CHECK(all.hits.size() == 90);
    CHECK(all.splittable == 90);
    CHECK(all.complement_splittable == 90);
    for (const auto& code : all.hits) {
        CHECK(is_double_mds(code).holds);
        // Splittable iff the line graph is bipartite, checked on strings.
        const auto words = oracle::quaternary_strings(code);
        const bool bip = oracle::bipartite(words.size(), [&](std::size_t u, std::size_t v) {
            return oracle::distance(words[u], words[v]) == 1;
        });
        CHECK(bip == is_splittable(code));
    }
    options.symmetry_reduction = true;
    const auto reduced = search_double_mds(options);
    CHECK(reduced.enumerated * reduced.orbit_factor == 90);
}

TEST_CASE("double-MDS codes in Q^3 match the layer-stacking count") {
    SearchOptions options;
    options.m = 3;
    options.symmetry_reduction = true;
    const auto found = search_double_mds(options);
    CHECK(found.complete);
    CHECK(found.orbit_factor == 6);
    CHECK(found.enumerated * found.orbit_factor == oracle::count_double_mds_q3());
    CHECK(found.enumerated * found.orbit_factor == 51678);
    CHECK(found.splittable == found.complement_splittable);
    CHECK(found.splittable < found.enumerated);
    CHECK(found.hits.empty());
}

TEST_CASE("search budget, usage errors and the hit log") {
    SearchOptions options;
    options.m = 3;
    options.budget = 1000;
    const auto partial = search_double_mds(options);
    CHECK_FALSE(partial.complete);
    CHECK(partial.nodes <= 1000);

    options.m = 4;
    CHECK_THROWS_AS(search_double_mds(options), UsageError);
    options.m = 2;
    options.budget = 0;
    CHECK_THROWS_AS(search_double_mds(options), UsageError);

    std::ostringstream log;
    options.budget = 1'000'000;
    options.symmetry_reduction = true;
    options.predicate = [](const QuaternaryCode&) { return true; };
    options.hit_log = &log;
    const auto found = search_double_mds(options);
    CHECK(found.hits.size() == 15);
    std::istringstream lines(log.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.front() == '{');
        CHECK(line.find("\"words\"") != std::string::npos);
        ++count;
    }
    CHECK(count == 15);
}

TEST_CASE("odd cycles of unsplittable double-MDS codes") {
    const auto code = unsplittable_q3();
    CHECK(is_double_mds(code).holds);
    const auto split = split_double_mds(code);
    REQUIRE(std::holds_alternative<QuaternaryCycle>(split));
    const auto& cycle = std::get<QuaternaryCycle>(split);
    CHECK(cycle.words.size() % 2 == 1);
    CHECK(is_quaternary_odd_cycle(cycle));
    for (const auto& w : cycle.words) CHECK(code.contains(w));
    CHECK_FALSE(is_splittable(complement(code)));
}

TEST_CASE("S(M) agrees with the string construction") {
    const auto diag = q(2, {"00", "11", "22", "33"});
    const auto s2 = s_of_m(diag, hamming(1));
    CHECK(s2.length() == 7);
    CHECK(s2.size() == 16);
    CHECK(is_1perfect(s2).holds);
    const auto words2 = oracle::strings(s2);
    CHECK(std::set<std::string>(words2.begin(), words2.end()) == s_of_m_oracle(as_set(diag), {"0"}));

    const auto z4 = linear_mds(4, MdsStructure::Z4);
    const auto s4 = s_of_m(z4, hamming(2));
    CHECK(s4.size() == 2048);
    CHECK(is_1perfect(s4).holds);
    const auto words = oracle::strings(s4);
    CHECK(std::set<std::string>(words.begin(), words.end()) == s_of_m_oracle(as_set(z4), oracle::hamming(2)));

    // A sub-code of an MDS code keeps distance 3.
    const auto sub = q(2, {"00", "22"});
    CHECK(has_min_distance(s_of_m(sub, hamming(1)), 3));
    CHECK_THROWS_AS(s_of_m(diag, BinaryCode(1, std::vector<std::uint64_t>{0, 1})), PreconditionError);
    CHECK_THROWS_AS(s_of_m(linear_mds(3, MdsStructure::Z4), hamming(1)), PreconditionError);
}

TEST_CASE("S(M) representatives are S(M) words at distance 2 along lines") {
    const auto z4 = linear_mds(4, MdsStructure::Z4);
    const auto c = hamming(2);
    const auto s = s_of_m(z4, c);
    for (const auto mu : z4.words()) CHECK(s.contains(s_of_m_representative(mu, c)));
    const auto a = s_of_m_representative(QuaternaryWord::parse("0000"), c);
    const auto b = s_of_m_representative(QuaternaryWord::parse("1000"), c);
    CHECK(hamming_distance(a, b) == 2);
}

TEST_CASE("twofold S(M) of a splittable double-MDS code") {
    const auto m = set_union(linear_mds(2, MdsStructure::Z4), q(2, {"01", "12", "23", "30"}));
    const auto t = s_of_m_twofold(m, hamming(1));
    CHECK(t.twofold_perfect);
    CHECK(t.splittable);
    CHECK(t.direct_splittable);
    REQUIRE(t.split);
    CHECK(is_1perfect(t.split->first).holds);
    CHECK(is_1perfect(t.split->second).holds);
    CHECK(t.code.total_size() == 32);
}

TEST_CASE("twofold S(M) carries the odd cycle of an unsplittable code") {
    const auto m1 = unsplittable_q3();
    const auto m0 = complement(m1);
    const auto m = set_union(set_union(with_suffix(m0, 0), with_suffix(m0, 1)),
                             set_union(with_suffix(m1, 2), with_suffix(m1, 3)));
    REQUIRE(is_double_mds(m).holds);
    CHECK_FALSE(is_splittable(m));
    const auto t = s_of_m_twofold(m, hamming(2));
    CHECK(t.twofold_perfect);
    CHECK_FALSE(t.splittable);
    CHECK_FALSE(t.direct_splittable);
    REQUIRE(t.cycle);
    CHECK(t.cycle->words.size() % 2 == 1);
    CHECK(t.witness_verified);
}

TEST_CASE("latin hypercubes and cuboids") {
    const auto z4 = linear_mds(3, MdsStructure::Z4);
    const auto square = to_latin(z4);
    CHECK(square.dims() == 1);
    CHECK(square.layers() == 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) CHECK(square.at(static_cast<std::uint64_t>(r), c) == (8 - r - c) % 4);
    }
    CHECK(from_latin(square) == z4);

    const auto dbl = set_union(z4, permute_symbols(z4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3, 0}}));
    REQUIRE(is_double_mds(dbl).holds);
    const auto cuboid = to_latin(dbl);
    CHECK(cuboid.layers() == 2);
    CHECK(cuboid.dims() == 2);
    CHECK(from_latin(cuboid) == dbl);

    const auto full = complete(cuboid);
    REQUIRE(std::holds_alternative<LatinHypercuboid>(full));
    const auto& cube = std::get<LatinHypercuboid>(full);
    CHECK(cube.layers() == 4);
    CHECK(is_mds(from_latin(cube)).holds);

    CHECK_THROWS_AS(to_latin(unsplittable_q3()), PreconditionError);
    CHECK_THROWS_AS(to_latin(q(2, {"00", "01"})), PreconditionError);
    // Two layers 0,0,1,2 / 1,2,3,3 repeat a symbol in the first layer.
    CHECK_THROWS_AS(LatinHypercuboid(1, 2, {0, 1, 0, 2, 1, 3, 2, 3}), PreconditionError);
}

TEST_CASE("pipeline control runs") {
    const auto z4 = linear_mds(3, MdsStructure::Z4);
    const auto q3 = set_union(z4, permute_symbols(z4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3, 0}}));
    for (const int k : {3, 4}) {
        const auto m1 = k == 3 ? q(1, {"0", "1"}) : q3;
        const auto result = c1_pipeline(m1, k);
        const auto& r = result.report;
        CHECK(r.consistent());
        CHECK_FALSE(r.hypothesis_met);
        CHECK(r.m_double_mds);
        CHECK(r.c1_size == r.expected_c1_size);
        CHECK(r.c1_size * 2 == r.c_size);
        CHECK(r.c1_distance == std::optional<int>{3});
        CHECK(r.d_twofold);
        CHECK(r.d_matches_build_D);
        CHECK(r.equivalence.all_hold());
        CHECK(result.c1.length() == (1 << k) - 3);
    }
    CHECK_THROWS_AS(c1_pipeline(z4, 4), PreconditionError);
    CHECK_THROWS_AS(c1_pipeline(unsplittable_q3(), 4), PreconditionError);
    CHECK_THROWS_AS(c1_pipeline(q3, 5), BudgetError);
}
