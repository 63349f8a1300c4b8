#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/partition.hpp"
#include "perfcode/perfect.hpp"

using namespace perfcode;

namespace {

std::map<std::string, int> as_map(const MultisetCode& m) {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < m.distinct_size(); ++i) {
        out[m.word(i).to_string()] = static_cast<int>(m.entries()[i].multiplicity);
    }
    return out;
}

}  // namespace

TEST_CASE("Hamming codes are 1-perfect, per the coverage oracle too") {
    for (const int m : {2, 3, 4}) {
        const auto h = hamming(m);
        CHECK(is_1perfect(h).holds);
        if (m <= 3) CHECK(oracle::covers_exactly(oracle::as_multiset(oracle::strings(h)), h.length(), 1));
    }
}

TEST_CASE("coverage witness is the lexicographically first bad vertex") {
    const auto check = is_1perfect(BinaryCode(3, {0b000}));
    CHECK_FALSE(check.holds);
    REQUIRE(check.witness);
    CHECK(check.witness->vertex.to_string() == "011");
    CHECK(check.witness->coverage == 0);
    const auto twice = is_1perfect(BinaryCode(3, {0b000, 0b001, 0b110, 0b111}));
    REQUIRE(twice.witness);
    CHECK(twice.witness->vertex.to_string() == "000");
    CHECK(twice.witness->coverage == 2);
}

TEST_CASE("threaded sweeps agree with single-threaded ones") {
    const auto h = hamming(4);
    SweepOptions options;
    options.threads = 4;
    CHECK(is_1perfect(h, options).holds);
    const BinaryCode broken = set_difference(h, BinaryCode(15, {h.raw()[7]}));
    const auto a = is_1perfect(broken);
    const auto b = is_1perfect(broken, options);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->vertex == b.witness->vertex);
}

TEST_CASE("sweeps beyond the budget are refused") {
    SweepOptions options;
    options.max_length = 10;
    CHECK_THROWS_AS(is_1perfect(hamming(4), options), BudgetError);
}

TEST_CASE("shortening") {
    const auto h = hamming(3);
    CHECK(shorten(h).size() == 8);
    CHECK(double_shorten(h).size() == 4);
    CHECK(double_shorten(h).length() == 5);
    const auto at = shorten_at(h, 1);
    for (const auto w : at.words()) CHECK(h.contains(BinaryWord::parse("0" + w.to_string())));
    CHECK(double_shorten_at(h, 6, 7) == double_shorten(h));
    CHECK_THROWS_AS(shorten_at(h, 8), UsageError);
    CHECK_THROWS_AS(double_shorten_at(h, 2, 2), UsageError);
}

TEST_CASE("lengthening recovers 1-perfect codes at n=5 and n=13") {
    for (const int m : {3, 4}) {
        const auto c1 = double_shorten(hamming(m));
        const auto p = derive_partition(c1);
        const auto split = std::get<Split>(split_code(p.part(3)));
        const auto code = lengthen(c1, split.first, split.second);
        CHECK(code.length() == c1.length() + 2);
        CHECK(is_1perfect(code).holds);
        if (m == 3) CHECK(oracle::covers_exactly(oracle::as_multiset(oracle::strings(code)), 7, 1));
        CHECK_THROWS_AS(lengthen(c1, split.first, split.first), PreconditionError);
    }
}

TEST_CASE("every split of C4 at n=13 lengthens to a distinct 1-perfect code") {
    const auto c1 = double_shorten(hamming(4));
    const auto c4 = derive_partition(c1).part(3);
    SplitEnumerator splits(c4, 1024);
    REQUIRE(splits.count() == 256);
    std::set<std::vector<std::uint64_t>> codes;
    while (auto s = splits.next()) {
        const auto code = lengthen(c1, s->first, s->second);
        CHECK(is_1perfect(code).holds);
        codes.insert(std::vector<std::uint64_t>(code.raw().begin(), code.raw().end()));
    }
    CHECK(codes.size() == 256);
}

TEST_CASE("twofold codes B and D at n=5 against the oracle") {
    const auto c1 = double_shorten(hamming(3));
    for (const auto& t : {build_B(c1), build_D(c1)}) {
        CHECK(t.total_size() == 32);
        CHECK(is_twofold_1perfect(t).holds);
        CHECK(oracle::covers_exactly(as_map(t), 7, 2));
        CHECK(is_antipodal(t).holds);
    }
    CHECK(build_B(c1).max_multiplicity() == 2);
    CHECK(build_D(c1).max_multiplicity() == 1);
}

TEST_CASE("twofold codes at n=13: properties a) and b), splits into verified halves") {
    const auto c1 = double_shorten(hamming(4));
    for (const auto variant : {TwofoldVariant::B, TwofoldVariant::D}) {
        const auto t = variant == TwofoldVariant::B ? build_B(c1) : build_D(c1);
        CHECK(is_twofold_1perfect(t).holds);
        CHECK(is_antipodal(t).holds);
        for (std::size_t i = 0; i < t.distinct_size(); ++i) {
            const auto w = t.word(i);
            const bool a = w.at(14);
            const bool b = w.at(15);
            if (variant == TwofoldVariant::B) CHECK(t.entries()[i].multiplicity == (a == b ? 2U : 1U));
            if (a != b) CHECK(t.multiplicity(w.flipped(14).flipped(15)) == t.entries()[i].multiplicity);
        }
        const auto result = split_twofold(t, c1, variant);
        REQUIRE(std::holds_alternative<TwofoldSplit>(result));
        const auto& halves = std::get<TwofoldSplit>(result);
        CHECK(is_1perfect(halves.first).holds);
        CHECK(is_1perfect(halves.second).holds);
        CHECK(multiset_union(MultisetCode::from_set(halves.first), MultisetCode::from_set(halves.second)) == t);
    }
    CHECK_THROWS_AS(split_twofold(build_B(c1), c1, TwofoldVariant::D), PreconditionError);
}

TEST_CASE("D is closed under adding 0...011") {
    const auto c1 = double_shorten(hamming(4));
    const auto d = build_D(c1);
    CHECK(translate(d, BinaryWord(15, std::uint64_t{3} << 13)) == d);
}

TEST_CASE("equivalence report on Hamming-derived codes") {
    for (const int m : {3, 4}) {
        const auto report = equivalence_report(double_shorten(hamming(m)));
        CHECK(report.all_hold());
        REQUIRE(report.perfect_code);
        CHECK(is_1perfect(*report.perfect_code).holds);
        CHECK(report.b_split);
        CHECK(report.d_split);
    }
}

TEST_CASE("factorization of the extended partition gives a 1-perfect code of length 15") {
    const auto c1 = double_shorten(hamming(4));
    const auto extended = extend_partition(merge_parts(derive_partition(c1), 0, 1));
    const auto g1 = std::get<Split>(split_code(extended.part(0)));
    const auto g4 = std::get<Split>(split_code(extended.part(3)));
    const auto f = factorization_check(g1, g4, 14);
    CHECK(f.code.length() == 15);
    CHECK(f.code.size() == 2048);
    CHECK(f.perfect);
    CHECK_THROWS_AS(factorization_check(g1, g1, 14), PreconditionError);
}

TEST_CASE("property checks for twofold codes") {
    const auto c1 = double_shorten(hamming(4));
    const auto b = build_B(c1);
    const auto d = build_D(c1);
    CHECK(check_doubled(b, c1).holds);
    CHECK(check_shift_closed(b, ShiftScope::mixed_suffix).holds);
    CHECK_FALSE(check_shift_closed(b, ShiftScope::all).holds);
    CHECK(check_shift_closed(d, ShiftScope::all).holds);
    const auto single = check_doubled(d, c1);
    CHECK_FALSE(single.holds);
    REQUIRE(single.witness);
    const auto c1_00 = with_suffix(c1, "00");
    CHECK(*single.witness == c1_00[0]);

    // Dropping one 01-word breaks the pairing of its 10 partner.
    std::vector<MultisetCode::Entry> entries(b.entries().begin(), b.entries().end());
    const auto drop = std::find_if(entries.begin(), entries.end(), [](const MultisetCode::Entry& e) {
        return BinaryWord(15, e.bits).at(14) != BinaryWord(15, e.bits).at(15);
    });
    REQUIRE(drop != entries.end());
    entries.erase(drop);
    CHECK_FALSE(check_shift_closed(MultisetCode(15, entries), ShiftScope::mixed_suffix).holds);
}
