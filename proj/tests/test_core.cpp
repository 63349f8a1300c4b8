#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "perfcode/code.hpp"
#include "perfcode/code_io.hpp"
#include "perfcode/distribution.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/quaternary.hpp"
#include "perfcode/word.hpp"

using namespace perfcode;

TEST_CASE("words parse with coordinate 1 first and order lexicographically") {
    const auto w = BinaryWord::parse("1100");
    CHECK(w.length() == 4);
    CHECK(w.at(1));
    CHECK(w.at(2));
    CHECK_FALSE(w.at(3));
    CHECK(w.bits() == 0b0011);
    CHECK(w.to_string() == "1100");
    CHECK(BinaryWord::parse("0111") < BinaryWord::parse("1000"));
    CHECK(BinaryWord::parse("0011").concat("01").to_string() == "001101");
    CHECK(BinaryWord::parse("001101").truncated(2).to_string() == "0011");
    CHECK(BinaryWord::from_lex_key(4, 1).to_string() == "0001");
    CHECK_THROWS_AS(BinaryWord::parse("012"), UsageError);
    CHECK_THROWS_AS((void)(BinaryWord::parse("01") == BinaryWord::parse("011")), UsageError);
}

TEST_CASE("hamming distance matches the string oracle and is a metric") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 63);
        const BinaryWord x(n, rng() & low_mask(n));
        const BinaryWord y(n, rng() & low_mask(n));
        const BinaryWord z(n, rng() & low_mask(n));
        CHECK(hamming_distance(x, y) == oracle::distance(x.to_string(), y.to_string()));
        CHECK(hamming_distance(x, y) == hamming_distance(y, x));
        CHECK((hamming_distance(x, y) == 0) == (x == y));
        CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
    }
}

TEST_CASE("quaternary words pack coordinate 1 most significant") {
    const auto w = QuaternaryWord::parse("0312");
    CHECK(w.packed() == 0b00'11'01'10);
    CHECK(w.digit(2) == 3);
    CHECK(w.with_digit(1, 2).to_string() == "2312");
    CHECK(hamming_distance(w, QuaternaryWord::parse("0322")) == 1);
    CHECK(hamming_distance(QuaternaryWord::parse("1230"), QuaternaryWord::parse("2301")) == 4);
}

TEST_CASE("codes are sorted lexicographically without duplicates") {
    const BinaryCode c(3, {0b100, 0b001, 0b100, 0b000});
    REQUIRE(c.size() == 3);
    CHECK(c[0].to_string() == "000");
    CHECK(c[1].to_string() == "001");
    CHECK(c[2].to_string() == "100");
    CHECK(c.contains(BinaryWord::parse("001")));
    CHECK_FALSE(c.contains(BinaryWord::parse("010")));
}

TEST_CASE("multisets merge repeated words") {
    const MultisetCode m(3, {{0b001, 1}, {0b001, 2}, {0b010, 1}});
    CHECK(m.distinct_size() == 2);
    CHECK(m.total_size() == 4);
    CHECK(m.multiplicity(BinaryWord::parse("100")) == 3);
    CHECK(m.max_multiplicity() == 3);
}

TEST_CASE("code distance") {
    CHECK(code_distance(hamming(3)) == 3);
    CHECK(code_distance(BinaryCode(4, {0b0000, 0b0011})) == 2);
    CHECK_FALSE(code_distance(BinaryCode(4, {0b0000})).has_value());
    CHECK(code_distance(BinaryCode(5, {0b00000, 0b11111})) == 5);
    CHECK(has_min_distance(hamming(4), 3));
    CHECK_FALSE(has_min_distance(hamming(4), 4));
    CHECK(code_distance(hamming(4)) == oracle::min_distance(oracle::strings(hamming(4))));
}

TEST_CASE("weight distribution sums to the code size") {
    const auto h = hamming(3);
    const auto dist = weight_distribution(BinaryWord::zero(7), h);
    CHECK(dist == std::vector<std::int64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    std::mt19937_64 rng(5);
    const auto h4 = hamming(4);
    for (int t = 0; t < 20; ++t) {
        const BinaryWord x(15, rng() & low_mask(15));
        const auto d = weight_distribution(x, h4);
        std::int64_t total = 0;
        for (const auto v : d) total += v;
        CHECK(total == static_cast<std::int64_t>(h4.size()));
    }
    const MultisetCode m(3, {{0b000, 2}, {0b111, 1}});
    CHECK(weight_distribution(BinaryWord::zero(3), m) == std::vector<std::int64_t>{2, 0, 0, 1});
}

TEST_CASE("antipodality") {
    CHECK(is_antipodal(hamming(3)).holds);
    const auto single = is_antipodal(BinaryCode(3, {0}));
    CHECK_FALSE(single.holds);
    REQUIRE(single.witness);
    CHECK(single.witness->to_string() == "111");
}

TEST_CASE("mean distribution matches brute force") {
    const auto c = hamming(3);
    const auto t = mean_distribution(c, c);
    for (int l = 0; l <= 7; ++l) {
        CHECK(t.mean(l) == Rational(weight_distribution(BinaryWord::zero(7), c)[static_cast<std::size_t>(l)]));
    }
    CHECK(t.mean(-1) == Rational(0));
    CHECK(t.mean(8) == Rational(0));
    const BinaryCode a(3, {0b000, 0b001});
    const BinaryCode b(3, {0b111});
    const auto ab = mean_distribution(a, b);
    CHECK(ab.mean(3) == Rational(1, 2));
    CHECK(ab.mean(2) == Rational(1, 2));
}

TEST_CASE("code files: multiplicity suffix, comments, blank lines") {
    std::istringstream in("# header\n\n0000000000000111 x2\n0000000000000011\n");
    const auto m = parse_multiset(in);
    CHECK(m.length() == 16);
    CHECK(m.distinct_size() == 2);
    CHECK(m.multiplicity(BinaryWord::parse("0000000000000111")) == 2);
    CHECK(m.total_size() == 3);
}

TEST_CASE("code files: errors carry line numbers") {
    auto parse_error_line = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            (void)parse_multiset(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 9999;
    };
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("# only a comment\n") == 0);
    CHECK(parse_error_line("010\n0120\n") == 2);
    CHECK(parse_error_line("010\n0101\n") == 2);
    CHECK(parse_error_line("010 x1\n") == 1);
    CHECK(parse_error_line("010 y2\n") == 1);
    CHECK(parse_error_line("010 x2z\n") == 1);
    std::istringstream dup("010\n010\n");
    CHECK_THROWS_AS((void)parse_code(dup), ParseError);
    std::istringstream mult("010 x2\n");
    CHECK_THROWS_AS((void)parse_code(mult), ParseError);
}

TEST_CASE("code files round-trip") {
    const auto h = hamming(4);
    std::istringstream in(format_code(h, {"provenance"}));
    CHECK(parse_code(in) == h);

    const MultisetCode m(5, {{0b00001, 2}, {0b10100, 1}, {0b11111, 3}});
    std::istringstream min(format_code(m));
    CHECK(parse_multiset(min) == m);

    const QuaternaryCode q(3, {0b000000, 0b011011, 0b111001});
    std::istringstream qin(format_code(q));
    CHECK(parse_quaternary(qin) == q);

    const auto path = std::filesystem::temp_directory_path() / "perfcode_roundtrip.code";
    write_code(path, m, {"a", "b"});
    CHECK(read_multiset(path) == m);
    std::filesystem::remove(path);
}

TEST_CASE("canonical output is lexicographic with x<k> suffixes") {
    const MultisetCode m(3, {{0b001, 2}, {0b000, 1}});
    CHECK(format_code(m) == "000\n100 x2\n");
}

TEST_CASE("fingerprint is CRC-32 of the text") {
    CHECK(fingerprint("123456789") == "cbf43926");
}
