#include "perfcode/perfect.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "perfcode/errors.hpp"
#include "perfcode/partition.hpp"

namespace perfcode {

namespace {

void add_ball(std::vector<std::uint8_t>& counts, int n, const MultisetCode::Entry& e) {
    auto bump = [&](std::uint64_t v) {
        const unsigned c = counts[v] + e.multiplicity;
        counts[v] = static_cast<std::uint8_t>(std::min(c, 255U));
    };
    bump(e.bits);
    for (int k = 0; k < n; ++k) bump(e.bits ^ (std::uint64_t{1} << k));
}

Checked<CoverageWitness> coverage_sweep(int n, std::span<const MultisetCode::Entry> entries, unsigned expected,
                                        const SweepOptions& options) {
    if (n > options.max_length) {
        throw BudgetError("exhaustive sweep of H^" + std::to_string(n) + " exceeds the budget of length " +
                          std::to_string(options.max_length));
    }
    const std::size_t vertices = std::size_t{1} << n;
    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(entries.size())));
    std::vector<std::vector<std::uint8_t>> counts(threads);
    {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (entries.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                counts[t].assign(vertices, 0);
                const std::size_t begin = std::min(entries.size(), t * chunk);
                const std::size_t end = std::min(entries.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i) add_ball(counts[t], n, entries[i]);
            });
        }
    }
    auto& total = counts.front();
    for (unsigned t = 1; t < threads; ++t) {
        for (std::size_t v = 0; v < vertices; ++v) {
            total[v] = static_cast<std::uint8_t>(std::min(255U, static_cast<unsigned>(total[v]) + counts[t][v]));
        }
    }
    std::uint64_t best_key = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t v = 0; v < vertices; ++v) {
        if (total[v] != expected) best_key = std::min(best_key, lex_key(v, n));
    }
    if (best_key == std::numeric_limits<std::uint64_t>::max()) return Checked<CoverageWitness>::pass();
    const std::uint64_t v = lex_key(best_key, n);
    return Checked<CoverageWitness>::fail({BinaryWord(n, v), total[v], expected});
}

// Sweep when within budget; otherwise the packing certificate: distance >= 3 and
// |C| (n + 1) = 2^n.
bool certify_perfect(const BinaryCode& code, const SweepOptions& options) {
    const int n = code.length();
    if (n <= options.max_length) return is_1perfect(code, options).holds;
    if (n >= 63) return false;
    const std::uint64_t space = std::uint64_t{1} << n;
    const auto ball = static_cast<std::uint64_t>(n + 1);
    return space % ball == 0 && code.size() == space / ball && has_min_distance(code, 3);
}

void check_split_of(const BinaryCode& c4, const BinaryCode& first, const BinaryCode& second) {
    if (first.length() != c4.length() || second.length() != c4.length()) {
        throw PreconditionError("split parts have the wrong length");
    }
    if (!disjoint(first, second)) throw PreconditionError("split parts intersect");
    if (set_union(first, second) != c4) throw PreconditionError("split parts do not form C4");
    if (!has_min_distance(first, 3) || !has_min_distance(second, 3)) {
        throw PreconditionError("a split part has code distance below 3");
    }
}

BinaryCode assemble(std::initializer_list<std::pair<const BinaryCode*, const char*>> pieces) {
    BinaryCode out;
    bool first = true;
    for (const auto& [code, suffix] : pieces) {
        auto piece = with_suffix(*code, suffix);
        out = first ? std::move(piece) : set_union(out, piece);
        first = false;
    }
    return out;
}

}  // namespace

Checked<CoverageWitness> is_1perfect(const BinaryCode& code, const SweepOptions& options) {
    const auto multiset = MultisetCode::from_set(code);
    return coverage_sweep(code.length(), multiset.entries(), 1, options);
}

Checked<CoverageWitness> is_twofold_1perfect(const MultisetCode& code, const SweepOptions& options) {
    return coverage_sweep(code.length(), code.entries(), 2, options);
}

BinaryCode shorten_at(const BinaryCode& code, int coordinate) {
    const int n = code.length();
    if (n < 2) throw UsageError("shortening needs length at least 2");
    if (coordinate < 1 || coordinate > n) throw UsageError("coordinate out of range");
    const int k = coordinate - 1;
    const std::uint64_t low = low_mask(k);
    std::vector<std::uint64_t> bits;
    for (const auto b : code.raw()) {
        if ((b >> k) & 1U) continue;
        bits.push_back((b & low) | ((b >> (k + 1)) << k));
    }
    return {n - 1, std::move(bits)};
}

BinaryCode double_shorten_at(const BinaryCode& code, int first, int second) {
    if (code.length() < 3) throw UsageError("double shortening needs length at least 3");
    if (first == second) throw UsageError("double shortening needs two distinct coordinates");
    const int hi = std::max(first, second);
    const int lo = std::min(first, second);
    return shorten_at(shorten_at(code, hi), lo);
}

BinaryCode shorten(const BinaryCode& code) { return shorten_at(code, code.length()); }

BinaryCode double_shorten(const BinaryCode& code) {
    if (code.length() < 3) throw UsageError("double shortening needs length at least 3");
    return shorten(shorten(code));
}

BinaryCode lengthen(const BinaryCode& c1, const BinaryCode& first, const BinaryCode& second) {
    const Partition p = derive_partition(c1);
    check_split_of(p.part(3), first, second);
    return assemble({{&p.part(0), "00"}, {&p.part(1), "11"}, {&first, "01"}, {&second, "10"}});
}

Checked<BinaryWord> check_doubled(const MultisetCode& code, const BinaryCode& c1) {
    if (code.length() != c1.length() + 2) throw UsageError("multiset length must be |C1| length + 2");
    const auto c1_00 = with_suffix(c1, "00");
    for (const auto w : c1_00.words()) {
        if (code.multiplicity(w) != 2) return Checked<BinaryWord>::fail(w);
    }
    return Checked<BinaryWord>::pass();
}

Checked<BinaryWord> check_shift_closed(const MultisetCode& code, ShiftScope scope) {
    const int n = code.length();
    if (n < 2) throw UsageError("shift by 0...011 needs length >= 2");
    for (std::size_t i = 0; i < code.distinct_size(); ++i) {
        const auto w = code.word(i);
        if (scope == ShiftScope::mixed_suffix && w.at(n - 1) == w.at(n)) continue;
        if (code.multiplicity(w.flipped(n - 1).flipped(n)) == 0) return Checked<BinaryWord>::fail(w);
    }
    return Checked<BinaryWord>::pass();
}

MultisetCode build_B(const BinaryCode& c1) {
    const Partition p = derive_partition(c1);
    const auto twice = [](const BinaryCode& c, const char* suffix) { return MultisetCode::from_set(with_suffix(c, suffix), 2); };
    const auto once = [](const BinaryCode& c, const char* suffix) { return MultisetCode::from_set(with_suffix(c, suffix)); };
    return multiset_union(multiset_union(twice(p.part(0), "00"), twice(p.part(1), "11")),
                          multiset_union(once(p.part(3), "01"), once(p.part(3), "10")));
}

MultisetCode build_D(const BinaryCode& c1) {
    const Partition p = derive_partition(c1);
    return MultisetCode::from_set(assemble({{&p.part(0), "00"},
                                            {&p.part(1), "00"},
                                            {&p.part(0), "11"},
                                            {&p.part(1), "11"},
                                            {&p.part(3), "01"},
                                            {&p.part(3), "10"}}));
}

std::variant<TwofoldSplit, OddCycleWitness> split_twofold(const MultisetCode& twofold, const BinaryCode& c1,
                                                         TwofoldVariant variant, const SweepOptions& options) {
    const MultisetCode expected = variant == TwofoldVariant::B ? build_B(c1) : build_D(c1);
    if (twofold != expected) {
        throw PreconditionError(std::string("multiset is not the twofold code ") +
                                (variant == TwofoldVariant::B ? "B" : "D") + " of the given C1");
    }
    const Partition p = derive_partition(c1);
    auto result = split_code(p.part(3));
    if (auto* cycle = std::get_if<OddCycleWitness>(&result)) return std::move(*cycle);
    const auto& split = std::get<Split>(result);
    const BinaryCode& c1p = p.part(0);
    const BinaryCode& c2p = p.part(1);
    TwofoldSplit halves;
    halves.first = assemble({{&c1p, "00"}, {&c2p, "11"}, {&split.first, "01"}, {&split.second, "10"}});
    if (variant == TwofoldVariant::B) {
        halves.second = assemble({{&c1p, "00"}, {&c2p, "11"}, {&split.first, "10"}, {&split.second, "01"}});
    } else {
        halves.second = assemble({{&c2p, "00"}, {&c1p, "11"}, {&split.first, "10"}, {&split.second, "01"}});
    }
    if (!certify_perfect(halves.first, options) || !certify_perfect(halves.second, options)) {
        throw std::logic_error("a half of the twofold code failed 1-perfect verification");
    }
    if (multiset_union(MultisetCode::from_set(halves.first), MultisetCode::from_set(halves.second)) != twofold) {
        throw std::logic_error("the two halves do not reassemble the twofold code");
    }
    return halves;
}

Factorization factorization_check(const Split& g1, const Split& g4, int extended_length, const SweepOptions& options) {
    const BinaryCode* parts[] = {&g1.first, &g1.second, &g4.first, &g4.second};
    for (const auto* part : parts) {
        if (part->length() != extended_length) throw PreconditionError("split part has the wrong length");
        if (!has_min_distance(*part, 3)) throw PreconditionError("split part has code distance below 3");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!disjoint(*parts[i], *parts[j])) throw PreconditionError("split parts intersect");
        }
    }
    Factorization f;
    f.code = assemble({{&g1.first, "0"}, {&g1.second, "1"}, {&g4.first, "0"}, {&g4.second, "1"}});
    f.perfect = is_1perfect(f.code, options).holds;
    return f;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

bool EquivalenceReport::all_hold() const {
    return a == Verdict::holds && b == Verdict::holds && c == Verdict::holds && d == Verdict::holds;
}

std::string EquivalenceReport::summary() const {
    std::ostringstream os;
    os << "a) C1 00 in a 1-perfect code: " << to_string(a) << '\n'
       << "b) C4 splittable: " << to_string(b) << '\n'
       << "c) B splittable: " << to_string(c) << '\n'
       << "d) D splittable: " << to_string(d) << '\n';
    return os.str();
}

EquivalenceReport equivalence_report(const BinaryCode& c1, const SweepOptions& options) {
    const Partition p = derive_partition(c1);
    EquivalenceReport report;

    auto c4_result = split_code(p.part(3));
    if (auto* split = std::get_if<Split>(&c4_result)) {
        report.b = Verdict::holds;
        report.components = split->components;
        report.c4_split = std::move(*split);
    } else {
        report.b = Verdict::fails;
        report.c4_cycle = std::get<OddCycleWitness>(std::move(c4_result));
    }

    auto split_twofold_code = [&](const MultisetCode& code, Verdict& verdict, std::optional<TwofoldSplit>& halves,
                                  std::optional<OddCycleWitness>& cycle) {
        auto result = split_multiset(code, {0, 1, 2});
        if (auto* split = std::get_if<Split>(&result)) {
            if (!certify_perfect(split->first, options) || !certify_perfect(split->second, options)) {
                throw std::logic_error("a colour class of a twofold code is not 1-perfect");
            }
            verdict = Verdict::holds;
            halves = TwofoldSplit{std::move(split->first), std::move(split->second)};
        } else {
            verdict = Verdict::fails;
            cycle = std::get<OddCycleWitness>(std::move(result));
        }
    };
    split_twofold_code(build_B(c1), report.c, report.b_split, report.b_cycle);
    split_twofold_code(build_D(c1), report.d, report.d_split, report.d_cycle);

    const BinaryCode c1_00 = with_suffix(p.part(0), "00");
    auto contains_all = [&](const BinaryCode& code) {
        return std::all_of(c1_00.raw().begin(), c1_00.raw().end(),
                           [&](std::uint64_t b) { return code.contains(BinaryWord(code.length(), b)); });
    };
    if (report.c4_split) {
        auto code = lengthen(c1, report.c4_split->first, report.c4_split->second);
        if (!certify_perfect(code, options) || !contains_all(code)) {
            throw std::logic_error("lengthened code is not a 1-perfect superset of C1 00");
        }
        report.a = Verdict::holds;
        report.perfect_code = std::move(code);
    } else if (report.b_split && contains_all(report.b_split->first)) {
        report.a = Verdict::holds;
        report.perfect_code = report.b_split->first;
    } else {
        // A 1-perfect code C containing C1 00 would split C4 into {x : x01 in C} and
        // {x : x10 in C}; the odd cycle of C4 rules that out.
        report.a = Verdict::fails;
    }

    if (report.a != report.b || report.b != report.c || report.c != report.d) {
        throw std::logic_error("equivalence verdicts disagree:\n" + report.summary());
    }
    return report;
}

}  // namespace perfcode
