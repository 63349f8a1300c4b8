#include "perfcode/mds.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/partition.hpp"

namespace perfcode {

namespace {

std::uint64_t cube_size(int m) { return std::uint64_t{1} << (2 * m); }

void check_mds_length(int m) {
    if (m < 1 || m > kMaxMdsLength) {
        throw UsageError("quaternary length " + std::to_string(m) + " outside 1.." + std::to_string(kMaxMdsLength));
    }
}

std::string describe(const LineWitness& w) {
    std::ostringstream os;
    os << "line through " << w.line.base.to_string() << " along coordinate " << w.line.position << " meets the code in "
       << w.hits.size() << " words (expected " << w.expected << ")";
    return os.str();
}

std::string describe(const QuaternaryCycle& cycle) {
    std::ostringstream os;
    os << "odd cycle of length " << cycle.words.size() << ":";
    for (const auto& w : cycle.words) os << ' ' << w.to_string();
    return os.str();
}

// Index of each word of the code by rank, npos elsewhere.
std::vector<std::uint32_t> rank_index(const QuaternaryCode& code) {
    std::vector<std::uint32_t> index(cube_size(code.m()), WordIndex::npos);
    for (std::size_t i = 0; i < code.size(); ++i) index[code.raw()[i]] = static_cast<std::uint32_t>(i);
    return index;
}

}  // namespace

Checked<LineWitness> check_lines(const QuaternaryCode& code, int expected) {
    const int m = code.m();
    check_mds_length(m);
    const auto ind = code.indicator();
    const std::uint64_t size = cube_size(m);
    for (int p = 1; p <= m; ++p) {
        const int shift = 2 * (m - p);
        for (std::uint64_t base = 0; base < size; ++base) {
            if (((base >> shift) & 3U) != 0) continue;
            int hits = 0;
            for (std::uint64_t s = 0; s < 4; ++s) hits += ind[base | (s << shift)];
            if (hits == expected) continue;
            LineWitness w{{p, QuaternaryWord(m, base)}, {}, expected};
            for (std::uint64_t s = 0; s < 4; ++s) {
                if (ind[base | (s << shift)]) w.hits.emplace_back(m, base | (s << shift));
            }
            return Checked<LineWitness>::fail(std::move(w));
        }
    }
    return Checked<LineWitness>::pass();
}

MdsSplitResult split_double_mds(const QuaternaryCode& code) {
    if (auto check = is_double_mds(code); !check) {
        throw PreconditionError("not a double-MDS code: " + describe(*check.witness));
    }
    const int m = code.m();
    const auto index = rank_index(code);
    Adjacency graph;
    graph.offsets.reserve(code.size() + 1);
    std::vector<std::uint32_t> row;
    for (const auto word : code.raw()) {
        row.clear();
        for (int p = 1; p <= m; ++p) {
            const int shift = 2 * (m - p);
            const std::uint64_t base = word & ~(std::uint64_t{3} << shift);
            for (std::uint64_t s = 0; s < 4; ++s) {
                const std::uint64_t other = base | (s << shift);
                if (other != word && index[other] != WordIndex::npos) row.push_back(index[other]);
            }
        }
        std::sort(row.begin(), row.end());
        graph.targets.insert(graph.targets.end(), row.begin(), row.end());
        graph.offsets.push_back(static_cast<std::uint32_t>(graph.targets.size()));
    }

    auto colouring = two_colour(graph);
    if (auto* cycle = std::get_if<std::vector<std::uint32_t>>(&colouring)) {
        QuaternaryCycle out;
        for (const auto v : *cycle) out.words.push_back(code[v]);
        return out;
    }
    const auto& colours = std::get<std::vector<std::uint8_t>>(colouring);
    std::vector<std::uint64_t> first;
    std::vector<std::uint64_t> second;
    for (std::size_t i = 0; i < code.size(); ++i) (colours[i] == 0 ? first : second).push_back(code.raw()[i]);
    MdsSplit split{{m, std::move(first)}, {m, std::move(second)}, connected_components(graph).count};
    if (!is_mds(split.first) || !is_mds(split.second)) {
        throw std::logic_error("colour class of a double-MDS code is not MDS");
    }
    return split;
}

bool is_splittable(const QuaternaryCode& code) { return std::holds_alternative<MdsSplit>(split_double_mds(code)); }

bool is_quaternary_odd_cycle(const QuaternaryCycle& cycle) {
    const auto& w = cycle.words;
    if (w.size() < 3 || w.size() % 2 == 0) return false;
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (hamming_distance(w[i], w[(i + 1) % w.size()]) != 1) return false;
    }
    return true;
}

std::array<BinaryWord, 2> p_pair(int symbol) {
    static const std::array<std::array<BinaryWord, 2>, 4> table{{
        {BinaryWord::parse("0000"), BinaryWord::parse("1111")},
        {BinaryWord::parse("0011"), BinaryWord::parse("1100")},
        {BinaryWord::parse("0101"), BinaryWord::parse("1010")},
        {BinaryWord::parse("0110"), BinaryWord::parse("1001")},
    }};
    if (symbol < 0 || symbol > 3) throw UsageError("quaternary digit out of range");
    return table[static_cast<std::size_t>(symbol)];
}

std::array<BinaryWord, 2> p_prime_pair(int symbol) {
    static const std::array<std::array<BinaryWord, 2>, 4> table{{
        {BinaryWord::parse("000"), BinaryWord::parse("111")},
        {BinaryWord::parse("011"), BinaryWord::parse("100")},
        {BinaryWord::parse("101"), BinaryWord::parse("010")},
        {BinaryWord::parse("110"), BinaryWord::parse("001")},
    }};
    if (symbol < 0 || symbol > 3) throw UsageError("quaternary digit out of range");
    return table[static_cast<std::size_t>(symbol)];
}

namespace {

void check_s_of_m_inputs(const QuaternaryCode& code, const BinaryCode& perfect) {
    const int m = code.m();
    if (m < 2 || 4 * m - 1 > kMaxBinaryLength) throw UsageError("S(M) needs 2 <= m <= 16");
    if (code.empty()) throw PreconditionError("S(M) of an empty code");
    if (perfect.length() != m - 1) {
        throw PreconditionError("C must have length m - 1 = " + std::to_string(m - 1));
    }
    if (!is_1perfect(perfect)) throw PreconditionError("C is not 1-perfect");
}

std::uint64_t c_star(std::uint64_t c, int m) {
    std::uint64_t out = 0;
    for (int i = 1; i < m; ++i) {
        if ((c >> (i - 1)) & 1U) out |= std::uint64_t{1} << (4 * i - 1);
    }
    return out;
}

}  // namespace

BinaryCode s_of_m(const QuaternaryCode& code, const BinaryCode& perfect) {
    check_s_of_m_inputs(code, perfect);
    const int m = code.m();
    const int n = 4 * m - 1;
    std::vector<std::uint64_t> stars;
    for (const auto c : perfect.raw()) stars.push_back(c_star(c, m));

    std::vector<std::uint64_t> bits;
    bits.reserve(code.size() * (std::size_t{1} << m) * stars.size());
    std::vector<std::array<std::uint64_t, 2>> blocks(static_cast<std::size_t>(m));
    for (const auto mu : code.words()) {
        for (int i = 1; i <= m; ++i) {
            const auto pair = i < m ? p_pair(mu.digit(i)) : p_prime_pair(mu.digit(i));
            const int offset = 4 * (i - 1);
            blocks[static_cast<std::size_t>(i - 1)] = {pair[0].bits() << offset, pair[1].bits() << offset};
        }
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
            std::uint64_t word = 0;
            for (int i = 0; i < m; ++i) word |= blocks[static_cast<std::size_t>(i)][(choice >> i) & 1U];
            for (const auto star : stars) bits.push_back(word ^ star);
        }
    }
    const std::size_t generated = bits.size();
    BinaryCode out(n, std::move(bits));
    if (out.size() != generated) throw std::logic_error("S(M) generated a word twice");
    return out;
}

BinaryWord s_of_m_representative(const QuaternaryWord& mu, const BinaryCode& perfect) {
    const int m = mu.length();
    if (perfect.empty() || perfect.length() != m - 1) throw UsageError("C must be a nonempty code of length m - 1");
    std::uint64_t word = 0;
    for (int i = 1; i <= m; ++i) {
        const auto pair = i < m ? p_pair(mu.digit(i)) : p_prime_pair(mu.digit(i));
        word |= pair[0].bits() << (4 * (i - 1));
    }
    return {4 * m - 1, word ^ c_star(perfect.raw()[0], m)};
}

TwofoldSofM s_of_m_twofold(const QuaternaryCode& code, const BinaryCode& perfect, const SweepOptions& options) {
    if (auto check = is_double_mds(code); !check) {
        throw PreconditionError("not a double-MDS code: " + describe(*check.witness));
    }
    const BinaryCode s = s_of_m(code, perfect);
    TwofoldSofM out;
    out.code = MultisetCode::from_set(s);
    out.twofold_perfect = is_twofold_1perfect(out.code, options).holds;

    auto split = split_double_mds(code);
    if (auto* halves = std::get_if<MdsSplit>(&split)) {
        out.splittable = true;
        TwofoldSplit carried{s_of_m(halves->first, perfect), s_of_m(halves->second, perfect)};
        out.witness_verified = is_1perfect(carried.first, options).holds && is_1perfect(carried.second, options).holds &&
                               disjoint(carried.first, carried.second) &&
                               set_union(carried.first, carried.second) == s;
        out.split = std::move(carried);
    } else {
        const auto& cycle = std::get<QuaternaryCycle>(split);
        OddCycleWitness carried;
        for (const auto& mu : cycle.words) carried.words.push_back(s_of_m_representative(mu, perfect));
        out.witness_verified =
            is_quaternary_odd_cycle(cycle) && is_odd_cycle(carried, {1, 2}) &&
            std::all_of(carried.words.begin(), carried.words.end(), [&](const BinaryWord& w) { return s.contains(w); });
        out.cycle = std::move(carried);
    }
    out.direct_splittable = std::holds_alternative<Split>(split_code(s));
    return out;
}

bool PipelineReport::consistent() const {
    const bool equivalence_ok = hypothesis_met ? (equivalence.a == Verdict::fails && equivalence.b == Verdict::fails &&
                                                  equivalence.c == Verdict::fails && equivalence.d == Verdict::fails)
                                               : equivalence.all_hold();
    return m_double_mds && c1_size == expected_c1_size && c1_distance == 3 && c_distance_3 && d_twofold &&
           c1_00_in_d && d_shift_closed && d_matches_build_D && equivalence_ok;
}

std::string PipelineReport::summary() const {
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "k = " << k << ", m = " << m << '\n'
       << "hypothesis (M1 unsplittable, complement splittable): " << (hypothesis_met ? "met" : "NOT met") << '\n'
       << "M double-MDS: " << yes(m_double_mds) << '\n'
       << "|C| = " << c_size << ", code distance >= 3: " << yes(c_distance_3) << '\n'
       << "|C1| = " << c1_size << " (expected " << expected_c1_size << "), d(C1) = ";
    if (c1_distance) {
        os << *c1_distance;
    } else {
        os << "-";
    }
    os << '\n'
       << "D twofold 1-perfect: " << yes(d_twofold) << '\n'
       << "C1 00 in D: " << yes(c1_00_in_d) << '\n'
       << "D closed under + 0...011: " << yes(d_shift_closed) << '\n'
       << "D equals the D-construction of C1: " << yes(d_matches_build_D) << '\n'
       << equivalence.summary() << "consistent: " << yes(consistent()) << '\n';
    return os.str();
}

PipelineResult c1_pipeline(const QuaternaryCode& m1, int k, const SweepOptions& options) {
    if (k < 3) throw UsageError("k must be at least 3");
    if (k > 4) throw BudgetError("k > 4 gives codes of length 2^k - 1 > 15, beyond exhaustive verification");
    const int m = 1 << (k - 2);
    if (m1.m() != m - 1) throw UsageError("M1 must lie in Q^" + std::to_string(m - 1));
    if (auto check = is_double_mds(m1); !check) {
        throw PreconditionError("M1 is not a double-MDS code: " + describe(*check.witness));
    }
    const QuaternaryCode m0 = complement(m1);
    auto m0_split = split_double_mds(m0);
    if (auto* cycle = std::get_if<QuaternaryCycle>(&m0_split)) {
        throw PreconditionError("complement of M1 is unsplittable: " + describe(*cycle));
    }
    const auto& halves = std::get<MdsSplit>(m0_split);

    PipelineReport report;
    report.k = k;
    report.m = m;
    report.hypothesis_met = !is_splittable(m1);

    const QuaternaryCode big =
        set_union(set_union(with_suffix(m0, 0), with_suffix(m0, 1)), set_union(with_suffix(m1, 2), with_suffix(m1, 3)));
    report.m_double_mds = is_double_mds(big).holds;

    const BinaryCode perfect = hamming(k - 2);
    const BinaryCode d = s_of_m(big, perfect);
    const BinaryCode c = s_of_m(set_union(with_suffix(halves.first, 0), with_suffix(halves.second, 1)), perfect);
    const int n = 4 * m - 3;
    report.c_size = c.size();
    report.c_distance_3 = has_min_distance(c, 3);

    BinaryCode c1 = double_shorten(c);
    report.c1_size = c1.size();
    report.expected_c1_size = std::size_t{1} << ((1 << k) - k - 3);
    report.c1_distance = code_distance(c1);

    const auto d_multiset = MultisetCode::from_set(d);
    report.d_twofold = is_twofold_1perfect(d_multiset, options).holds;
    const BinaryCode c1_00 = with_suffix(c1, "00");
    report.c1_00_in_d = set_difference(c1_00, d).empty();
    report.d_shift_closed = translate(d, BinaryWord(n + 2, std::uint64_t{3} << n)) == d;

    check_doubly_shortened_parameters(c1);
    report.d_matches_build_D = build_D(c1) == d_multiset;
    report.equivalence = equivalence_report(c1, options);
    return {std::move(c1), std::move(report)};
}

LatinHypercuboid::LatinHypercuboid(int dims, int layers, std::vector<std::uint8_t> cells)
    : dims_(dims), layers_(layers), cells_(std::move(cells)) {
    if (dims < 0 || dims + 1 > kMaxMdsLength) throw UsageError("latin hypercuboid dimension out of range");
    if (layers != 2 && layers != 4) throw UsageError("latin hypercuboid needs 2 or 4 layers");
    const std::uint64_t points = cube_size(dims);
    if (cells_.size() != points * static_cast<std::uint64_t>(layers)) {
        throw UsageError("latin hypercuboid cell count does not match its shape");
    }
    for (const auto v : cells_) {
        if (v > 3) throw UsageError("latin hypercuboid symbol out of range");
    }
    auto fail = [](std::uint64_t x, int layer, const std::string& along) {
        throw PreconditionError("not latin: repeated symbol at point " + std::to_string(x) + ", layer " +
                                std::to_string(layer) + " along " + along);
    };
    for (std::uint64_t x = 0; x < points; ++x) {
        unsigned seen = 0;
        for (int l = 0; l < layers; ++l) {
            const unsigned bit = 1U << at(x, l);
            if (seen & bit) fail(x, l, "the layer index");
            seen |= bit;
        }
    }
    for (int p = 1; p <= dims; ++p) {
        const int shift = 2 * (dims - p);
        for (std::uint64_t base = 0; base < points; ++base) {
            if (((base >> shift) & 3U) != 0) continue;
            for (int l = 0; l < layers; ++l) {
                unsigned seen = 0;
                for (std::uint64_t s = 0; s < 4; ++s) {
                    const unsigned bit = 1U << at(base | (s << shift), l);
                    if (seen & bit) fail(base, l, "coordinate " + std::to_string(p));
                    seen |= bit;
                }
            }
        }
    }
}

LatinHypercuboid to_latin(const QuaternaryCode& code) {
    const int m = code.m();
    check_mds_length(m);
    const auto ind = code.indicator();
    if (is_mds(code)) {
        if (m < 2) throw PreconditionError("an MDS code in Q^1 has no latin hypercube form");
        const int dims = m - 2;
        std::vector<std::uint8_t> cells(cube_size(dims) * 4);
        for (std::uint64_t x = 0; x < cube_size(dims); ++x) {
            for (std::uint64_t l = 0; l < 4; ++l) {
                for (std::uint64_t s = 0; s < 4; ++s) {
                    if (ind[(x << 4) | (l << 2) | s]) cells[x * 4 + l] = static_cast<std::uint8_t>(s);
                }
            }
        }
        return {dims, 4, std::move(cells)};
    }
    const auto check = is_double_mds(code);
    if (!check) throw PreconditionError("neither MDS nor double-MDS: " + describe(*check.witness));
    auto split = split_double_mds(code);
    if (auto* cycle = std::get_if<QuaternaryCycle>(&split)) {
        throw PreconditionError("unsplittable double-MDS code has no cuboid form: " + describe(*cycle));
    }
    const auto& halves = std::get<MdsSplit>(split);
    const int dims = m - 1;
    std::vector<std::uint8_t> cells(cube_size(dims) * 2);
    for (const auto w : halves.first.raw()) cells[(w >> 2) * 2] = static_cast<std::uint8_t>(w & 3U);
    for (const auto w : halves.second.raw()) cells[(w >> 2) * 2 + 1] = static_cast<std::uint8_t>(w & 3U);
    return {dims, 2, std::move(cells)};
}

QuaternaryCode from_latin(const LatinHypercuboid& latin) {
    std::vector<std::uint64_t> words;
    const std::uint64_t points = cube_size(latin.dims());
    for (std::uint64_t x = 0; x < points; ++x) {
        for (int l = 0; l < latin.layers(); ++l) {
            const auto s = static_cast<std::uint64_t>(latin.at(x, l));
            if (latin.layers() == 4) {
                words.push_back((x << 4) | (static_cast<std::uint64_t>(l) << 2) | s);
            } else {
                words.push_back((x << 2) | s);
            }
        }
    }
    return {latin.layers() == 4 ? latin.dims() + 2 : latin.dims() + 1, std::move(words)};
}

std::variant<LatinHypercuboid, QuaternaryCycle> complete(const LatinHypercuboid& cuboid) {
    if (cuboid.layers() != 2) throw UsageError("only two-layer cuboids are completed");
    auto split = split_double_mds(complement(from_latin(cuboid)));
    if (auto* cycle = std::get_if<QuaternaryCycle>(&split)) return std::move(*cycle);
    const auto& halves = std::get<MdsSplit>(split);
    const std::uint64_t points = cube_size(cuboid.dims());
    std::vector<std::uint8_t> cells(points * 4);
    for (std::uint64_t x = 0; x < points; ++x) {
        cells[x * 4] = static_cast<std::uint8_t>(cuboid.at(x, 0));
        cells[x * 4 + 1] = static_cast<std::uint8_t>(cuboid.at(x, 1));
    }
    for (const auto w : halves.first.raw()) cells[(w >> 2) * 4 + 2] = static_cast<std::uint8_t>(w & 3U);
    for (const auto w : halves.second.raw()) cells[(w >> 2) * 4 + 3] = static_cast<std::uint8_t>(w & 3U);
    return LatinHypercuboid(cuboid.dims(), 4, std::move(cells));
}

namespace {

class DoubleMdsSearch {
public:
    explicit DoubleMdsSearch(const SearchOptions& options)
        : options_(options), m_(options.m), cells_(static_cast<int>(cube_size(options.m))) {
        lines_.resize(static_cast<std::size_t>(cells_));
        for (int c = 0; c < cells_; ++c) {
            for (int p = 1; p <= m_; ++p) {
                const int shift = 2 * (m_ - p);
                const auto base = static_cast<std::uint64_t>(c) & ~(std::uint64_t{3} << shift);
                lines_[static_cast<std::size_t>(c)].push_back(static_cast<std::uint32_t>((p - 1) * cells_ + base));
            }
        }
        ones_.assign(static_cast<std::size_t>(m_ * cells_), 0);
        zeros_.assign(static_cast<std::size_t>(m_ * cells_), 0);
        membership_.assign(static_cast<std::size_t>(cells_), 0);
        if (options.symmetry_reduction) {
            fixed_ = {1, 1, 0, 0};
            findings_.orbit_factor = 6;
        }
    }

    SearchFindings run() {
        aborted_ = false;
        visit(0);
        findings_.complete = !aborted_;
        return std::move(findings_);
    }

private:
    void visit(int cell) {
        if (findings_.nodes >= options_.budget) {
            aborted_ = true;
            return;
        }
        ++findings_.nodes;
        if (cell == cells_) {
            leaf();
            return;
        }
        for (const std::uint8_t value : {std::uint8_t{0}, std::uint8_t{1}}) {
            if (static_cast<std::size_t>(cell) < fixed_.size() && fixed_[static_cast<std::size_t>(cell)] != value) continue;
            auto& counters = value ? ones_ : zeros_;
            const auto& lines = lines_[static_cast<std::size_t>(cell)];
            if (std::any_of(lines.begin(), lines.end(), [&](std::uint32_t l) { return counters[l] >= 2; })) continue;
            for (const auto l : lines) ++counters[l];
            membership_[static_cast<std::size_t>(cell)] = value;
            visit(cell + 1);
            for (const auto l : lines) --counters[l];
            if (aborted_) return;
        }
    }

    void leaf() {
        ++findings_.enumerated;
        const auto code = QuaternaryCode::from_indicator(m_, membership_);
        const auto own = split_double_mds(code);
        const auto other = split_double_mds(complement(code));
        const bool own_split = std::holds_alternative<MdsSplit>(own);
        const bool other_split = std::holds_alternative<MdsSplit>(other);
        findings_.splittable += own_split ? 1 : 0;
        findings_.complement_splittable += other_split ? 1 : 0;
        const bool hit = options_.predicate ? options_.predicate(code) : own_split != other_split;
        if (!hit) return;
        if (options_.hit_log != nullptr) {
            nlohmann::json record;
            record["m"] = m_;
            record["words"] = nlohmann::json::array();
            for (const auto w : code.words()) record["words"].push_back(w.to_string());
            record["splittable"] = own_split;
            record["complement_splittable"] = other_split;
            const auto* cycle = std::get_if<QuaternaryCycle>(own_split ? &other : &own);
            if (cycle != nullptr) {
                record["witness"] = nlohmann::json::array();
                for (const auto& w : cycle->words) record["witness"].push_back(w.to_string());
            }
            *options_.hit_log << record.dump() << '\n';
        }
        findings_.hits.push_back(code);
    }

    const SearchOptions& options_;
    int m_;
    int cells_;
    std::vector<std::vector<std::uint32_t>> lines_;
    std::vector<std::uint8_t> ones_;
    std::vector<std::uint8_t> zeros_;
    std::vector<std::uint8_t> membership_;
    std::vector<std::uint8_t> fixed_;
    bool aborted_ = false;
    SearchFindings findings_;
};

}  // namespace

SearchFindings search_double_mds(const SearchOptions& options) {
    if (options.m < 2 || options.m > 3) throw UsageError("search supports m = 2 or m = 3");
    if (options.budget == 0) throw UsageError("search budget must be positive");
    return DoubleMdsSearch(options).run();
}

}  // namespace perfcode
