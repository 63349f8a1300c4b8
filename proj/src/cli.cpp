#include "perfcode/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <variant>

#include "perfcode/code_io.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/generators.hpp"
#include "perfcode/mds.hpp"
#include "perfcode/partition.hpp"
#include "perfcode/perfect.hpp"
#include "perfcode/sts.hpp"

namespace perfcode::cli {
namespace {

namespace fs = std::filesystem;

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool progress = false;
    SweepOptions sweep;

    void note(const std::string& phase) const {
        if (progress) err << "progress: " << phase << '\n';
    }
};

const char* ok(bool holds) { return holds ? "OK" : "FAIL"; }
const char* yes(bool b) { return b ? "yes" : "no"; }

std::string rational(const Rational& r) {
    auto s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// Header lines naming the action and the canonical checksum of its input.
std::vector<std::string> provenance(const std::string& action, const fs::path& input, const std::string& canonical) {
    return {"perfcode " + action, "input " + input.filename().string() + " crc32 " + fingerprint(canonical)};
}

void print_cycle(std::ostream& os, const OddCycleWitness& cycle) {
    os << "ODD_CYCLE " << cycle.words.size() << '\n';
    for (const auto& w : cycle.words) os << w.to_string() << '\n';
}

void print_cycle(std::ostream& os, const QuaternaryCycle& cycle) {
    os << "ODD_CYCLE " << cycle.words.size() << '\n';
    for (const auto& w : cycle.words) os << w.to_string() << '\n';
}

void print_coverage(std::ostream& os, const CoverageWitness& w) {
    os << "WITNESS covered " << w.coverage << " times, expected " << w.expected << '\n' << w.vertex.to_string() << '\n';
}

void print_relations(std::ostream& os, const RelationReport& report) {
    for (const auto& f : report.failures) {
        os << "FAIL " << f.relation << " i=" << f.i << " j=" << f.j << " l=" << f.l << " lhs=" << rational(f.lhs)
           << " rhs=" << rational(f.rhs) << '\n';
    }
    for (const auto& c : report.fixed_values) {
        os << "check " << c.name << ": " << ok(c.holds);
        if (!c.detail.empty()) os << " (" << c.detail << ')';
        os << '\n';
    }
    os << "relations: " << ok(report.failures.empty()) << '\n';
}

int analyze(const Context& ctx, const fs::path& file) {
    auto& out = ctx.out;
    const auto c1 = read_code(file);
    const auto params = check_doubly_shortened_parameters(c1);
    const int n = c1.length();
    out << "code: n=" << n << " M=" << c1.size() << " d>=3 m=" << params.m << '\n';

    ctx.note("deriving the partition");
    const auto partition = derive_partition(c1);
    out << "parts:";
    for (std::size_t i = 0; i < partition.part_count(); ++i) out << " |C" << i + 1 << "|=" << partition.part(i).size();
    out << '\n';

    const auto computed = compute_parameters(partition);
    if (const auto* w = std::get_if<EquitableWitness>(&computed)) {
        out << "equitable: FAIL\nWITNESS part " << w->part + 1 << " neighbours " << join(w->observed) << " expected "
            << join(w->expected) << '\n'
            << w->vertex.to_string() << '\n';
        return kFails;
    }
    const auto& matrix = std::get<ParameterMatrix>(computed);
    const bool matrix_ok = matrix == four_part_matrix(n);
    out << "parameter matrix:\n" << matrix << "expected matrix: " << ok(matrix_ok) << '\n';

    ctx.note("computing mean distributions");
    const DistributionTables tables(partition);
    out << "mean distributions (l = 0.." << n << "):\n";
    for (std::size_t i = 0; i < tables.part_count(); ++i) {
        for (std::size_t j = 0; j < tables.part_count(); ++j) {
            out << 'A' << i + 1 << j + 1 << ':';
            for (int l = 0; l <= n; ++l) out << ' ' << rational(tables.at(i, j).mean(l));
            out << '\n';
        }
    }
    const auto report = check_distribution_relations(partition, tables);
    print_relations(out, report);
    return matrix_ok && report.ok() ? kHolds : kFails;
}

int relations(const Context& ctx, const fs::path& file) {
    const auto c1 = read_code(file);
    check_doubly_shortened_parameters(c1);
    ctx.note("computing mean distributions");
    const auto report = check_distribution_relations(c1);
    ctx.out << "n=" << report.n << '\n';
    print_relations(ctx.out, report);
    return report.ok() ? kHolds : kFails;
}

int split(const Context& ctx, const fs::path& file, const std::string& prefix) {
    auto& out = ctx.out;
    const auto code = read_code(file);
    const auto result = split_code(code);
    if (const auto* cycle = std::get_if<OddCycleWitness>(&result)) {
        out << "splittable: no\n";
        print_cycle(out, *cycle);
        return kFails;
    }
    const auto& s = std::get<Split>(result);
    const auto base = prefix.empty() ? file.string() : prefix;
    const auto canonical = format_code(code);
    write_code(base + ".partA", s.first, provenance("split, class A", file, canonical));
    write_code(base + ".partB", s.second, provenance("split, class B", file, canonical));
    out << "splittable: yes\nnu " << s.components << '\n'
        << "partA " << s.first.size() << " words\npartB " << s.second.size() << " words\n";
    return kHolds;
}

int lengthen_code(const Context& ctx, const fs::path& file, const std::string& out_path, bool all,
                  std::uint64_t cap) {
    auto& out = ctx.out;
    const auto c1 = read_code(file);
    check_doubly_shortened_parameters(c1);
    ctx.note("deriving the partition");
    const auto partition = derive_partition(c1);
    const auto& c4 = partition.part(3);
    const auto result = split_code(c4);
    if (const auto* cycle = std::get_if<OddCycleWitness>(&result)) {
        out << "C4 splittable: no\n";
        print_cycle(out, *cycle);
        return kFails;
    }
    const auto& s = std::get<Split>(result);
    out << "C4 splittable: yes\nnu " << s.components << '\n';
    const auto canonical = format_code(c1);

    if (!all) {
        const auto code = lengthen(c1, s.first, s.second);
        ctx.note("verifying the lengthened code");
        const auto check = is_1perfect(code, ctx.sweep);
        out << "lengthened: n=" << code.length() << " M=" << code.size() << "\n1-perfect: " << ok(check.holds) << '\n';
        if (!check) {
            print_coverage(out, *check.witness);
            return kFails;
        }
        write_code(out_path.empty() ? file.string() + ".perfect" : out_path, code, provenance("lengthen", file, canonical));
        return kHolds;
    }

    SplitEnumerator splits(c4, cap);
    out << "splits: " << splits.count() << " of 2^" << splits.component_count() << '\n';
    std::set<std::vector<std::uint64_t>> seen;
    bool holds = true;
    std::size_t index = 0;
    while (auto pair = splits.next()) {
        const auto code = lengthen(c1, pair->first, pair->second);
        ctx.note("verifying code " + std::to_string(index));
        const auto check = is_1perfect(code, ctx.sweep);
        const bool fresh = seen.emplace(code.raw().begin(), code.raw().end()).second;
        out << "code " << index << " crc32 " << fingerprint(format_code(code)) << " 1-perfect " << ok(check.holds)
            << (fresh ? "" : " DUPLICATE") << '\n';
        if (!check) print_coverage(out, *check.witness);
        holds = holds && check.holds && fresh;
        if (!out_path.empty()) {
            write_code(out_path + "." + std::to_string(index), code,
                       provenance("lengthen --all, split " + std::to_string(index), file, canonical));
        }
        ++index;
    }
    out << "distinct 1-perfect codes: " << seen.size() << '\n';
    return holds ? kHolds : kFails;
}

int twofold(const Context& ctx, const fs::path& file, const std::string& variant_name, bool do_split,
            const std::string& out_path) {
    auto& out = ctx.out;
    const auto c1 = read_code(file);
    check_doubly_shortened_parameters(c1);
    const auto variant = variant_name == "B" ? TwofoldVariant::B : TwofoldVariant::D;
    const auto code = variant == TwofoldVariant::B ? build_B(c1) : build_D(c1);
    out << "variant " << variant_name << ": n=" << code.length() << " distinct " << code.distinct_size() << " total "
        << code.total_size() << '\n';
    bool holds = true;

    ctx.note("verifying twofold coverage");
    const auto perfect = is_twofold_1perfect(code, ctx.sweep);
    out << "twofold 1-perfect: " << ok(perfect.holds) << '\n';
    if (!perfect) print_coverage(out, *perfect.witness);
    holds = holds && perfect.holds;

    const auto antipodal = is_antipodal(code);
    out << "antipodal: " << ok(antipodal.holds) << '\n';
    if (!antipodal) out << "WITNESS\n" << antipodal.witness->to_string() << '\n';
    holds = holds && antipodal.holds;

    const auto c1_00 = with_suffix(c1, "00");
    std::optional<BinaryWord> missing;
    for (const auto w : c1_00.words()) {
        if (!missing && code.multiplicity(w) == 0) missing = w;
    }
    out << "C1 00 contained: " << ok(!missing) << '\n';
    if (missing) out << "WITNESS\n" << missing->to_string() << '\n';
    holds = holds && !missing;

    if (variant == TwofoldVariant::B) {
        const auto doubled = check_doubled(code, c1);
        out << "property a (C1 00 words have multiplicity 2): " << ok(doubled.holds) << '\n';
        if (!doubled) out << "WITNESS\n" << doubled.witness->to_string() << '\n';
        holds = holds && doubled.holds;
    }
    const auto shifted = check_shift_closed(code, variant == TwofoldVariant::B ? ShiftScope::mixed_suffix : ShiftScope::all);
    out << "property b (x + 0...011 is a word" << (variant == TwofoldVariant::B ? " for x ending 01/10" : "")
        << "): " << ok(shifted.holds) << '\n';
    if (!shifted) out << "WITNESS\n" << shifted.witness->to_string() << '\n';
    holds = holds && shifted.holds;

    const auto canonical = format_code(c1);
    const auto action = "twofold --variant " + variant_name;
    if (!out_path.empty()) write_code(out_path, code, provenance(action, file, canonical));
    if (do_split) {
        ctx.note("splitting");
        const auto result = split_twofold(code, c1, variant, ctx.sweep);
        if (const auto* cycle = std::get_if<OddCycleWitness>(&result)) {
            out << "splittable: no\n";
            print_cycle(out, *cycle);
            return kFails;
        }
        const auto& halves = std::get<TwofoldSplit>(result);
        out << "splittable: yes\nhalves 1-perfect and reassembling the code: OK\n";
        if (!out_path.empty()) {
            write_code(out_path + ".partA", halves.first, provenance(action + " --split, half A", file, canonical));
            write_code(out_path + ".partB", halves.second, provenance(action + " --split, half B", file, canonical));
        }
    }
    return holds ? kHolds : kFails;
}

int verify(const Context& ctx, const fs::path& file, bool twofold_code) {
    auto& out = ctx.out;
    if (twofold_code) {
        const auto code = read_multiset(file);
        out << "n=" << code.length() << " distinct " << code.distinct_size() << " total " << code.total_size() << '\n';
        const auto check = is_twofold_1perfect(code, ctx.sweep);
        out << "twofold 1-perfect: " << ok(check.holds) << '\n';
        if (!check) print_coverage(out, *check.witness);
        return check.holds ? kHolds : kFails;
    }
    const auto code = read_code(file);
    out << "n=" << code.length() << " M=" << code.size() << '\n';
    const auto check = is_1perfect(code, ctx.sweep);
    out << "1-perfect: " << ok(check.holds) << '\n';
    if (!check) print_coverage(out, *check.witness);
    return check.holds ? kHolds : kFails;
}

int sts(const Context& ctx, const std::string& file, bool example, bool extract, int fold, bool do_split,
        const std::string& out_path) {
    auto& out = ctx.out;
    if (example == !file.empty()) throw UsageError("give either a block file or --example");
    if (example) {
        const auto report = check_unsplittable_example();
        out << report.text();
        return report.ok() ? kHolds : kFails;
    }
    const auto system = [&] {
        if (!extract) return TripleSystem(read_multiset(file), fold);
        const auto code = read_multiset(file);
        return code.max_multiplicity() > 1 ? extract_sts(code) : extract_sts(read_code(file));
    }();
    out << "points " << system.points() << " blocks " << system.block_count() << " fold " << system.fold() << '\n';
    const auto check = verify_triple_system(system);
    out << "triple system: " << ok(check.holds) << '\n';
    if (!check) {
        const auto& w = *check.witness;
        out << "WITNESS pair " << w.first << ' ' << w.second << " covered " << w.coverage << " times, expected "
            << w.expected << '\n';
        return kFails;
    }
    if (do_split) {
        const auto result = split_triple_system(system);
        if (const auto* cycle = std::get_if<OddCycleWitness>(&result)) {
            out << "splittable: no\n";
            print_cycle(out, *cycle);
            return kFails;
        }
        const auto& s = std::get<Split>(result);
        out << "splittable: yes\n";
        if (!out_path.empty()) {
            const auto canonical = format_code(system.blocks());
            write_code(out_path + ".partA", s.first, provenance("sts --split, half A", file, canonical));
            write_code(out_path + ".partB", s.second, provenance("sts --split, half B", file, canonical));
        }
    }
    return kHolds;
}

int gen(const Context& ctx, const std::string& kind, int m, const std::string& coordinates, const std::string& structure,
        std::uint64_t seed, const std::string& out_path) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(kind);
    spec.m = m;
    spec.seed = seed;
    if (structure == "z2xz2") spec.structure = MdsStructure::Z2xZ2;
    if (!coordinates.empty()) {
        const auto comma = coordinates.find(',');
        if (comma == std::string::npos) throw UsageError("--coordinates expects a,b");
        auto parse_int = [](std::string_view s) {
            int v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad coordinate \"" + std::string(s) + "\"");
            return v;
        };
        spec.first = parse_int(std::string_view(coordinates).substr(0, comma));
        spec.second = parse_int(std::string_view(coordinates).substr(comma + 1));
    }
    const auto code = generate(spec);
    const std::vector<std::string> header{describe(spec)};
    if (out_path.empty()) {
        std::visit([&](const auto& c) { ctx.out << format_code(c, header); }, code);
    } else {
        std::visit([&](const auto& c) { write_code(out_path, c, header); }, code);
    }
    return kHolds;
}

void print_line_witness(std::ostream& os, const LineWitness& w) {
    os << "WITNESS line position " << w.line.position << " hits " << w.hits.size() << " expected " << w.expected << '\n';
    for (int s = 0; s < 4; ++s) os << w.line.point(s).to_string() << '\n';
}

int mds_check(const Context& ctx, const fs::path& file, bool twice) {
    const auto code = read_quaternary(file);
    const auto check = twice ? is_double_mds(code) : is_mds(code);
    ctx.out << "m=" << code.m() << " words " << code.size() << '\n'
            << (twice ? "double-MDS: " : "MDS: ") << ok(check.holds) << '\n';
    if (!check) print_line_witness(ctx.out, *check.witness);
    return check.holds ? kHolds : kFails;
}

int mds_split(const Context& ctx, const fs::path& file, const std::string& prefix) {
    const auto code = read_quaternary(file);
    const auto result = split_double_mds(code);
    if (const auto* cycle = std::get_if<QuaternaryCycle>(&result)) {
        ctx.out << "splittable: no\n";
        print_cycle(ctx.out, *cycle);
        return kFails;
    }
    const auto& s = std::get<MdsSplit>(result);
    const auto base = prefix.empty() ? file.string() : prefix;
    const auto canonical = format_code(code);
    write_code(base + ".partA", s.first, provenance("mds split, class A", file, canonical));
    write_code(base + ".partB", s.second, provenance("mds split, class B", file, canonical));
    ctx.out << "splittable: yes\ncomponents " << s.components << '\n';
    return kHolds;
}

int mds_search(const Context& ctx, int m, std::uint64_t budget, bool symmetry, const std::string& log_path) {
    auto& out = ctx.out;
    SearchOptions options;
    options.m = m;
    options.budget = budget;
    options.symmetry_reduction = symmetry;
    std::ofstream log;
    if (!log_path.empty()) {
        log.open(log_path);
        if (!log) throw UsageError("cannot write " + log_path);
        options.hit_log = &log;
    }
    ctx.note("searching");
    const auto found = search_double_mds(options);
    out << "m " << m << "\nsymmetry reduction: " << (symmetry ? "on" : "off") << "\nbudget " << budget << "\nnodes "
        << found.nodes << "\nleaves " << found.enumerated << '\n';
    if (found.complete) out << "double-MDS codes " << found.enumerated * found.orbit_factor << '\n';
    out << "splittable leaves " << found.splittable << "\nleaves with splittable complement "
        << found.complement_splittable << "\nstatus " << (found.complete ? "complete" : "partial")
        << "\ncounterexamples " << found.hits.size() << '\n';
    for (const auto& hit : found.hits) {
        out << "COUNTEREXAMPLE\n";
        for (const auto w : hit.words()) out << w.to_string() << '\n';
    }
    return found.hits.empty() ? kHolds : kFails;
}

BinaryCode default_perfect(int m) {
    for (int j = 1; j <= 4; ++j) {
        if (m == 1 << j) return hamming(j);
    }
    throw UsageError("no built-in 1-perfect code of length " + std::to_string(m - 1) + "; pass --perfect");
}

int mds_smap(const Context& ctx, const fs::path& file, const std::string& perfect_path, const std::string& out_path) {
    auto& out = ctx.out;
    const auto code = read_quaternary(file);
    const auto perfect = perfect_path.empty() ? default_perfect(code.m()) : read_code(perfect_path);
    const auto canonical = format_code(code);
    if (is_mds(code)) {
        const auto s = s_of_m(code, perfect);
        ctx.note("verifying S(M)");
        const auto check = is_1perfect(s, ctx.sweep);
        out << "M: MDS\nS(M): n=" << s.length() << " M=" << s.size() << "\n1-perfect: " << ok(check.holds) << '\n';
        if (!check) {
            print_coverage(out, *check.witness);
            return kFails;
        }
        if (!out_path.empty()) write_code(out_path, s, provenance("mds smap", file, canonical));
        return kHolds;
    }
    if (!is_double_mds(code)) throw PreconditionError("input is neither an MDS nor a double-MDS code");
    const auto t = s_of_m_twofold(code, perfect, ctx.sweep);
    out << "M: double-MDS\nS(M): n=" << t.code.length() << " distinct " << t.code.distinct_size() << " total "
        << t.code.total_size() << "\ntwofold 1-perfect: " << ok(t.twofold_perfect) << "\nM splittable: "
        << yes(t.splittable) << "\nS(M) splittable (direct test): " << yes(t.direct_splittable) << '\n';
    if (t.split) out << "halves S(M'), S(M'') 1-perfect: OK\n";
    if (t.cycle) {
        out << "transported odd cycle: " << ok(t.witness_verified) << '\n';
        print_cycle(out, *t.cycle);
    }
    if (!out_path.empty()) write_code(out_path, t.code, provenance("mds smap", file, canonical));
    const bool holds =
        t.twofold_perfect && t.splittable == t.direct_splittable && (t.split.has_value() || t.witness_verified);
    return holds ? kHolds : kFails;
}

int mds_pipeline(const Context& ctx, const fs::path& file, int k, const std::string& out_path) {
    const auto m1 = read_quaternary(file);
    ctx.note("running the pipeline");
    const auto result = c1_pipeline(m1, k, ctx.sweep);
    ctx.out << result.report.summary();
    if (!out_path.empty()) write_code(out_path, result.c1, provenance("mds pipeline --k " + std::to_string(k), file, format_code(m1)));
    return result.report.consistent() ? kHolds : kFails;
}

void print_latin(std::ostream& os, const LatinHypercuboid& latin) {
    os << "dims " << latin.dims() << " layers " << latin.layers() << '\n';
    const std::uint64_t cells = std::uint64_t{1} << (2 * latin.dims());
    for (std::uint64_t x = 0; x < cells; ++x) {
        if (latin.dims() > 0) os << QuaternaryWord(latin.dims(), x).to_string() << ':';
        for (int layer = 0; layer < latin.layers(); ++layer) os << ' ' << latin.at(x, layer);
        os << '\n';
    }
}

int mds_latin(const Context& ctx, const fs::path& file, bool fill) {
    const auto latin = to_latin(read_quaternary(file));
    print_latin(ctx.out, latin);
    if (!fill) return kHolds;
    if (latin.layers() != 2) throw UsageError("--complete needs a double-MDS code (two-layer cuboid)");
    const auto result = complete(latin);
    if (const auto* cycle = std::get_if<QuaternaryCycle>(&result)) {
        ctx.out << "completable: no\n";
        print_cycle(ctx.out, *cycle);
        return kFails;
    }
    ctx.out << "completable: yes\n";
    print_latin(ctx.out, std::get<LatinHypercuboid>(result));
    return kHolds;
}

std::uint64_t default_budget() {
    const char* env = std::getenv("PERFCODE_BUDGET");
    if (env == nullptr) return SearchOptions{}.budget;
    const std::string_view text(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) {
        throw UsageError("PERFCODE_BUDGET must be a positive integer");
    }
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perfect and twofold perfect binary codes; MDS codes over a 4-ary alphabet.", "perfcode"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    unsigned threads = 1;
    bool progress = false;
    app.add_option("--threads", threads, "Worker threads for exhaustive sweeps")->check(CLI::Range(1U, 256U));
    app.add_flag("--progress", progress, "Print phase notes to stderr");

    std::string file;
    std::string out_path;
    std::string prefix;

    auto* analyze_cmd = app.add_subcommand("analyze", "Partition, parameter matrix and distributions of a (2^m-3, 2^(2^m-m-3), 3) code");
    analyze_cmd->add_option("file", file, "Code file")->required()->check(CLI::ExistingFile);

    auto* relations_cmd = app.add_subcommand("relations", "Check the relations among mean distance distributions");
    relations_cmd->add_option("file", file, "Code file")->required()->check(CLI::ExistingFile);

    auto* split_cmd = app.add_subcommand("split", "Split a code into two distance-3 codes");
    split_cmd->add_option("file", file, "Code file")->required()->check(CLI::ExistingFile);
    split_cmd->add_option("--prefix", prefix, "Output prefix for .partA/.partB (default: the input path)");

    bool all = false;
    std::uint64_t cap = 64;
    auto* lengthen_cmd = app.add_subcommand("lengthen", "Lengthen C1 to 1-perfect codes through splits of C4");
    lengthen_cmd->add_option("file", file, "Code file of C1")->required()->check(CLI::ExistingFile);
    lengthen_cmd->add_option("-o,--out", out_path, "Output file (with --all: prefix for numbered files)");
    lengthen_cmd->add_flag("--all", all, "Enumerate lengthenings over all splits");
    lengthen_cmd->add_option("--cap", cap, "Maximum number of codes for --all")->check(CLI::PositiveNumber);

    std::string variant;
    bool do_split = false;
    auto* twofold_cmd = app.add_subcommand("twofold", "Build and check the twofold 1-perfect code B or D of C1");
    twofold_cmd->add_option("file", file, "Code file of C1")->required()->check(CLI::ExistingFile);
    twofold_cmd->add_option("--variant", variant, "B or D")->required()->check(CLI::IsMember({"B", "D"}));
    twofold_cmd->add_flag("--split", do_split, "Split into two 1-perfect codes");
    twofold_cmd->add_option("-o,--out", out_path, "Output file (halves go to .partA/.partB)");

    bool twofold_flag = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check 1-perfectness by exhaustive sweep");
    verify_cmd->add_option("file", file, "Code file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_flag("--twofold", twofold_flag, "Check twofold 1-perfectness of a multiset");

    bool example = false;
    bool extract = false;
    int fold = 1;
    auto* sts_cmd = app.add_subcommand("sts", "Verify and split triple systems");
    sts_cmd->add_option("file", file, "Block file")->check(CLI::ExistingFile);
    sts_cmd->add_flag("--example", example, "Report on the built-in unsplittable twofold STS(15)");
    sts_cmd->add_flag("--extract", extract, "Read a code containing the zero word and take its weight-3 words");
    sts_cmd->add_option("--fold", fold, "Fold of the system (1 or 2)")->check(CLI::Range(1, 2));
    sts_cmd->add_flag("--split", do_split, "Split into two triple systems");
    sts_cmd->add_option("-o,--out", out_path, "Prefix for the halves");

    std::string kind;
    int m = 3;
    std::string coordinates;
    std::string structure = "z4";
    std::uint64_t seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a code");
    gen_cmd->add_option("kind", kind, "hamming | double-shortened-hamming | linear-mds | permuted-mds | phelps-perfect")
        ->required();
    gen_cmd->add_option("--m", m, "Size parameter")->required();
    gen_cmd->add_option("--coordinates", coordinates, "Shortened coordinates a,b (1-based)");
    gen_cmd->add_option("--structure", structure, "z4 or z2xz2")->check(CLI::IsMember({"z4", "z2xz2"}));
    gen_cmd->add_option("--seed", seed, "Permutation seed (0 keeps the linear code)");
    gen_cmd->add_option("-o,--out", out_path, "Output file (default: stdout)");

    auto* mds_cmd = app.add_subcommand("mds", "MDS and double-MDS codes in Q^m");
    mds_cmd->require_subcommand(1, 1);
    bool twice = false;
    auto* mds_check_cmd = mds_cmd->add_subcommand("check", "Check the MDS (or double-MDS) property");
    mds_check_cmd->add_option("file", file, "Quaternary code file")->required()->check(CLI::ExistingFile);
    mds_check_cmd->add_flag("--double", twice, "Check the double-MDS property");

    auto* mds_split_cmd = mds_cmd->add_subcommand("split", "Split a double-MDS code into two MDS codes");
    mds_split_cmd->add_option("file", file, "Quaternary code file")->required()->check(CLI::ExistingFile);
    mds_split_cmd->add_option("--prefix", prefix, "Output prefix for .partA/.partB (default: the input path)");

    std::optional<std::uint64_t> budget;
    bool symmetry = false;
    std::string log_path;
    int search_m = 2;
    auto* search_cmd = mds_cmd->add_subcommand("search", "Enumerate double-MDS codes looking for M and its complement differing in splittability");
    search_cmd->add_option("--m", search_m, "Dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
    search_cmd->add_option("--budget", budget, "Search-tree node budget (default: PERFCODE_BUDGET or 1000000)")
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--symmetry", symmetry, "Fix the first line to {0,1} and multiply counts by 6");
    search_cmd->add_option("--log", log_path, "JSON-lines file for counterexamples");

    std::string perfect_path;
    auto* smap_cmd = mds_cmd->add_subcommand("smap", "Map an MDS or double-MDS code to a binary (twofold) 1-perfect code");
    smap_cmd->add_option("file", file, "Quaternary code file")->required()->check(CLI::ExistingFile);
    smap_cmd->add_option("--perfect", perfect_path, "1-perfect code of length m-1 (default: Hamming)")
        ->check(CLI::ExistingFile);
    smap_cmd->add_option("-o,--out", out_path, "Output file");

    int k = 4;
    auto* pipeline_cmd = mds_cmd->add_subcommand("pipeline", "Build C1 from a double-MDS code M1 and report on it");
    pipeline_cmd->add_option("file", file, "Quaternary code file of M1")->required()->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--k", k, "3 or 4")->check(CLI::IsMember({3, 4}));
    pipeline_cmd->add_option("-o,--out", out_path, "Output file for C1");

    bool fill = false;
    auto* latin_cmd = mds_cmd->add_subcommand("latin", "Print the latin hypercube or cuboid of a code");
    latin_cmd->add_option("file", file, "Quaternary code file")->required()->check(CLI::ExistingFile);
    latin_cmd->add_flag("--complete", fill, "Complete a two-layer cuboid to four layers");

    std::vector<const char*> argv{"perfcode"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kHolds : kUsage;
    }

    Context ctx{out, err, progress, {}};
    ctx.sweep.threads = threads;
    try {
        if (*analyze_cmd) return analyze(ctx, file);
        if (*relations_cmd) return relations(ctx, file);
        if (*split_cmd) return split(ctx, file, prefix);
        if (*lengthen_cmd) return lengthen_code(ctx, file, out_path, all, cap);
        if (*twofold_cmd) return twofold(ctx, file, variant, do_split, out_path);
        if (*verify_cmd) return verify(ctx, file, twofold_flag);
        if (*sts_cmd) return sts(ctx, file, example, extract, fold, do_split, out_path);
        if (*gen_cmd) return gen(ctx, kind, m, coordinates, structure, seed, out_path);
        if (*mds_check_cmd) return mds_check(ctx, file, twice);
        if (*mds_split_cmd) return mds_split(ctx, file, prefix);
        if (*search_cmd) return mds_search(ctx, search_m, budget ? *budget : default_budget(), symmetry, log_path);
        if (*smap_cmd) return mds_smap(ctx, file, perfect_path, out_path);
        if (*pipeline_cmd) return mds_pipeline(ctx, file, k, out_path);
        if (*latin_cmd) return mds_latin(ctx, file, fill);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        // Parse, budget and file-system errors.
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace perfcode::cli
