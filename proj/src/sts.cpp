#include "perfcode/sts.hpp"

#include <sstream>
#include <stdexcept>

#include "perfcode/code_io.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/perfect.hpp"

namespace perfcode {

namespace detail {
extern const std::string kTwofoldSts15;
}

TripleSystem::TripleSystem(MultisetCode blocks, int fold) : blocks_(std::move(blocks)), fold_(fold) {
    if (fold != 1 && fold != 2) throw UsageError("triple system fold must be 1 or 2");
    if (blocks_.empty()) throw PreconditionError("triple system without blocks");
    for (std::size_t i = 0; i < blocks_.distinct_size(); ++i) {
        if (blocks_.word(i).weight() != 3) {
            throw PreconditionError("block " + blocks_.word(i).to_string() + " does not have weight 3");
        }
    }
}

namespace {

MultisetCode weight_three(const MultisetCode& code) {
    std::vector<MultisetCode::Entry> out;
    for (const auto& e : code.entries()) {
        if (std::popcount(e.bits) == 3) out.push_back(e);
    }
    return {code.length(), std::move(out)};
}

}  // namespace

TripleSystem extract_sts(const BinaryCode& code) {
    if (!code.contains(BinaryWord::zero(code.length()))) throw PreconditionError("the all-zero word is not a codeword");
    return {weight_three(MultisetCode::from_set(code)), 1};
}

TripleSystem extract_sts(const MultisetCode& code) {
    if (code.multiplicity(BinaryWord::zero(code.length())) != 2) {
        throw PreconditionError("the all-zero word does not have multiplicity 2");
    }
    return {weight_three(code), 2};
}

Checked<PairWitness> verify_triple_system(const TripleSystem& system) {
    const int v = system.points();
    std::vector<unsigned> cover(static_cast<std::size_t>(v * v), 0);
    for (const auto& e : system.blocks().entries()) {
        for (int i = 0; i < v; ++i) {
            if (!((e.bits >> i) & 1U)) continue;
            for (int j = i + 1; j < v; ++j) {
                if ((e.bits >> j) & 1U) cover[static_cast<std::size_t>(i * v + j)] += e.multiplicity;
            }
        }
    }
    const auto fold = static_cast<unsigned>(system.fold());
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            const unsigned c = cover[static_cast<std::size_t>(i * v + j)];
            if (c != fold) return Checked<PairWitness>::fail({i + 1, j + 1, c, fold});
        }
    }
    const auto expected = static_cast<std::uint64_t>(system.fold()) * v * (v - 1) / 6;
    if (system.block_count() != expected) throw std::logic_error("pair coverage holds but block count is wrong");
    return Checked<PairWitness>::pass();
}

SplitResult split_triple_system(const TripleSystem& system) { return split_multiset(system.blocks(), {0, 2}); }

const std::string& twofold_sts15_text() { return detail::kTwofoldSts15; }

MultisetCode twofold_sts15() {
    std::istringstream in(twofold_sts15_text());
    return parse_multiset(in);
}

bool ExampleReport::ok() const { return twofold.holds && property_a && property_b && cycle && cycle_valid; }

std::string ExampleReport::text() const {
    std::ostringstream os;
    auto status = [](bool b) { return b ? "OK" : "FAIL"; };
    os << "DATA crc32 " << checksum << ", " << distinct_words << " distinct words, total multiplicity "
       << total_multiplicity << '\n';
    os << "TWOFOLD STS: " << status(twofold.holds);
    if (twofold.witness) {
        os << " (pair {" << twofold.witness->first << ',' << twofold.witness->second << "} covered "
           << twofold.witness->coverage << " times)";
    }
    os << '\n'
       << "PROPERTY a: " << status(property_a) << '\n'
       << "PROPERTY b: " << status(property_b) << '\n'
       << "UNSPLITTABLE: " << status(cycle && cycle_valid) << '\n';
    if (cycle) {
        os << "ODD_CYCLE " << cycle->words.size() << '\n';
        for (const auto& w : cycle->words) os << w.to_string() << '\n';
    }
    return os.str();
}

ExampleReport check_unsplittable_example() {
    ExampleReport report;
    const auto code = twofold_sts15();
    report.checksum = fingerprint(twofold_sts15_text());
    report.distinct_words = code.distinct_size();
    report.total_multiplicity = code.total_size();
    const TripleSystem system(code, 2);
    report.twofold = verify_triple_system(system);

    const int n = code.length();
    report.property_a = true;
    for (std::size_t i = 0; i < code.distinct_size(); ++i) {
        const auto w = code.word(i);
        const bool a = w.at(n - 1);
        const bool b = w.at(n);
        const auto multiplicity = code.entries()[i].multiplicity;
        if (multiplicity != (a == b ? 2U : 1U)) report.property_a = false;
    }
    report.property_b = check_shift_closed(code, ShiftScope::mixed_suffix).holds;

    auto split = split_triple_system(system);
    if (auto* cycle = std::get_if<OddCycleWitness>(&split)) {
        report.cycle_valid = is_odd_cycle(*cycle, {2});
        report.cycle = std::move(*cycle);
    }
    return report;
}

}  // namespace perfcode
