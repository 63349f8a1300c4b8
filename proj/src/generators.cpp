#include "perfcode/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "perfcode/errors.hpp"
#include "perfcode/mds.hpp"
#include "perfcode/partition.hpp"
#include "perfcode/perfect.hpp"

namespace perfcode {

BinaryCode hamming(int m) {
    if (m < 1 || m > 5) throw UsageError("Hamming code parameter m must be in 1..5");
    const int n = (1 << m) - 1;
    // Information positions are the non-powers of two; position 2^j carries check bit j.
    std::vector<int> info;
    for (int j = 1; j <= n; ++j) {
        if ((j & (j - 1)) != 0) info.push_back(j);
    }
    std::vector<std::uint64_t> bits;
    bits.reserve(std::size_t{1} << info.size());
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << info.size()); ++v) {
        std::uint64_t word = 0;
        unsigned syndrome = 0;
        for (std::size_t i = 0; i < info.size(); ++i) {
            if ((v >> i) & 1U) {
                word |= std::uint64_t{1} << (info[i] - 1);
                syndrome ^= static_cast<unsigned>(info[i]);
            }
        }
        for (int j = 0; j < m; ++j) {
            if ((syndrome >> j) & 1U) word |= std::uint64_t{1} << ((1 << j) - 1);
        }
        bits.push_back(word);
    }
    return {n, std::move(bits)};
}

QuaternaryCode linear_mds(int m, MdsStructure structure) {
    if (m < 2 || m > kMaxMdsLength) throw UsageError("linear MDS code needs 2 <= m <= " + std::to_string(kMaxMdsLength));
    std::vector<std::uint64_t> packed;
    const std::uint64_t prefixes = std::uint64_t{1} << (2 * (m - 1));
    packed.reserve(prefixes);
    for (std::uint64_t x = 0; x < prefixes; ++x) {
        unsigned acc = 0;
        for (int i = 0; i < m - 1; ++i) {
            const auto digit = static_cast<unsigned>((x >> (2 * i)) & 3U);
            acc = structure == MdsStructure::Z4 ? (acc + digit) % 4 : acc ^ digit;
        }
        const unsigned last = structure == MdsStructure::Z4 ? (4 - acc) % 4 : acc;
        packed.push_back((x << 2) | last);
    }
    return {m, std::move(packed)};
}

QuaternaryCode permute_symbols(const QuaternaryCode& code, const std::vector<SymbolPermutation>& perms) {
    const int m = code.m();
    if (perms.size() != static_cast<std::size_t>(m)) throw UsageError("need one symbol permutation per coordinate");
    for (const auto& p : perms) {
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != SymbolPermutation{0, 1, 2, 3}) throw UsageError("symbol map is not a permutation of {0,1,2,3}");
    }
    std::vector<std::uint64_t> packed;
    packed.reserve(code.size());
    for (const auto w : code.raw()) {
        std::uint64_t out = 0;
        for (int i = 1; i <= m; ++i) {
            const int shift = 2 * (m - i);
            const auto digit = (w >> shift) & 3U;
            out |= static_cast<std::uint64_t>(perms[static_cast<std::size_t>(i - 1)][digit]) << shift;
        }
        packed.push_back(out);
    }
    return {m, std::move(packed)};
}

// Fisher-Yates with a plain modulo draw, so results do not depend on the standard library's
// distribution implementations.
namespace {

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

std::vector<SymbolPermutation> seeded_symbol_permutations(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SymbolPermutation> out;
    for (int i = 0; i < m; ++i) {
        std::vector<std::uint8_t> p{0, 1, 2, 3};
        shuffle(p, rng);
        out.push_back({p[0], p[1], p[2], p[3]});
    }
    return out;
}

BinaryCode permute_coordinates(const BinaryCode& code, const std::vector<int>& perm) {
    const int n = code.length();
    if (perm.size() != static_cast<std::size_t>(n)) throw UsageError("coordinate permutation has the wrong size");
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) throw UsageError("not a permutation of 1..n");
    }
    std::vector<std::uint64_t> bits;
    bits.reserve(code.size());
    for (const auto b : code.raw()) {
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i) {
            if ((b >> i) & 1U) out |= std::uint64_t{1} << (perm[static_cast<std::size_t>(i)] - 1);
        }
        bits.push_back(out);
    }
    return {n, std::move(bits)};
}

std::vector<int> seeded_coordinate_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    shuffle(p, rng);
    return p;
}

BinaryCode phelps_perfect(int m, const QuaternaryCode& mds, const BinaryCode& perfect) {
    if (mds.m() != m) throw UsageError("MDS code length differs from m");
    if (auto check = is_mds(mds); !check) throw PreconditionError("input is not an MDS code");
    auto code = s_of_m(mds, perfect);
    if (!is_1perfect(code)) throw std::logic_error("S(M) of an MDS code is not 1-perfect");
    return code;
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "hamming") return GeneratorKind::hamming;
    if (name == "double-shortened-hamming") return GeneratorKind::double_shortened_hamming;
    if (name == "linear-mds") return GeneratorKind::linear_mds;
    if (name == "permuted-mds") return GeneratorKind::permuted_mds;
    if (name == "phelps-perfect") return GeneratorKind::phelps_perfect;
    throw UsageError("unknown generator kind \"" + name + "\"");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::hamming: return "hamming";
        case GeneratorKind::double_shortened_hamming: return "double-shortened-hamming";
        case GeneratorKind::linear_mds: return "linear-mds";
        case GeneratorKind::permuted_mds: return "permuted-mds";
        case GeneratorKind::phelps_perfect: return "phelps-perfect";
    }
    return "unknown";
}

std::string describe(const GeneratorSpec& spec) {
    std::ostringstream os;
    os << "generated by: gen " << to_string(spec.kind) << " --m " << spec.m;
    if (spec.kind == GeneratorKind::double_shortened_hamming && spec.first != 0) {
        os << " --coordinates " << spec.first << ',' << spec.second;
    }
    if (spec.kind == GeneratorKind::linear_mds || spec.kind == GeneratorKind::permuted_mds ||
        spec.kind == GeneratorKind::phelps_perfect) {
        os << " --structure " << (spec.structure == MdsStructure::Z4 ? "z4" : "z2xz2");
    }
    if (spec.seed != 0) os << " --seed " << spec.seed;
    return os.str();
}

namespace {

QuaternaryCode mds_for(const GeneratorSpec& spec, int m) {
    auto code = linear_mds(m, spec.structure);
    if (spec.seed != 0) code = permute_symbols(code, seeded_symbol_permutations(m, spec.seed));
    return code;
}

}  // namespace

std::variant<BinaryCode, QuaternaryCode> generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::hamming: {
            auto code = hamming(spec.m);
            if (!is_1perfect(code)) throw std::logic_error("generated Hamming code is not 1-perfect");
            return code;
        }
        case GeneratorKind::double_shortened_hamming: {
            if (spec.m < 3) throw UsageError("double shortening needs m >= 3");
            const auto full = hamming(spec.m);
            auto code = spec.first == 0 ? double_shorten(full) : double_shorten_at(full, spec.first, spec.second);
            check_doubly_shortened_parameters(code);
            return code;
        }
        case GeneratorKind::linear_mds:
        case GeneratorKind::permuted_mds: {
            auto code = spec.kind == GeneratorKind::linear_mds ? linear_mds(spec.m, spec.structure) : mds_for(spec, spec.m);
            if (!is_mds(code)) throw std::logic_error("generated code is not MDS");
            return code;
        }
        case GeneratorKind::phelps_perfect: {
            // m must be a power of two so that a 1-perfect code of length m - 1 exists.
            if (spec.m < 2 || spec.m > 4 || (spec.m & (spec.m - 1)) != 0) {
                throw UsageError("phelps-perfect supports m = 2 or m = 4");
            }
            int log = 0;
            while ((1 << log) < spec.m) ++log;
            return phelps_perfect(spec.m, mds_for(spec, spec.m), hamming(log));
        }
    }
    throw UsageError("unknown generator kind");
}

}  // namespace perfcode
