#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/quaternary.hpp"

namespace perfcode {

// Linear 1-perfect code of length 2^m - 1 whose check matrix has the binary expansions of
// 1..2^m-1 as columns: x is a codeword iff the XOR of the indices of its ones is 0.
// 1 <= m <= 5; m = 1 gives {0}.
BinaryCode hamming(int m);

enum class MdsStructure { Z4, Z2xZ2 };

// {x in Q^m : x_1 + ... + x_m = 0} in Z4, or in Z2 x Z2 (digit-wise XOR).
QuaternaryCode linear_mds(int m, MdsStructure structure);

using SymbolPermutation = std::array<std::uint8_t, 4>;

// Applies perms[i] to coordinate i + 1.
QuaternaryCode permute_symbols(const QuaternaryCode& code, const std::vector<SymbolPermutation>& perms);
std::vector<SymbolPermutation> seeded_symbol_permutations(int m, std::uint64_t seed);

// y_{perm[i]} = x_{i+1}; perm is a permutation of 1..n.
BinaryCode permute_coordinates(const BinaryCode& code, const std::vector<int>& perm);
std::vector<int> seeded_coordinate_permutation(int n, std::uint64_t seed);

// S(M) for an MDS code M in Q^m and a 1-perfect C of length m - 1: 1-perfect of length 4m - 1.
BinaryCode phelps_perfect(int m, const QuaternaryCode& mds, const BinaryCode& perfect);

enum class GeneratorKind { hamming, double_shortened_hamming, linear_mds, permuted_mds, phelps_perfect };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::hamming;
    int m = 3;
    // Shortened coordinates (1-based) for double_shortened_hamming; 0 means the last two.
    int first = 0;
    int second = 0;
    MdsStructure structure = MdsStructure::Z4;
    // Symbol-permutation seed for permuted_mds and phelps_perfect; 0 keeps the linear code.
    std::uint64_t seed = 0;
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);
// One-line description of the spec, used as a provenance header.
std::string describe(const GeneratorSpec& spec);

// Output is verified for its kind (1-perfect, MDS, or (n, M, 3) parameters) before return.
std::variant<BinaryCode, QuaternaryCode> generate(const GeneratorSpec& spec);

}  // namespace perfcode
