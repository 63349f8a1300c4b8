#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "perfcode/code.hpp"

namespace perfcode {

// A set of Hamming distances in 0..63.
class DistanceSet {
public:
    constexpr DistanceSet() = default;
    DistanceSet(std::initializer_list<int> distances);

    bool contains(int d) const noexcept { return d >= 0 && d < 64 && ((mask_ >> d) & 1U); }
    std::vector<int> values() const;
    bool empty() const noexcept { return mask_ == 0; }

private:
    std::uint64_t mask_ = 0;
};

// Undirected graph in compressed adjacency form. Vertices are numbered 0..size-1; neighbour
// lists are sorted.
struct Adjacency {
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint32_t> targets;

    std::size_t size() const noexcept { return offsets.size() - 1; }
    std::span<const std::uint32_t> neighbours(std::size_t v) const {
        return std::span<const std::uint32_t>(targets).subspan(offsets[v], offsets[v + 1] - offsets[v]);
    }
};

struct Components {
    std::vector<std::uint32_t> id;  // per vertex; ids numbered in order of smallest vertex
    std::uint32_t count = 0;
};

// Breadth-first components, seeds taken in vertex order.
Components connected_components(const Adjacency& graph);

// Proper 2-colouring where the smallest vertex of each component gets colour 0, or an odd
// closed walk without repeated vertices (vertex indices; consecutive entries adjacent and the
// last adjacent to the first).
std::variant<std::vector<std::uint8_t>, std::vector<std::uint32_t>> two_colour(const Adjacency& graph);

// Graph on the words of a code; u ~ v iff their Hamming distance lies in `distances`.
// In expanded form every copy of a multiset word is its own vertex, and copies of one word
// are adjacent iff 0 is in `distances`.
struct DistanceGraph {
    int length = 0;
    std::vector<std::uint64_t> vertices;  // lexicographic order
    std::vector<std::uint32_t> multiplicity;
    DistanceSet distances;
    Adjacency adjacency;
    Components components;
    std::optional<std::vector<std::uint8_t>> colouring;

    std::size_t size() const noexcept { return vertices.size(); }
    BinaryWord vertex(std::size_t i) const { return {length, vertices[i]}; }
};

DistanceGraph build_graph(const BinaryCode& code, const DistanceSet& distances);
DistanceGraph build_graph(const MultisetCode& code, const DistanceSet& distances);
DistanceGraph build_expanded_graph(const MultisetCode& code, const DistanceSet& distances);

struct Split {
    BinaryCode first;
    BinaryCode second;
    std::size_t components = 0;
};

struct OddCycleWitness {
    std::vector<BinaryWord> words;
};

using SplitResult = std::variant<Split, OddCycleWitness>;

// Colour classes of a proper 2-colouring, or an odd cycle. On success the colouring is
// stored in the graph.
SplitResult bipartition(DistanceGraph& graph);

// Splits a code into two codes of distance >= 3 via its graph of distances {1, 2}.
SplitResult split_code(const BinaryCode& code);

// Splits a multiset into two sets with no two words at a distance in `conflicts` (copies of
// one word always conflict when 0 is in the set).
SplitResult split_multiset(const MultisetCode& code, const DistanceSet& conflicts);

// True when the cycle has odd length >= 3, its words are distinct, and every consecutive pair
// (including last-first) is at a distance in `distances`.
bool is_odd_cycle(const OddCycleWitness& cycle, const DistanceSet& distances);

// Ordered splits of a splittable code, obtained by flipping the colour orientation of any
// subset of components. Splits are produced in binary-counter order over components (component
// 0 is the least significant bit); there are 2^components of them, truncated at `cap`.
class SplitEnumerator {
public:
    SplitEnumerator(const BinaryCode& code, std::uint64_t cap);

    std::size_t component_count() const noexcept { return graph_.components.count; }
    // Number of splits that will be produced: min(2^components, cap).
    std::uint64_t count() const noexcept { return limit_; }
    std::optional<std::pair<BinaryCode, BinaryCode>> next();

private:
    DistanceGraph graph_;
    std::vector<std::uint8_t> base_colouring_;
    std::uint64_t limit_ = 0;
    std::uint64_t counter_ = 0;
};

struct ComponentStats {
    std::size_t count = 0;
    std::size_t min_size = 0;
    std::map<std::size_t, std::size_t> size_histogram;  // size -> number of components
};

ComponentStats component_stats(const DistanceGraph& graph);

}  // namespace perfcode
