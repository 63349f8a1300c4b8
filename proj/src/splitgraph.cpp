#include "perfcode/splitgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "perfcode/errors.hpp"

namespace perfcode {

DistanceSet::DistanceSet(std::initializer_list<int> distances) {
    for (const int d : distances) {
        if (d < 0 || d > 63) throw UsageError("distance " + std::to_string(d) + " outside 0..63");
        mask_ |= std::uint64_t{1} << d;
    }
}

std::vector<int> DistanceSet::values() const {
    std::vector<int> v;
    for (int d = 0; d < 64; ++d) {
        if (contains(d)) v.push_back(d);
    }
    return v;
}

Components connected_components(const Adjacency& graph) {
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
    Components c;
    c.id.assign(graph.size(), kNone);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t seed = 0; seed < graph.size(); ++seed) {
        if (c.id[seed] != kNone) continue;
        queue.assign(1, seed);
        c.id[seed] = c.count;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto w : graph.neighbours(queue[head])) {
                if (c.id[w] == kNone) {
                    c.id[w] = c.count;
                    queue.push_back(w);
                }
            }
        }
        ++c.count;
    }
    return c;
}

std::variant<std::vector<std::uint8_t>, std::vector<std::uint32_t>> two_colour(const Adjacency& graph) {
    constexpr std::uint8_t kUncoloured = 2;
    const std::size_t size = graph.size();
    std::vector<std::uint8_t> colour(size, kUncoloured);
    std::vector<std::uint32_t> parent(size, 0);
    std::vector<std::uint32_t> depth(size, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t seed = 0; seed < size; ++seed) {
        if (colour[seed] != kUncoloured) continue;
        colour[seed] = 0;
        parent[seed] = seed;
        queue.assign(1, seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto u = queue[head];
            for (const auto w : graph.neighbours(u)) {
                if (colour[w] == kUncoloured) {
                    colour[w] = colour[u] ^ 1U;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    // Same colour across an edge: BFS depths are equal, so the two tree paths
                    // to the common ancestor plus this edge form an odd cycle.
                    std::vector<std::uint32_t> left{u};
                    std::vector<std::uint32_t> right{w};
                    auto a = u;
                    auto b = w;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::vector<std::uint32_t> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    return cycle;
                }
            }
        }
    }
    return colour;
}

namespace {

bool probing_cheaper(std::size_t distinct, int n, const DistanceSet& distances) {
    std::uint64_t probes = 0;
    for (const int d : distances.values()) {
        if (d > 0) probes += binomial(n, d);
    }
    return probes < distinct / 2 + 1;
}

template <class F>
void for_each_mask_of_weight(int n, int w, F&& f) {
    if (w > n) return;
    std::uint64_t mask = low_mask(w);
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        f(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

// `distinct` holds each word once; `copies[k]` vertices represent word k, laid out
// consecutively starting at `first[k]`.
DistanceGraph assemble(int length, const std::vector<std::uint64_t>& distinct, const std::vector<std::uint32_t>& copies,
                       const std::vector<std::uint32_t>& multiplicity, const DistanceSet& distances) {
    DistanceGraph g;
    g.length = length;
    g.distances = distances;
    std::vector<std::uint32_t> first(distinct.size() + 1, 0);
    for (std::size_t k = 0; k < distinct.size(); ++k) first[k + 1] = first[k] + copies[k];
    const std::size_t total = first.back();
    g.vertices.reserve(total);
    g.multiplicity.reserve(total);
    for (std::size_t k = 0; k < distinct.size(); ++k) {
        for (std::uint32_t c = 0; c < copies[k]; ++c) {
            g.vertices.push_back(distinct[k]);
            g.multiplicity.push_back(multiplicity[k]);
        }
    }

    // Neighbouring distinct words of each distinct word.
    std::vector<std::vector<std::uint32_t>> near(distinct.size());
    if (probing_cheaper(distinct.size(), length, distances)) {
        const WordIndex index(length, distinct);
        const auto ds = distances.values();
        for (std::size_t k = 0; k < distinct.size(); ++k) {
            for (const int d : ds) {
                if (d == 0) continue;
                for_each_mask_of_weight(length, d, [&](std::uint64_t mask) {
                    const auto j = index.find(distinct[k] ^ mask);
                    if (j != WordIndex::npos) near[k].push_back(j);
                });
            }
        }
    } else {
        for (std::size_t k = 0; k < distinct.size(); ++k) {
            for (std::size_t j = k + 1; j < distinct.size(); ++j) {
                if (distances.contains(std::popcount(distinct[k] ^ distinct[j]))) {
                    near[k].push_back(static_cast<std::uint32_t>(j));
                    near[j].push_back(static_cast<std::uint32_t>(k));
                }
            }
        }
    }

    auto& adj = g.adjacency;
    adj.offsets.assign(1, 0);
    adj.offsets.reserve(total + 1);
    std::vector<std::uint32_t> row;
    for (std::size_t k = 0; k < distinct.size(); ++k) {
        std::sort(near[k].begin(), near[k].end());
        for (std::uint32_t c = 0; c < copies[k]; ++c) {
            row.clear();
            for (const auto j : near[k]) {
                for (std::uint32_t cj = 0; cj < copies[j]; ++cj) row.push_back(first[j] + cj);
            }
            if (distances.contains(0)) {
                for (std::uint32_t cj = 0; cj < copies[k]; ++cj) {
                    if (cj != c) row.push_back(first[k] + cj);
                }
            }
            std::sort(row.begin(), row.end());
            adj.targets.insert(adj.targets.end(), row.begin(), row.end());
            adj.offsets.push_back(static_cast<std::uint32_t>(adj.targets.size()));
        }
    }
    g.components = connected_components(adj);
    return g;
}

}  // namespace

DistanceGraph build_graph(const BinaryCode& code, const DistanceSet& distances) {
    std::vector<std::uint64_t> distinct(code.raw().begin(), code.raw().end());
    return assemble(code.length(), distinct, std::vector<std::uint32_t>(distinct.size(), 1),
                    std::vector<std::uint32_t>(distinct.size(), 1), distances);
}

DistanceGraph build_graph(const MultisetCode& code, const DistanceSet& distances) {
    std::vector<std::uint64_t> distinct;
    std::vector<std::uint32_t> multiplicity;
    for (const auto& e : code.entries()) {
        distinct.push_back(e.bits);
        multiplicity.push_back(e.multiplicity);
    }
    return assemble(code.length(), distinct, std::vector<std::uint32_t>(distinct.size(), 1), multiplicity, distances);
}

DistanceGraph build_expanded_graph(const MultisetCode& code, const DistanceSet& distances) {
    std::vector<std::uint64_t> distinct;
    std::vector<std::uint32_t> copies;
    for (const auto& e : code.entries()) {
        distinct.push_back(e.bits);
        copies.push_back(e.multiplicity);
    }
    return assemble(code.length(), distinct, copies, std::vector<std::uint32_t>(distinct.size(), 1), distances);
}

SplitResult bipartition(DistanceGraph& graph) {
    auto result = two_colour(graph.adjacency);
    if (auto* cycle = std::get_if<std::vector<std::uint32_t>>(&result)) {
        OddCycleWitness witness;
        for (const auto v : *cycle) witness.words.push_back(graph.vertex(v));
        return witness;
    }
    auto& colour = std::get<std::vector<std::uint8_t>>(result);
    std::vector<std::uint64_t> classes[2];
    for (std::size_t v = 0; v < graph.size(); ++v) classes[colour[v]].push_back(graph.vertices[v]);
    graph.colouring = std::move(colour);
    const int n = graph.length;
    return Split{BinaryCode(n, std::move(classes[0])), BinaryCode(n, std::move(classes[1])),
                 graph.components.count};
}

SplitResult split_code(const BinaryCode& code) {
    DistanceGraph graph = build_graph(code, {1, 2});
    auto result = bipartition(graph);
    if (const auto* split = std::get_if<Split>(&result)) {
        if (!has_min_distance(split->first, 3) || !has_min_distance(split->second, 3)) {
            throw std::logic_error("proper colouring of the {1,2}-graph produced a part with distance below 3");
        }
    }
    return result;
}

SplitResult split_multiset(const MultisetCode& code, const DistanceSet& conflicts) {
    DistanceGraph graph = build_expanded_graph(code, conflicts);
    return bipartition(graph);
}

bool is_odd_cycle(const OddCycleWitness& cycle, const DistanceSet& distances) {
    const auto& w = cycle.words;
    if (w.size() < 3 || w.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i].length() != w[j].length() || w[i].bits() == w[j].bits()) return false;
        }
        if (!distances.contains(hamming_distance(w[i], w[(i + 1) % w.size()]))) return false;
    }
    return true;
}

SplitEnumerator::SplitEnumerator(const BinaryCode& code, std::uint64_t cap) {
    if (cap < 1) throw UsageError("split enumeration cap must be at least 1");
    graph_ = build_graph(code, {1, 2});
    auto result = two_colour(graph_.adjacency);
    if (!std::holds_alternative<std::vector<std::uint8_t>>(result)) {
        throw PreconditionError("code is not splittable: its {1,2}-graph has an odd cycle");
    }
    base_colouring_ = std::get<std::vector<std::uint8_t>>(std::move(result));
    const auto nu = graph_.components.count;
    limit_ = nu >= 64 ? cap : std::min<std::uint64_t>(cap, std::uint64_t{1} << nu);
}

std::optional<std::pair<BinaryCode, BinaryCode>> SplitEnumerator::next() {
    if (counter_ >= limit_) return std::nullopt;
    std::vector<std::uint64_t> classes[2];
    for (std::size_t v = 0; v < graph_.size(); ++v) {
        const auto c = graph_.components.id[v];
        const unsigned flip = c < 64 ? static_cast<unsigned>((counter_ >> c) & 1U) : 0U;
        classes[base_colouring_[v] ^ flip].push_back(graph_.vertices[v]);
    }
    ++counter_;
    const int n = graph_.length;
    return std::make_pair(BinaryCode(n, std::move(classes[0])), BinaryCode(n, std::move(classes[1])));
}

ComponentStats component_stats(const DistanceGraph& graph) {
    ComponentStats stats;
    stats.count = graph.components.count;
    std::vector<std::size_t> sizes(stats.count, 0);
    for (const auto id : graph.components.id) ++sizes[id];
    for (const auto s : sizes) ++stats.size_histogram[s];
    stats.min_size = sizes.empty() ? 0 : *std::min_element(sizes.begin(), sizes.end());
    return stats;
}

}  // namespace perfcode
