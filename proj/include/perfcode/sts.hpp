#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "perfcode/code.hpp"
#include "perfcode/splitgraph.hpp"

namespace perfcode {

// Blocks are weight-3 words of length `points` (characteristic vectors), with multiplicity.
// A valid system of fold f covers every pair of points by exactly f blocks.
class TripleSystem {
public:
    TripleSystem(MultisetCode blocks, int fold);

    int points() const noexcept { return blocks_.length(); }
    int fold() const noexcept { return fold_; }
    const MultisetCode& blocks() const noexcept { return blocks_; }
    std::uint64_t block_count() const noexcept { return blocks_.total_size(); }

private:
    MultisetCode blocks_;
    int fold_;
};

// Weight-3 codewords of a code containing 0 (fold 1), or of a multiset in which 0 has
// multiplicity 2 (fold 2).
TripleSystem extract_sts(const BinaryCode& code);
TripleSystem extract_sts(const MultisetCode& code);

struct PairWitness {
    int first;  // 1-based points
    int second;
    unsigned coverage;
    unsigned expected;
};

// Witness is the first pair (in lexicographic order) not covered exactly `fold` times.
Checked<PairWitness> verify_triple_system(const TripleSystem& system);

// Two fold-1 systems from a 2-colouring of the blocks, where blocks sharing two points and
// copies of one block conflict; or an odd cycle of conflicting blocks.
SplitResult split_triple_system(const TripleSystem& system);

// The twofold STS(15) shipped with the library, as file text and parsed.
const std::string& twofold_sts15_text();
MultisetCode twofold_sts15();

struct ExampleReport {
    std::string checksum;
    std::size_t distinct_words = 0;
    std::uint64_t total_multiplicity = 0;
    Checked<PairWitness> twofold;
    // a) words ending 00 or 11 have multiplicity 2, words ending 01 or 10 multiplicity 1.
    bool property_a = false;
    // b) x01 is a word iff x10 is.
    bool property_b = false;
    std::optional<OddCycleWitness> cycle;
    bool cycle_valid = false;

    bool ok() const;
    std::string text() const;
};

ExampleReport check_unsplittable_example();

}  // namespace perfcode
