#pragma once

// Witness reconstruction.  A solution is identified by its preceding
// possibility index; converting that index to binary (lowest bit <-> first
// sorted element) names the subset in the transformed all-positive reading.
// Positions holding negative elements have their bit negated before
// inclusion, which maps the transformed subset back to the raw-sign subset
// that actually sums to the target.

#include <cstdint>
#include <string>
#include <vector>

#include "senav/core.hpp"
#include "senav/ints.hpp"

namespace senav {

struct Bitmask {
    std::vector<bool> bits;  // bits[i] <-> sorted element i

    std::size_t popcount() const;
    // Enumeration-order rendering: lowest bit first ("01110011" for 206, n=8).
    std::string to_string() const;
};

struct SolutionRecord {
    long long target = 0;
    BigCount preceding_index = 0;
    Bitmask bitmask;                            // transformed-space inclusion mask
    std::vector<long long> elements;            // contributing raw elements, sorted order
    std::vector<std::size_t> origin_positions;  // raw input positions of `elements`
    bool is_empty = false;                      // decoded subset is the empty set
};

Bitmask index_to_bitmask(BigCount index, std::size_t n);

// Applies the negation rule and returns contributing elements with original
// signs, in sorted_elements order.
std::vector<long long> bitmask_to_elements(const Bitmask& bitmask,
                                           const PreprocessedInstance& prep);

// Full decode of a solution index found for `target`.
SolutionRecord decode_index(BigCount index, long long target,
                            const PreprocessedInstance& prep);

}  // namespace senav
