#pragma once

// Instance ingestion and preprocessing: the zero filter, the mixed-sign
// transformation bookkeeping (negative total kept for shifting), ordering by
// absolute value, and the trivial-verdict shortcuts that decide an instance
// before any navigation happens.

#include <cstdint>
#include <vector>

#include "senav/ints.hpp"

namespace senav {

struct Instance {
    std::vector<long long> elements;  // raw input order, zeros allowed
    std::vector<long long> targets;   // non-empty, duplicate-free
    bool allow_empty = true;          // does the literal empty subset count?
};

struct PreprocessedInstance {
    // Non-zero elements ordered by non-decreasing absolute value, original
    // signs preserved.  Ties keep raw input order (stable sort).
    std::vector<long long> sorted_elements;
    std::vector<std::size_t> origin_index;  // sorted position -> raw position
    SumValue neg_shift = 0;                 // sum of all negative elements
    SumValue pos_sum = 0;                   // sum of all positive elements
    std::size_t zero_count = 0;
    std::size_t odd_element_count = 0;  // elements with odd magnitude
    bool allow_empty = true;

    std::size_t size() const { return sorted_elements.size(); }
};

enum class TrivialKind {
    NotTrivial,
    PureZero,      // target 0 over a set of only zeros
    EvenOddUnsat,  // all magnitudes even, target odd
    OutOfBounds,   // target outside [neg_shift, pos_sum]
    EmptySetOnly,  // target 0 over a completely empty instance
};

struct TrivialVerdict {
    TrivialKind kind = TrivialKind::NotTrivial;
    // Raw solution count for decidable-by-shortcut cases; includes the empty
    // subset (the allow_empty adjustment is applied by the outcome assembly).
    BigCount count = 0;
};

// Validates invariants (duplicate-free targets, 63-bit magnitudes, 127-bit
// absolute-value total) before any other module touches the instance.
void validate(const Instance& instance);

PreprocessedInstance preprocess(const Instance& instance);

TrivialVerdict detect_trivial(const PreprocessedInstance& prep, long long target);

}  // namespace senav
