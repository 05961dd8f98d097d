#pragma once

// Ground-truth engines used to referee the navigator: full binary-increment
// enumeration, four independent counting baselines, and structural checkers
// for the symmetry / periodicity observations.  Nothing here shares code with
// the search engine; these are deliberately plain implementations.

#include <cstdint>
#include <vector>

#include "senav/ints.hpp"

namespace senav::oracle {

enum class BaselineMethod { BruteForce, DP, MeetInMiddle, Backtracking };

struct EnumerationTable {
    // sums[i] is the subset sum of the bitmask i (bit b <-> elements[b]).
    std::vector<long long> sums;
    long long total = 0;
};

// All 2^n subset sums in binary-increment order.  Guarded at n <= 24.
EnumerationTable enumerate_all(const std::vector<long long>& elements);

// Exact number of subsets of `elements` summing to `target`.  The empty
// subset is counted only when `allow_empty` is set.
BigCount baseline_count(const std::vector<long long>& elements, long long target,
                        BaselineMethod method, bool allow_empty = true);

// Observation: sums[i] + sums[2^n - 1 - i] equals the total for every i.
bool check_symmetry(const EnumerationTable& table);

// Observation: every block of 2^split_bit consecutive sums repeats the first
// block's in-block difference pattern.
bool check_period(const EnumerationTable& table, unsigned split_bit);

}  // namespace senav::oracle
