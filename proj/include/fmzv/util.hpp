#pragma once

#include <vector>

namespace fmzv {

// Binomial coefficient with the subset-counting convention:
// zero whenever n < 0, k < 0 or k > n.
long long binom_ll(int n, int k);

// Compositions of `total` into exactly `parts` positive parts, in
// lexicographic order, e.g. compositions(3, 2) = {(1,2), (2,1)}.
std::vector<std::vector<int>> compositions(int total, int parts);

// Non-negative integer vectors of the given length summing to `total`,
// in lexicographic order.
std::vector<std::vector<int>> weak_compositions(int total, int length);

// All compositions of `total` of any length, ordered by length then
// lexicographically.
std::vector<std::vector<int>> all_compositions(int total);

// Odd primes in [lo, hi], ascending.
std::vector<int> odd_primes_in(int lo, int hi);

}  // namespace fmzv
