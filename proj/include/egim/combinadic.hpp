#pragma once

#include <cstdint>
#include <vector>

namespace egim {

uint64_t binomial(int n, int k);
int floor_log2(uint64_t v);

/// rank -> k-subset of {0..n-1} in ascending lexicographic order
/// ({0,1,..,k-1} has rank 0). Throws std::out_of_range for
/// rank >= C(n,k).
std::vector<int> combination_unrank(uint64_t rank, int n, int k);

/// Inverse of combination_unrank; `subset` must be strictly increasing.
uint64_t combination_rank(const std::vector<int>& subset, int n, int k);

}  // namespace egim
