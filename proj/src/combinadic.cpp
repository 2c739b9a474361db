#include "egim/combinadic.hpp"

#include <stdexcept>

namespace egim {

uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return r;
}

int floor_log2(uint64_t v) {
    int l = -1;
    while (v) {
        v >>= 1;
        ++l;
    }
    return l;
}

std::vector<int> combination_unrank(uint64_t rank, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("combination_unrank: need 0 <= k <= n");
    if (rank >= binomial(n, k)) throw std::out_of_range("combination_unrank: rank out of range");
    std::vector<int> subset;
    subset.reserve(static_cast<size_t>(k));
    int elem = 0;
    for (int remaining = k; remaining > 0; --remaining) {
        // count subsets that keep `elem` as the next member
        while (true) {
            const uint64_t c = binomial(n - elem - 1, remaining - 1);
            if (rank < c) break;
            rank -= c;
            ++elem;
        }
        subset.push_back(elem++);
    }
    return subset;
}

uint64_t combination_rank(const std::vector<int>& subset, int n, int k) {
    if (static_cast<int>(subset.size()) != k)
        throw std::invalid_argument("combination_rank: subset size != k");
    uint64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        const int s = subset[static_cast<size_t>(i)];
        if (s <= prev || s >= n) throw std::invalid_argument("combination_rank: bad subset");
        for (int e = prev + 1; e < s; ++e) rank += binomial(n - e - 1, k - i - 1);
        prev = s;
    }
    return rank;
}

}  // namespace egim
