#pragma once

#include <vector>

namespace wsat {

// Advances an ascending k-subset of 0..n-1 to the next combination in
// lexicographic order; false when exhausted.
inline bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// C(n,k) clamped at cap.
inline unsigned long long binomial_saturating(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
        if (next > cap) return cap;
        r = static_cast<unsigned long long>(next);
    }
    return r;
}

}  // namespace wsat
