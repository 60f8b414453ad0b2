#pragma once

#include <cassert>
#include <stdexcept>

namespace wsat {

inline long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// (t-1)(n+1-t/2), computed exactly as (t-1)(2n+2-t)/2.
inline long long wsat_ktt_value(int n, int t) {
    long long num = static_cast<long long>(t - 1) * (2LL * n + 2 - t);
    if (num % 2 != 0) throw std::logic_error("wsat_ktt_value: odd numerator");
    return num / 2;
}

inline long long wsat_ktt1_value(int n, int t) { return wsat_ktt_value(n, t) + 1; }

inline long long wsat_clique_value(int n, int r) { return binom2(n) - binom2(n - r + 2); }

inline long long genst_upper_value(int n, int s, int t) {
    return static_cast<long long>(s - 1) * (n - s) + binom2(t);
}

inline long long genst_lower_value(int n, int s, int t) {
    return static_cast<long long>(s - 1) * (n - t + 1) + binom2(t);
}

// wsat(K_{l,m}, K_{s,t}) = (l+m-s+1)(s-1)+(t-s)^2
inline long long wsat_bipartite_value(int l, int m, int s, int t) {
    return static_cast<long long>(l + m - s + 1) * (s - 1) +
           static_cast<long long>(t - s) * (t - s);
}

// Bisaturation number w(l,m,K_{s,t}) = l*m - (l-s+1)(m-t+1)
inline long long bisat_value(int l, int m, int s, int t) {
    return static_cast<long long>(l) * m - static_cast<long long>(l - s + 1) * (m - t + 1);
}

// wsat(K_{n,n}, K_{s,t}) = n^2 - (n-s+1)^2 + (t-s)^2
inline long long wsat_square_bipartite_value(int n, int s, int t) {
    return static_cast<long long>(n) * n - static_cast<long long>(n - s + 1) * (n - s + 1) +
           static_cast<long long>(t - s) * (t - s);
}

}  // namespace wsat
