#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

// Arithmetic in F_p for an odd prime p (word-sized; products fit in 64 bits
// for p < 2^31, which is far above any modulus used here).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    static bool is_prime(std::uint64_t x);
    static std::uint64_t next_prime_above(std::uint64_t x);

private:
    std::uint64_t p_;
};

// Moment-curve vectors u_v = (1, a_v, a_v^2, ..., a_v^{t-2}) with a_v = v+1:
// every (t-1)-subset is linearly independent over F_p (Vandermonde, p > n),
// hence every t-subset carries a dependence, unique up to scale, with all
// coefficients nonzero.
struct GeneralPositionFamily {
    PrimeField field;
    int n = 0;
    int t = 0;
    std::vector<std::vector<std::uint64_t>> u;  // n vectors of dimension t-1
};

// Builds and verifies the family: all (t-1)-subsets checked when
// C(n,t-1) <= 10^6, else 10^4 seeded random subsets.
GeneralPositionFamily moment_family(int n, int t, std::uint64_t p);

// f_e for e = xy: block x holds u_y, block y holds u_x, all other blocks 0.
struct EdgeVectorAssignment {
    int n = 0;
    int t = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::uint64_t>> vectors;  // dimension n(t-1)
};

EdgeVectorAssignment edge_vectors(const Graph& f, const GeneralPositionFamily& fam);

// Scalars c_{v_i w_j} = alpha_i beta_j for a K_{t,t} witness, where alpha
// (resp. beta) spans the nullspace of the class vectors. All scalars nonzero
// and sum_e c_e f_e = 0; throws if general position fails.
std::map<Edge, std::uint64_t> ktt_dependence_coeffs(const CopyWitness& copy,
                                                    const GeneralPositionFamily& fam);

// Exact rank over F_p via Gaussian elimination, pivoting on the first
// nonzero column, first nonzero row. Deterministic.
int rank_mod_p(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p);

// Incremental span tracker: feed vectors one at a time, rank grows only when
// the vector leaves the current span.
class IncrementalRankTracker {
public:
    IncrementalRankTracker(std::size_t dim, std::uint64_t p);
    // Returns true when the vector increased the rank.
    bool add(std::vector<std::uint64_t> vec);
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    std::size_t dim_;
    PrimeField field_;
    std::vector<std::vector<std::uint64_t>> basis_;  // echelonized rows
    std::vector<std::size_t> pivot_col_;
};

struct ValidationMode {
    enum class Kind { Auto, Exhaustive, Sampled } kind = Kind::Auto;
    long samples = 10000;  // for Sampled

    static ValidationMode auto_mode() { return {}; }
    static ValidationMode exhaustive() { return {Kind::Exhaustive, 0}; }
    static ValidationMode sampled(long k) { return {Kind::Sampled, k}; }
};

struct LowerBoundCertificate {
    int n = 0;
    int t = 0;
    std::uint64_t p = 0;
    int rank_full = 0;          // rank of {f_e : e in E(K_n)}
    int rank_construction = 0;  // rank of {f_e : e in E(G_n)}
    long long formula_value = 0;
    long dependence_checks = 0;
    std::string validation_mode;  // "exhaustive" | "sampled"
    std::uint64_t validation_seed = 0;
    int verdict = 0;  // certified lower bound = rank_full

    std::string to_json() const;
};

// Number of K_{t,t} copies in K_n: C(n,t) * C(n-t,t) / 2 (saturating).
unsigned long long ktt_copy_count(int n, int t);

LowerBoundCertificate certify_lower_bound(int n, int t, std::uint64_t p,
                                          ValidationMode mode = ValidationMode::auto_mode(),
                                          std::uint64_t seed = 0);

// Smallest prime above max(n, 1000) — the default certificate modulus.
std::uint64_t default_certificate_prime(int n);

}  // namespace wsat
