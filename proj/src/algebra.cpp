#include "wsat/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wsat/combinatorics.hpp"
#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"

namespace wsat {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("PrimeField: modulus must be an odd prime");
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("PrimeField: modulus too large for word arithmetic");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t PrimeField::next_prime_above(std::uint64_t x) {
    std::uint64_t c = x + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::uint64_t default_certificate_prime(int n) {
    return PrimeField::next_prime_above(std::max<std::uint64_t>(static_cast<std::uint64_t>(n), 1000));
}

namespace {

// Determinant of a square matrix over F_p (destroys its argument).
std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>> m, const PrimeField& fp) {
    std::size_t d = m.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0) ++piv;
        if (piv == d) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = fp.neg(det);
        }
        det = fp.mul(det, m[col][col]);
        std::uint64_t pinv = fp.inv(m[col][col]);
        for (std::size_t r = col + 1; r < d; ++r) {
            if (m[r][col] == 0) continue;
            std::uint64_t factor = fp.mul(m[r][col], pinv);
            for (std::size_t c = col; c < d; ++c)
                m[r][c] = fp.sub(m[r][c], fp.mul(factor, m[col][c]));
        }
    }
    return det;
}

bool subset_independent(const GeneralPositionFamily& fam, const std::vector<int>& idx) {
    std::size_t d = idx.size();
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m[i][j] = fam.u[static_cast<std::size_t>(idx[j])][i];
    return det_mod_p(std::move(m), fam.field) != 0;
}

}  // namespace

GeneralPositionFamily moment_family(int n, int t, std::uint64_t p) {
    if (t < 2) throw std::invalid_argument("moment_family: t must be >= 2");
    if (n < 1) throw std::invalid_argument("moment_family: n must be >= 1");
    PrimeField fp(p);
    if (p <= static_cast<std::uint64_t>(n))
        throw std::invalid_argument("moment_family: p must exceed n");
    GeneralPositionFamily fam{fp, n, t, {}};
    fam.u.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& vec = fam.u[static_cast<std::size_t>(v)];
        vec.resize(static_cast<std::size_t>(t - 1));
        std::uint64_t a = static_cast<std::uint64_t>(v) + 1;
        std::uint64_t pw = 1;
        for (int i = 0; i < t - 1; ++i) {
            vec[static_cast<std::size_t>(i)] = pw;
            pw = fp.mul(pw, a);
        }
    }
    // Verify general position: every (t-1)-subset independent.
    int k = t - 1;
    if (k <= n) {
        unsigned long long count = binomial_saturating(n, k, 2'000'000);
        if (count <= 1'000'000) {
            std::vector<int> idx(static_cast<std::size_t>(k));
            std::iota(idx.begin(), idx.end(), 0);
            do {
                if (!subset_independent(fam, idx))
                    throw std::logic_error("moment_family: dependent (t-1)-subset");
            } while (next_combination(idx, n));
        } else {
            std::mt19937_64 rng(0);
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            for (int trial = 0; trial < 10'000; ++trial) {
                std::shuffle(all.begin(), all.end(), rng);
                std::vector<int> idx(all.begin(), all.begin() + k);
                if (!subset_independent(fam, idx))
                    throw std::logic_error("moment_family: dependent (t-1)-subset");
            }
        }
    }
    return fam;
}

EdgeVectorAssignment edge_vectors(const Graph& f, const GeneralPositionFamily& fam) {
    if (f.vertex_count() != fam.n)
        throw std::invalid_argument("edge_vectors: family built for a different n");
    EdgeVectorAssignment asg{fam.n, fam.t, f.edges(), {}};
    std::size_t dim = static_cast<std::size_t>(fam.n) * static_cast<std::size_t>(fam.t - 1);
    std::size_t block = static_cast<std::size_t>(fam.t - 1);
    asg.vectors.reserve(asg.edges.size());
    for (const Edge& e : asg.edges) {
        std::vector<std::uint64_t> vec(dim, 0);
        for (std::size_t i = 0; i < block; ++i) {
            vec[static_cast<std::size_t>(e.u) * block + i] = fam.u[static_cast<std::size_t>(e.v)][i];
            vec[static_cast<std::size_t>(e.v) * block + i] = fam.u[static_cast<std::size_t>(e.u)][i];
        }
        asg.vectors.push_back(std::move(vec));
    }
    return asg;
}

namespace {

// Nullspace coefficients of t family vectors in dimension t-1: unique up to
// scale with all entries nonzero when the family is in general position.
std::vector<std::uint64_t> class_nullspace(const GeneralPositionFamily& fam,
                                           const std::vector<int>& verts) {
    const PrimeField& fp = fam.field;
    std::size_t rows = static_cast<std::size_t>(fam.t - 1);
    std::size_t cols = verts.size();
    if (cols != static_cast<std::size_t>(fam.t))
        throw std::invalid_argument("class_nullspace: class size != t");
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
        int v = verts[j];
        if (v < 0 || v >= fam.n) throw std::out_of_range("class_nullspace: vertex out of range");
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = fam.u[static_cast<std::size_t>(v)][i];
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = fp.inv(m[r][col]);
        for (std::size_t c = col; c < cols; ++c) m[r][c] = fp.mul(m[r][c], inv);
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][col] == 0) continue;
            std::uint64_t factor = m[rr][col];
            for (std::size_t c = col; c < cols; ++c)
                m[rr][c] = fp.sub(m[rr][c], fp.mul(factor, m[r][c]));
        }
        pivot_cols.push_back(col);
        ++r;
    }
    if (pivot_cols.size() != rows)
        throw std::logic_error("ktt_dependence_coeffs: nullspace dimension != 1 (family not in general position)");
    // Single free column; express the dependence with coefficient 1 there.
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_col = c;
    std::vector<std::uint64_t> alpha(cols, 0);
    alpha[free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        alpha[pivot_cols[i]] = fp.neg(m[i][free_col]);
    for (std::uint64_t a : alpha)
        if (a == 0)
            throw std::logic_error("ktt_dependence_coeffs: zero dependence coefficient (family not in general position)");
    return alpha;
}

}  // namespace

std::map<Edge, std::uint64_t> ktt_dependence_coeffs(const CopyWitness& copy,
                                                    const GeneralPositionFamily& fam) {
    if (copy.classes.size() != 2)
        throw std::invalid_argument("ktt_dependence_coeffs: witness is not bipartite");
    const auto& vs = copy.classes[0];
    const auto& ws = copy.classes[1];
    if (vs.size() != static_cast<std::size_t>(fam.t) || ws.size() != static_cast<std::size_t>(fam.t))
        throw std::invalid_argument("ktt_dependence_coeffs: witness classes are not both of size t");
    auto alpha = class_nullspace(fam, vs);
    auto beta = class_nullspace(fam, ws);
    std::map<Edge, std::uint64_t> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j)
            out[Edge(vs[i], ws[j])] = fam.field.mul(alpha[i], beta[j]);
    return out;
}

int rank_mod_p(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p) {
    if (vectors.empty()) return 0;
    PrimeField fp(p);
    std::vector<std::vector<std::uint64_t>> m = vectors;
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("rank_mod_p: ragged matrix");
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = fp.inv(m[r][col]);
        for (std::size_t c = col; c < cols; ++c) m[r][c] = fp.mul(m[r][c] % p, inv);
        for (std::size_t rr = r + 1; rr < rows; ++rr) {
            std::uint64_t factor = m[rr][col] % p;
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m[rr][c] = fp.sub(m[rr][c] % p, fp.mul(factor, m[r][c]));
        }
        ++r;
    }
    return static_cast<int>(r);
}

IncrementalRankTracker::IncrementalRankTracker(std::size_t dim, std::uint64_t p)
    : dim_(dim), field_(p) {}

bool IncrementalRankTracker::add(std::vector<std::uint64_t> vec) {
    if (vec.size() != dim_) throw std::invalid_argument("IncrementalRankTracker: dimension mismatch");
    for (auto& x : vec) x %= field_.p();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::uint64_t factor = vec[pivot_col_[i]];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < dim_; ++c)
            vec[c] = field_.sub(vec[c], field_.mul(factor, basis_[i][c]));
    }
    std::size_t piv = dim_;
    for (std::size_t c = 0; c < dim_; ++c)
        if (vec[c] != 0) {
            piv = c;
            break;
        }
    if (piv == dim_) return false;
    std::uint64_t inv = field_.inv(vec[piv]);
    for (std::size_t c = 0; c < dim_; ++c) vec[c] = field_.mul(vec[c], inv);
    basis_.push_back(std::move(vec));
    pivot_col_.push_back(piv);
    return true;
}

unsigned long long ktt_copy_count(int n, int t) {
    unsigned long long cap = ~0ull / 4;
    unsigned long long a = binomial_saturating(n, t, cap);
    unsigned long long b = binomial_saturating(n - t, t, cap);
    if (a >= cap / (b ? b : 1)) return ~0ull;
    return a * b / 2;
}

namespace {

// Accumulates sum c_e f_e per vertex block and checks it vanishes.
bool dependence_zero_sum(const std::map<Edge, std::uint64_t>& coeffs,
                         const GeneralPositionFamily& fam) {
    const PrimeField& fp = fam.field;
    std::size_t block = static_cast<std::size_t>(fam.t - 1);
    std::map<int, std::vector<std::uint64_t>> acc;
    for (const auto& [e, c] : coeffs) {
        auto& au = acc.try_emplace(e.u, std::vector<std::uint64_t>(block, 0)).first->second;
        auto& av = acc.try_emplace(e.v, std::vector<std::uint64_t>(block, 0)).first->second;
        for (std::size_t i = 0; i < block; ++i) {
            au[i] = fp.add(au[i], fp.mul(c, fam.u[static_cast<std::size_t>(e.v)][i]));
            av[i] = fp.add(av[i], fp.mul(c, fam.u[static_cast<std::size_t>(e.u)][i]));
        }
    }
    for (const auto& [v, vec] : acc)
        for (std::uint64_t x : vec)
            if (x != 0) return false;
    return true;
}

void validate_copy(const std::vector<int>& a, const std::vector<int>& b,
                   const GeneralPositionFamily& fam, long& checks) {
    CopyWitness w{{a, b}, {}};
    auto coeffs = ktt_dependence_coeffs(w, fam);
    if (!dependence_zero_sum(coeffs, fam))
        throw std::logic_error("certify_lower_bound: dependence does not vanish");
    ++checks;
}

}  // namespace

LowerBoundCertificate certify_lower_bound(int n, int t, std::uint64_t p, ValidationMode mode,
                                          std::uint64_t seed) {
    if (t < 2 || n < 2 * t)
        throw std::invalid_argument("certify_lower_bound: need t >= 2 and n >= 2t");
    GeneralPositionFamily fam = moment_family(n, t, p);
    LowerBoundCertificate cert;
    cert.n = n;
    cert.t = t;
    cert.p = p;
    cert.formula_value = wsat_ktt_value(n, t);
    cert.validation_seed = seed;

    unsigned long long copies = ktt_copy_count(n, t);
    bool exhaustive;
    switch (mode.kind) {
        case ValidationMode::Kind::Exhaustive: exhaustive = true; break;
        case ValidationMode::Kind::Sampled: exhaustive = false; break;
        default: exhaustive = copies <= 100'000; break;
    }
    cert.validation_mode = exhaustive ? "exhaustive" : "sampled";

    if (exhaustive) {
        // Each unordered pair {A,B} once: A is the class holding the overall
        // minimum vertex.
        std::vector<int> a(static_cast<std::size_t>(t));
        std::iota(a.begin(), a.end(), 0);
        do {
            VertexSet in_a(n);
            for (int v : a) in_a.insert(v);
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_a.contains(v)) rest.push_back(v);
            std::vector<int> pick(static_cast<std::size_t>(t));
            std::iota(pick.begin(), pick.end(), 0);
            do {
                std::vector<int> b(static_cast<std::size_t>(t));
                for (int i = 0; i < t; ++i)
                    b[static_cast<std::size_t>(i)] =
                        rest[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
                if (b[0] < a[0]) continue;
                validate_copy(a, b, fam, cert.dependence_checks);
            } while (next_combination(pick, n - t));
        } while (next_combination(a, n));
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        long want = mode.kind == ValidationMode::Kind::Sampled ? mode.samples : 10'000;
        for (long trial = 0; trial < want; ++trial) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> a(all.begin(), all.begin() + t);
            std::vector<int> b(all.begin() + t, all.begin() + 2 * t);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            validate_copy(a, b, fam, cert.dependence_checks);
        }
    }

    auto full = edge_vectors(complete_graph(n), fam);
    cert.rank_full = rank_mod_p(full.vectors, p);
    auto gn = construct_gn(n, t);
    auto cons = edge_vectors(gn.graph, fam);
    cert.rank_construction = rank_mod_p(cons.vectors, p);
    cert.verdict = cert.rank_full;
    if (cert.rank_construction > cert.rank_full)
        throw std::logic_error("certify_lower_bound: construction rank exceeds full rank");
    return cert;
}

std::string LowerBoundCertificate::to_json() const {
    nlohmann::json j{{"n", n},
                     {"t", t},
                     {"p", p},
                     {"rank_full", rank_full},
                     {"rank_construction", rank_construction},
                     {"formula_value", formula_value},
                     {"validation",
                      {{"mode", validation_mode},
                       {"copies_checked", dependence_checks},
                       {"seed", validation_seed}}},
                     {"verdict", verdict}};
    return j.dump(2);
}

}  // namespace wsat
