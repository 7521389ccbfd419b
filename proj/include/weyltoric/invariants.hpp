#pragma once

// The Poincare polynomial of the type-A toric complement by four routes:
//   closed   : prod_{i=1}^{n} (1 + (i+1) t)
//   macmeikan: Mobius/Poincare sum over the intersection poset
//   points   : finite-field point count composed with the (-t)^n p(-1/t)
//              transform
//   tutte    : arithmetic Tutte polynomial specialized at ((2t+1)/t, 0)
// The routes share no intermediate machinery beyond exact arithmetic, which
// is what makes their agreement a meaningful check.

#include <atomic>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "weyltoric/poly.hpp"
#include "weyltoric/poset.hpp"
#include "weyltoric/root_system.hpp"

namespace weyltoric {

inline UniPoly poincare_closed_form(long n) {
    if (n < 1) throw std::invalid_argument("poincare_closed_form: rank must be >= 1");
    UniPoly p = UniPoly::constant(1);
    for (long i = 1; i <= n; ++i) p = p * UniPoly({1, i + 1});
    return p;
}

// Sum over poset elements Z of mu(Z) * (-t)^{rk Z} * c_Z * (1+t)^{n - rk Z},
// where c_Z (the component count of the corresponding layer) is the torsion
// order carried by the element.
inline UniPoly poincare_macmeikan(const IntersectionPoset& poset) {
    const long n = poset.ambient_rank;
    std::vector<UniPoly> one_plus_t_pow(n + 1);
    one_plus_t_pow[0] = UniPoly::constant(1);
    for (long k = 1; k <= n; ++k) one_plus_t_pow[k] = one_plus_t_pow[k - 1] * UniPoly({1, 1});
    UniPoly acc;
    for (long i = 0; i < poset.size(); ++i) {
        long r = poset.rank_of(i);
        Int coeff = poset.mobius_values[i] * poset.elements[i].torsion_order();
        if (r % 2 != 0) coeff = -coeff;
        acc += scale(one_plus_t_pow[n - r] * UniPoly::monomial(1, r), coeff);
    }
    return acc;
}

// prod_{i=1}^{n} (q - (i+1)), the number of F_q points of the complement.
inline UniPoly point_count_poly(long n) {
    if (n < 1) throw std::invalid_argument("point_count_poly: rank must be >= 1");
    UniPoly p = UniPoly::constant(1);
    for (long i = 1; i <= n; ++i) p = p * UniPoly({-(i + 1), 1});
    return p;
}

namespace detail {

inline bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace detail

// Arithmetic tables for a prime field F_q; carries the canonical indexing of
// the projective line used by the enumeration oracle.
struct PrimeField {
    long q = 0;

    explicit PrimeField(long q_) : q(q_) {
        if (!detail::is_prime(q)) throw std::invalid_argument("PrimeField: q must be prime");
    }

    long add(long a, long b) const { return (a + b) % q; }
    long mul(long a, long b) const { return (a * b) % q; }
    long neg(long a) const { return (q - a) % q; }
    long inv(long a) const {
        if (a % q == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
        // Fermat
        long r = 1, base = a % q, e = q - 2;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Index of the projective point (a : b): finite x -> x, infinity -> q.
    long p1_index(long a, long b) const {
        a %= q; b %= q;
        if (b != 0) return mul(a, inv(b));
        if (a == 0) throw std::invalid_argument("PrimeField: (0:0) is not a point");
        return q;
    }
};

// Literal enumeration of ordered (n+3)-tuples of pairwise-distinct points of
// P^1(F_q), divided by |PGL(2, F_q)| = (q+1)q(q-1). The division is required
// to be exact; a remainder means the enumeration itself is broken.
inline Int brute_force_point_count(long n, long q) {
    if (n < 1) throw std::invalid_argument("brute_force_point_count: rank must be >= 1");
    PrimeField f(q);
    // P^1(F_q) has q+1 points, so q+1 >= n+3 is what distinct tuples need
    if (q < n + 2)
        throw std::invalid_argument("brute_force_point_count: q must be at least n+2");

    // materialize P^1 from homogeneous pairs, then check its size
    std::vector<char> have(q + 1, 0);
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            if (a != 0 || b != 0) have[f.p1_index(a, b)] = 1;
    long points = 0;
    for (char h : have) points += h;
    if (points != q + 1)
        throw std::logic_error("brute_force_point_count: projective line has wrong size");

    const long tuple_len = n + 3;
    std::vector<char> used(q + 1, 0);
    Int tuples = 0;
    auto rec = [&](auto&& self, long depth) -> void {
        if (depth == tuple_len) {
            ++tuples;
            return;
        }
        for (long p = 0; p <= q; ++p) {
            if (used[p]) continue;
            used[p] = 1;
            self(self, depth + 1);
            used[p] = 0;
        }
    };
    rec(rec, 0);

    Int pgl_order = Int(q + 1) * q * (q - 1);
    if (tuples % pgl_order != 0)
        throw std::logic_error("brute_force_point_count: tuple count not divisible by |PGL|");
    return tuples / pgl_order;
}

namespace detail {

// Shared state of one Tutte subset-sum enumeration: tallies of
// sum-of-multiplicities by (corank, nullity) = (n - rk S, |S| - rk S).
struct TutteTally {
    long n = 0, m = 0;
    std::vector<std::vector<Int>> t;  // (n+1) x (m+1)

    TutteTally(long n_, long m_) : n(n_), m(m_), t(n_ + 1, std::vector<Int>(m_ + 1, Int(0))) {}

    void merge(const TutteTally& o) {
        for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= m; ++b) t[a][b] += o.t[a][b];
    }
};

// Append one vector to a canonical HNF basis. Membership is checked first so
// that the frequent span-preserving case costs one reduction, not a re-HNF.
inline IntMatrix hnf_add_row(const IntMatrix& basis, const std::vector<Int>& v) {
    if (in_row_span_hnf(basis, v)) return basis;
    IntMatrix stacked = basis;
    stacked.append_row(v);
    return hnf(stacked).h;
}

class TorsionCache {
public:
    const Int& torsion(const IntMatrix& canonical_basis) {
        std::string key = canonical_basis.key();
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Int t = 1;
        for (const Int& d : elementary_divisors(canonical_basis)) t *= d;
        return cache_.emplace(std::move(key), std::move(t)).first->second;
    }

private:
    std::unordered_map<std::string, Int> cache_;
};

inline void tutte_dfs(const std::vector<std::vector<Int>>& roots, size_t idx,
                      const IntMatrix& basis, long taken, TutteTally& tally,
                      TorsionCache& cache) {
    if (idx == roots.size()) {
        long rk = basis.rows();
        tally.t[tally.n - rk][taken - rk] += cache.torsion(basis);
        return;
    }
    tutte_dfs(roots, idx + 1, basis, taken, tally, cache);
    IntMatrix extended = hnf_add_row(basis, roots[idx]);
    tutte_dfs(roots, idx + 1, extended, taken + 1, tally, cache);
}

}  // namespace detail

// Arithmetic Tutte polynomial of the arrangement indexed by the positive
// roots: M(x,y) = sum over subsets S of m(S) (x-1)^{n-rk S} (y-1)^{|S|-rk S},
// with m(S) the torsion order of Z^n / <S>. The 2^{|roots|} subset sum is the
// intentionally exponential kernel; the DFS shares Hermite updates across
// subsets with a common prefix, and the enumeration splits over disjoint
// prefix ranges when threads > 1 (the tally merge is a plain sum, so the
// result is independent of the partitioning).
inline BiPoly arithmetic_tutte(const RootSystemA& rs, unsigned threads = 1) {
    const long n = rs.n;
    const long m = static_cast<long>(rs.roots.size());
    detail::TutteTally tally(n, m);

    if (threads <= 1 || m < 4) {
        detail::TorsionCache cache;
        detail::tutte_dfs(rs.roots, 0, IntMatrix(0, n), 0, tally, cache);
    } else {
        long prefix_bits = 1;
        while ((1L << prefix_bits) < static_cast<long>(4 * threads) && prefix_bits < m - 1 &&
               prefix_bits < 12)
            ++prefix_bits;
        const long tasks = 1L << prefix_bits;
        std::atomic<long> next{0};
        std::vector<detail::TutteTally> partial(threads, detail::TutteTally(n, m));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                detail::TorsionCache cache;
                for (;;) {
                    long task = next.fetch_add(1);
                    if (task >= tasks) break;
                    IntMatrix basis(0, n);
                    long taken = 0;
                    for (long b = 0; b < prefix_bits; ++b) {
                        if (task & (1L << b)) {
                            basis = detail::hnf_add_row(basis, rs.roots[b]);
                            ++taken;
                        }
                    }
                    detail::tutte_dfs(rs.roots, prefix_bits, basis, taken, partial[w], cache);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : partial) tally.merge(part);
    }

    std::vector<BiPoly> xm1_pow(n + 1), ym1_pow(m + 1);
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
    xm1_pow[0] = BiPoly::constant(1);
    for (long a = 1; a <= n; ++a) xm1_pow[a] = xm1_pow[a - 1] * xm1;
    ym1_pow[0] = BiPoly::constant(1);
    for (long b = 1; b <= m; ++b) ym1_pow[b] = ym1_pow[b - 1] * ym1;

    BiPoly result;
    for (long a = 0; a <= n; ++a)
        for (long b = 0; b <= m; ++b)
            if (tally.t[a][b] != 0) result += scale(xm1_pow[a] * ym1_pow[b], tally.t[a][b]);
    return result;
}

struct VerifyAllReport {
    long n = 0;
    UniPoly closed_form;
    UniPoly macmeikan;
    UniPoly point_count;  // already transformed to t
    UniPoly tutte;
    bool agree = false;   // four-way equality and the Euler value check
    Int euler_at_1;
};

inline VerifyAllReport verify_all(long n, unsigned threads = 1) {
    if (n < 1) throw std::invalid_argument("verify_all: rank must be >= 1");
    VerifyAllReport rep;
    rep.n = n;
    RootSystemA rs = positive_roots(n);
    rep.closed_form = poincare_closed_form(n);
    rep.macmeikan = poincare_macmeikan(build_poset(rs));
    rep.point_count = reverse_transform(point_count_poly(n), n);
    rep.tutte = tutte_eval_poincare(arithmetic_tutte(rs, threads), n);
    rep.euler_at_1 = rep.closed_form.eval(1);
    rep.agree = rep.closed_form == rep.macmeikan && rep.closed_form == rep.point_count &&
                rep.closed_form == rep.tutte && rep.euler_at_1 == factorial(n + 2) / 2;
    return rep;
}

inline nlohmann::ordered_json verify_all_to_json(const VerifyAllReport& rep) {
    nlohmann::ordered_json doc;
    doc["n"] = rep.n;
    doc["closed_form"] = rep.closed_form.str();
    doc["macmeikan"] = rep.macmeikan.str();
    doc["point_count"] = rep.point_count.str();
    doc["tutte"] = rep.tutte.str();
    doc["agree"] = rep.agree;
    doc["euler_at_1"] = to_int64(rep.euler_at_1);
    return doc;
}

}  // namespace weyltoric
