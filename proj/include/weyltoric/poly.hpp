#pragma once

// Exact polynomial arithmetic over the integers: univariate (dense) and
// bivariate (sparse map), plus the handful of combinatorial evaluations the
// Poincare pipelines need.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyltoric/numeric.hpp"

namespace weyltoric {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Int> ascending) : c_(ascending) { trim(); }
    explicit UniPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

    static UniPoly constant(Int v) { return UniPoly({std::move(v)}); }
    static UniPoly monomial(Int coeff, long deg) {
        std::vector<Int> c(deg + 1);
        c[deg] = std::move(coeff);
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero

    Int coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
        return c_[k];
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly scale(UniPoly p, const Int& s) {
        if (s == 0) return {};
        for (Int& v : p.c_) v *= s;
        return p;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Descending powers with caret exponents, e.g. "6t^2 + 5t + 1".
    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long k = degree(); k >= 0; --k) {
            const Int& a = c_[k];
            if (a == 0) continue;
            Int mag = abs(a);
            if (first) {
                if (a < 0) os << '-';
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << var;
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;  // c_[k] = coefficient of degree k; no trailing zeros
};

class BiPoly {
public:
    using Key = std::pair<long, long>;  // (x-degree, y-degree)

    BiPoly() = default;

    static BiPoly constant(Int v) {
        BiPoly p;
        p.add_term(0, 0, std::move(v));
        return p;
    }
    static BiPoly x() {
        BiPoly p;
        p.add_term(1, 0, 1);
        return p;
    }
    static BiPoly y() {
        BiPoly p;
        p.add_term(0, 1, 1);
        return p;
    }

    void add_term(long dx, long dy, Int v) {
        if (v == 0) return;
        auto it = c_.find({dx, dy});
        if (it == c_.end()) {
            c_.emplace(Key{dx, dy}, std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Int>& terms() const { return c_; }

    Int coeff(long dx, long dy) const {
        auto it = c_.find({dx, dy});
        return it == c_.end() ? Int(0) : it->second;
    }

    long x_degree() const {
        long d = -1;
        for (const auto& [k, v] : c_) d = std::max(d, k.first);
        return d;
    }

    Int eval(const Int& x, const Int& y) const {
        Int acc = 0;
        for (const auto& [k, v] : c_) {
            Int term = v;
            for (long i = 0; i < k.first; ++i) term *= x;
            for (long i = 0; i < k.second; ++i) term *= y;
            acc += term;
        }
        return acc;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

    friend BiPoly scale(BiPoly p, const Int& s) {
        BiPoly r;
        if (s == 0) return r;
        for (const auto& [k, v] : p.c_) r.add_term(k.first, k.second, v * s);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const {
        if (c_.empty()) return "0";
        // print by descending total degree, then descending x-degree
        std::map<std::pair<long, long>, Int> ordered;
        for (const auto& [k, v] : c_)
            ordered[{-(k.first + k.second), -k.first}] = v;
        std::ostringstream os;
        bool first = true;
        for (const auto& [ok, v] : ordered) {
            long dx = -ok.second, dy = -(ok.first) - dx;
            Int mag = abs(v);
            if (first) {
                if (v < 0) os << '-';
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            if (mag != 1 || (dx == 0 && dy == 0)) os << mag;
            if (dx >= 1) {
                os << xv;
                if (dx >= 2) os << '^' << dx;
            }
            if (dy >= 1) {
                os << yv;
                if (dy >= 2) os << '^' << dy;
            }
        }
        return os.str();
    }

private:
    std::map<Key, Int> c_;  // no stored zeros
};

// e_r over the given values; e_0 = 1.
inline Int elementary_symmetric(const std::vector<Int>& values, long r) {
    if (r < 0 || r > static_cast<long>(values.size()))
        throw std::invalid_argument("elementary_symmetric: r out of range");
    std::vector<Int> e(r + 1);
    e[0] = 1;
    long seen = 0;
    for (const Int& v : values) {
        ++seen;
        for (long j = std::min<long>(r, seen); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[r];
}

// e_r(1, 2, ..., n)
inline Int elementary_symmetric_1_to_n(long n, long r) {
    std::vector<Int> vals;
    vals.reserve(n);
    for (long i = 1; i <= n; ++i) vals.emplace_back(i);
    return elementary_symmetric(vals, r);
}

// Sum_{j=0}^{k} C(n-j, k-j) * e_j(1,...,n); the t^k coefficient of the
// Mobius-sum expansion Sum_r e_r(1..n) t^r (1+t)^{n-r}.
inline Int coeff_identity_lhs(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("coeff_identity_lhs: k out of range");
    Int acc = 0;
    for (long j = 0; j <= k; ++j)
        acc += binomial(n - j, k - j) * elementary_symmetric_1_to_n(n, j);
    return acc;
}

// Point-count to Poincare transform: p = Sum a_j q^j (deg <= n) becomes
// (-t)^n p(-1/t) = Sum a_j (-1)^{n-j} t^{n-j}.
inline UniPoly reverse_transform(const UniPoly& p, long n) {
    if (p.degree() > n) throw std::invalid_argument("reverse_transform: degree exceeds n");
    std::vector<Int> out(n + 1);
    for (long j = 0; j <= n; ++j) {
        Int a = p.coeff(j);
        if ((n - j) % 2 != 0) a = -a;
        out[n - j] = std::move(a);
    }
    return UniPoly(std::move(out));
}

// t^n * m((2t+1)/t, 0). Only y-degree-0 terms survive; the x-degree bound
// deg_x <= n keeps the result a genuine polynomial:
//   Sum_i c_{i,0} (2t+1)^i t^{n-i}.
inline UniPoly tutte_eval_poincare(const BiPoly& m, long n) {
    UniPoly two_t_plus_1({1, 2});
    UniPoly acc;
    for (const auto& [k, v] : m.terms()) {
        if (k.second != 0) continue;
        long i = k.first;
        if (i > n)
            throw std::logic_error("tutte_eval_poincare: x-degree exceeds rank, "
                                   "substitution would produce negative powers");
        UniPoly term = UniPoly::constant(v);
        for (long s = 0; s < i; ++s) term = term * two_t_plus_1;
        acc += term * UniPoly::monomial(1, n - i);
    }
    return acc;
}

}  // namespace weyltoric
