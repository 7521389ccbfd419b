#pragma once

// Exact integer matrices and the normal forms everything else stands on:
// canonical row Hermite normal form, Smith elementary divisors, exact
// determinant. No floating point anywhere.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyltoric/numeric.hpp"

namespace weyltoric {

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(check_dims(rows, cols)) {}

    IntMatrix(long rows, long cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows < 0 || cols < 0 || e_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
            throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, long cols = -1) {
        long r = static_cast<long>(rows.size());
        long c = cols;
        if (c < 0) c = rows.empty() ? 0 : static_cast<long>(rows.front().size());
        IntMatrix m(r, c);
        for (long i = 0; i < r; ++i) {
            if (static_cast<long>(rows[i].size()) != c)
                throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
            for (long j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(long i, long j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(long i, long j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Int> row(long i) const {
        return std::vector<Int>(e_.begin() + static_cast<long>(i * cols_),
                                e_.begin() + static_cast<long>((i + 1) * cols_));
    }

    void append_row(const std::vector<Int>& r) {
        if (static_cast<long>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix::append_row: length mismatch");
        e_.insert(e_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Lexicographic order on (rows, cols, entries); gives deterministic element
    // ordering wherever canonical bases are sorted.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
    }

    // Compact unique key, used for hashing deduplicated canonical forms.
    std::string key() const {
        std::ostringstream os;
        os << rows_ << 'x' << cols_;
        for (const Int& v : e_) os << ',' << v;
        return os.str();
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (long i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    static std::vector<Int> check_dims(long rows, long cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
        return std::vector<Int>(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }

    long rows_ = 0;
    long cols_ = 0;
    std::vector<Int> e_;  // row-major
};

struct HnfResult {
    IntMatrix h;  // canonical HNF, zero rows dropped: rows() == rank
    long rank = 0;
};

struct HnfTransform {
    IntMatrix h;  // full-height HNF (zero rows kept at the bottom)
    IntMatrix u;  // unimodular, h == u * m
    long rank = 0;
};

namespace detail {

// In-place canonical row HNF. Convention: pivots positive, each pivot strictly
// right of the one above, entries above a pivot reduced into [0, pivot).
// If u is non-null it must be the identity on entry and receives the same row
// operations, so that on exit *this == u * original.
inline long hnf_in_place(IntMatrix& m, IntMatrix* u) {
    const long rows = m.rows(), cols = m.cols();
    long pr = 0;  // next pivot row
    for (long c = 0; c < cols && pr < rows; ++c) {
        long sel = -1;
        for (long i = pr; i < rows; ++i)
            if (m.at(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        m.swap_rows(sel, pr);
        if (u) u->swap_rows(sel, pr);
        for (long i = pr + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Int a = m.at(pr, c), b = m.at(i, c);
            if (b % a == 0) {  // plain subtraction keeps the pivot row fixed
                Int q = b / a;
                for (long j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pr, j);
                if (u)
                    for (long j = 0; j < u->cols(); ++j) u->at(i, j) -= q * u->at(pr, j);
                continue;
            }
            Int uu, vv;
            Int g = ext_gcd(a, b, uu, vv);
            Int a_g = a / g, b_g = b / g;
            // [uu vv; -b/g a/g] is unimodular and sends (a,b) to (g,0).
            for (long j = 0; j < cols; ++j) {
                Int top = uu * m.at(pr, j) + vv * m.at(i, j);
                Int bot = a_g * m.at(i, j) - b_g * m.at(pr, j);
                m.at(pr, j) = std::move(top);
                m.at(i, j) = std::move(bot);
            }
            if (u) {
                for (long j = 0; j < u->cols(); ++j) {
                    Int top = uu * u->at(pr, j) + vv * u->at(i, j);
                    Int bot = a_g * u->at(i, j) - b_g * u->at(pr, j);
                    u->at(pr, j) = std::move(top);
                    u->at(i, j) = std::move(bot);
                }
            }
        }
        if (m.at(pr, c) < 0) {
            for (long j = 0; j < cols; ++j) m.at(pr, j) = -m.at(pr, j);
            if (u)
                for (long j = 0; j < u->cols(); ++j) u->at(pr, j) = -u->at(pr, j);
        }
        for (long i = 0; i < pr; ++i) {
            Int q = floor_div(m.at(i, c), m.at(pr, c));
            if (q == 0) continue;
            for (long j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pr, j);
            if (u)
                for (long j = 0; j < u->cols(); ++j) u->at(i, j) -= q * u->at(pr, j);
        }
        ++pr;
    }
    return pr;
}

}  // namespace detail

// Canonical row Hermite normal form; preserves the integer row span, drops
// zero rows so that h.rows() == rank. Idempotent.
inline HnfResult hnf(const IntMatrix& m) {
    IntMatrix w = m;
    long rank = detail::hnf_in_place(w, nullptr);
    IntMatrix h(rank, m.cols());
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < m.cols(); ++j) h.at(i, j) = w.at(i, j);
    return {std::move(h), rank};
}

// HNF together with a unimodular certificate u (h == u*m, |det u| = 1).
// Used by the span-preservation checks; h keeps its zero rows.
inline HnfTransform hnf_with_transform(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u(m.rows(), m.rows());
    for (long i = 0; i < m.rows(); ++i) u.at(i, i) = 1;
    long rank = detail::hnf_in_place(h, &u);
    return {std::move(h), std::move(u), rank};
}

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const long n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long sel = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { sel = i; break; }
            if (sel < 0) return 0;
            a.swap_rows(k, sel);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

// Smith normal form diagonal restricted to its nonzero entries,
// d_1 | d_2 | ... | d_r, all positive.
inline std::vector<Int> elementary_divisors(const IntMatrix& m) {
    IntMatrix a = m;
    const long rows = a.rows(), cols = a.cols();
    const long bound = std::min(rows, cols);
    long t = 0;
    while (t < bound) {
        // pick the remaining entry of least magnitude as pivot
        long pi = -1, pj = -1;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        for (;;) {
            for (long i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int p = a.at(t, t), q = a.at(i, t);
                if (q % p == 0) {  // keep the pivot row fixed when possible
                    Int f = q / p;
                    for (long j = t; j < cols; ++j) a.at(i, j) -= f * a.at(t, j);
                    continue;
                }
                Int uu, vv;
                Int g = ext_gcd(p, q, uu, vv);
                Int p_g = p / g, q_g = q / g;
                for (long j = t; j < cols; ++j) {
                    Int top = uu * a.at(t, j) + vv * a.at(i, j);
                    Int bot = p_g * a.at(i, j) - q_g * a.at(t, j);
                    a.at(t, j) = std::move(top);
                    a.at(i, j) = std::move(bot);
                }
            }
            for (long j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int p = a.at(t, t), q = a.at(t, j);
                if (q % p == 0) {  // keep the pivot column fixed when possible
                    Int f = q / p;
                    for (long i = t; i < rows; ++i) a.at(i, j) -= f * a.at(i, t);
                    continue;
                }
                Int uu, vv;
                Int g = ext_gcd(p, q, uu, vv);
                Int p_g = p / g, q_g = q / g;
                for (long i = t; i < rows; ++i) {
                    Int left = uu * a.at(i, t) + vv * a.at(i, j);
                    Int right = p_g * a.at(i, j) - q_g * a.at(i, t);
                    a.at(i, t) = std::move(left);
                    a.at(i, j) = std::move(right);
                }
            }
            // column ops can reintroduce entries below the pivot
            bool clear = true;
            for (long i = t + 1; i < rows && clear; ++i)
                if (a.at(i, t) != 0) clear = false;
            if (clear) break;
        }
        ++t;
    }
    std::vector<Int> d;
    for (long k = 0; k < t; ++k)
        if (a.at(k, k) != 0) d.push_back(abs(a.at(k, k)));
    // enforce the divisibility chain: diag(a,b) ~ diag(gcd, lcm)
    std::sort(d.begin(), d.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] % d[i] != 0) {
                Int g = gcd(d[i], d[i + 1]);
                Int l = d[i] / g * d[i + 1];
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
    return d;
}

// Membership of v in the integer row span of a canonical HNF matrix.
inline bool in_row_span_hnf(const IntMatrix& h, const std::vector<Int>& v) {
    if (static_cast<long>(v.size()) != h.cols())
        throw std::invalid_argument("in_row_span_hnf: length mismatch");
    std::vector<Int> w = v;
    for (long i = 0; i < h.rows(); ++i) {
        long p = 0;
        while (p < h.cols() && h.at(i, p) == 0) ++p;
        if (p == h.cols()) continue;
        if (w[p] % h.at(i, p) != 0) return false;
        Int q = w[p] / h.at(i, p);
        if (q == 0) continue;
        for (long j = p; j < h.cols(); ++j) w[j] -= q * h.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

// Lemma check hook: given a full-row-rank binary matrix whose 1s are
// consecutive in every row, are all HNF pivots equal to 1?
// Preconditions are validated and violations rejected.
inline bool consecutive_ones_pivots_unit(const IntMatrix& m) {
    for (long i = 0; i < m.rows(); ++i) {
        long first = -1, last = -1;
        for (long j = 0; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x != 0 && x != 1)
                throw std::invalid_argument("consecutive_ones_pivots_unit: matrix not binary");
            if (x == 1) {
                if (first < 0) first = j;
                last = j;
            }
        }
        if (first < 0)
            throw std::invalid_argument("consecutive_ones_pivots_unit: zero row");
        for (long j = first; j <= last; ++j)
            if (m.at(i, j) != 1)
                throw std::invalid_argument("consecutive_ones_pivots_unit: ones not consecutive");
    }
    HnfResult r = hnf(m);
    if (r.rank != m.rows())
        throw std::invalid_argument("consecutive_ones_pivots_unit: matrix not full row rank");
    for (long i = 0; i < r.h.rows(); ++i) {
        long p = 0;
        while (p < r.h.cols() && r.h.at(i, p) == 0) ++p;
        if (r.h.at(i, p) != 1) return false;
    }
    return true;
}

}  // namespace weyltoric
