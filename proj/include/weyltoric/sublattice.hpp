#pragma once

// Sublattices N of Z^n in canonical form. The canonical HNF basis makes
// equality a plain entry comparison; the torsion order of Z^n/N is the
// product of the elementary divisors of any generating matrix.

#include <stdexcept>
#include <utility>
#include <vector>

#include "weyltoric/int_matrix.hpp"

namespace weyltoric {

class Sublattice {
public:
    Sublattice() = default;

    long ambient_rank() const { return ambient_rank_; }
    const IntMatrix& basis() const { return basis_; }
    long rank() const { return basis_.rows(); }
    const Int& torsion_order() const { return torsion_order_; }
    bool saturated() const { return torsion_order_ == 1; }

    bool contains_vector(const std::vector<Int>& v) const { return in_row_span_hnf(basis_, v); }

    // Lattice containment: other ⊆ this.
    bool contains(const Sublattice& other) const {
        if (other.ambient_rank_ != ambient_rank_)
            throw std::invalid_argument("Sublattice::contains: ambient rank mismatch");
        if (other.rank() > rank()) return false;
        for (long i = 0; i < other.basis_.rows(); ++i)
            if (!contains_vector(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Sublattice& a, const Sublattice& b) {
        return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Sublattice& a, const Sublattice& b) { return !(a == b); }

    // (rank, canonical basis) order; deterministic everywhere.
    friend bool operator<(const Sublattice& a, const Sublattice& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.basis_ < b.basis_;
    }

    friend Sublattice sublattice_from_matrix(long ambient_rank, const IntMatrix& generators);

private:
    long ambient_rank_ = 0;
    IntMatrix basis_;  // canonical HNF, zero rows dropped
    Int torsion_order_ = 1;
};

inline Sublattice sublattice_from_matrix(long ambient_rank, const IntMatrix& generators) {
    if (ambient_rank < 0) throw std::invalid_argument("sublattice: negative ambient rank");
    if (generators.cols() != ambient_rank && generators.rows() != 0)
        throw std::invalid_argument("sublattice: generator length mismatch");
    Sublattice s;
    s.ambient_rank_ = ambient_rank;
    IntMatrix g = generators.rows() == 0 ? IntMatrix(0, ambient_rank) : generators;
    s.basis_ = hnf(g).h;
    s.torsion_order_ = 1;
    for (const Int& d : elementary_divisors(g)) s.torsion_order_ *= d;
    return s;
}

inline Sublattice sublattice_from_rows(long ambient_rank, const std::vector<std::vector<Int>>& rows) {
    for (const auto& r : rows)
        if (static_cast<long>(r.size()) != ambient_rank)
            throw std::invalid_argument("sublattice_from_rows: vector length != ambient rank");
    return sublattice_from_matrix(ambient_rank, IntMatrix::from_rows(rows, ambient_rank));
}

inline Sublattice zero_sublattice(long ambient_rank) {
    return sublattice_from_rows(ambient_rank, {});
}

// Smallest sublattice containing both, i.e. the span of the two bases.
inline Sublattice join(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("join: ambient rank mismatch");
    IntMatrix stacked = a.basis();
    for (long i = 0; i < b.basis().rows(); ++i) stacked.append_row(b.basis().row(i));
    return sublattice_from_matrix(a.ambient_rank(), stacked);
}

}  // namespace weyltoric
