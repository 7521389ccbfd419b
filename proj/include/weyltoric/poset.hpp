#pragma once

// The intersection poset of a toric arrangement, realized as the poset of
// sublattices spanned by subsets of the defining vectors, ordered by
// inclusion. Built by frontier closure (repeated single-vector joins from the
// zero lattice) rather than enumerating all 2^m subsets: the closure visits
// each distinct span once, and for root systems the element count is a Bell
// number, far below 2^m.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "weyltoric/root_system.hpp"
#include "weyltoric/sublattice.hpp"

namespace weyltoric {

struct IntersectionPoset {
    long ambient_rank = 0;
    std::vector<Sublattice> elements;     // sorted by (rank, canonical basis)
    std::vector<std::vector<bool>> leq;   // leq[i][j]: elements[i] contained in elements[j]
    std::vector<Int> mobius_values;       // mu(bottom, element)

    long size() const { return static_cast<long>(elements.size()); }
    long rank_of(long i) const { return elements[i].rank(); }
    bool less(long i, long j) const { return i != j && leq[i][j]; }

    std::vector<std::pair<long, long>> covers() const {
        std::vector<std::pair<long, long>> cv;
        const long v = size();
        for (long i = 0; i < v; ++i) {
            for (long j = 0; j < v; ++j) {
                if (!less(i, j)) continue;
                bool has_mid = false;
                for (long k = 0; k < v && !has_mid; ++k)
                    if (less(i, k) && less(k, j)) has_mid = true;
                if (!has_mid) cv.emplace_back(i, j);
            }
        }
        return cv;
    }
};

inline IntersectionPoset build_poset_from_generators(long ambient_rank,
                                                     const std::vector<std::vector<Int>>& gens) {
    std::vector<Sublattice> gen_spans;
    gen_spans.reserve(gens.size());
    for (const auto& g : gens) gen_spans.push_back(sublattice_from_rows(ambient_rank, {g}));

    std::vector<Sublattice> elems{zero_sublattice(ambient_rank)};
    std::map<std::string, bool> seen{{elems[0].basis().key(), true}};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long idx : frontier) {
            for (const Sublattice& g : gen_spans) {
                Sublattice j = join(elems[idx], g);
                std::string key = j.basis().key();
                if (seen.emplace(key, true).second) {
                    elems.push_back(std::move(j));
                    next.push_back(static_cast<long>(elems.size()) - 1);
                }
            }
        }
        frontier = std::move(next);
    }

    std::sort(elems.begin(), elems.end());

    IntersectionPoset p;
    p.ambient_rank = ambient_rank;
    p.elements = std::move(elems);
    const long v = p.size();
    p.leq.assign(v, std::vector<bool>(v, false));
    for (long i = 0; i < v; ++i) {
        for (long j = 0; j < v; ++j) {
            if (p.elements[i].rank() > p.elements[j].rank()) continue;
            p.leq[i][j] = p.elements[j].contains(p.elements[i]);
        }
    }

    // mu(bottom, bottom) = 1, mu(bottom, Z) = -sum_{W < Z} mu(bottom, W);
    // memoized on demand so only the strict order, not the storage order,
    // matters.
    p.mobius_values.assign(v, 0);
    std::vector<char> done(v, 0);
    auto compute = [&](auto&& self, long z) -> const Int& {
        if (!done[z]) {
            Int acc = 0;
            for (long w = 0; w < v; ++w)
                if (p.less(w, z)) acc -= self(self, w);
            if (p.elements[z].rank() == 0) acc = 1;  // bottom
            p.mobius_values[z] = std::move(acc);
            done[z] = 1;
        }
        return p.mobius_values[z];
    };
    for (long z = 0; z < v; ++z) compute(compute, z);
    return p;
}

inline IntersectionPoset build_poset(const RootSystemA& rs) {
    return build_poset_from_generators(rs.n, rs.roots);
}

inline const std::vector<Int>& mobius(const IntersectionPoset& p) { return p.mobius_values; }

struct WhitneyNumbers {
    std::vector<long> sizes;      // sizes[r] = number of elements of rank r
    std::vector<Int> signed_sums; // (-1)^r * sum of mu over rank-r elements
};

inline WhitneyNumbers whitney_numbers(const IntersectionPoset& p) {
    long max_rank = 0;
    for (long i = 0; i < p.size(); ++i) max_rank = std::max(max_rank, p.rank_of(i));
    WhitneyNumbers w;
    w.sizes.assign(max_rank + 1, 0);
    w.signed_sums.assign(max_rank + 1, 0);
    for (long i = 0; i < p.size(); ++i) {
        long r = p.rank_of(i);
        w.sizes[r] += 1;
        w.signed_sums[r] += p.mobius_values[i];
    }
    for (long r = 0; r <= max_rank; ++r)
        if (r % 2 != 0) w.signed_sums[r] = -w.signed_sums[r];
    return w;
}

inline bool all_saturated(const IntersectionPoset& p) {
    for (const Sublattice& s : p.elements)
        if (!s.saturated()) return false;
    return true;
}

// All set partitions of {0,...,m-1} as restricted growth strings:
// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
inline std::vector<std::vector<int>> set_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(m, 0);
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == m) {
            out.push_back(a);
            return;
        }
        for (int b = 0; b <= mx + 1; ++b) {
            a[i] = b;
            self(self, i + 1, std::max(mx, b));
        }
    };
    if (m > 0) rec(rec, 1, 0);
    else out.push_back({});
    return out;
}

// The sublattice spanned by { e_i - e_j : i, j in a common block }, written in
// simple-root coordinates: items a < b in one block contribute the 0/1 vector
// with ones in positions a..b-1.
inline Sublattice partition_sublattice(long n, const std::vector<int>& rgs) {
    std::vector<std::vector<Int>> rows;
    const int m = static_cast<int>(rgs.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (rgs[i] != rgs[j]) continue;
            std::vector<Int> v(n, 0);
            for (int k = i; k < j; ++k) v[k] = 1;
            rows.push_back(std::move(v));
        }
    }
    return sublattice_from_rows(n, rows);
}

// Is the poset-of-spans order-isomorphic to the partition lattice of
// {1,...,n+1} under the block-difference map?
inline bool matches_partition_lattice(const IntersectionPoset& p, long n) {
    const int m = static_cast<int>(n) + 1;
    std::vector<std::vector<int>> parts = set_partitions(m);
    if (static_cast<long>(parts.size()) != p.size()) return false;

    std::map<std::string, long> index_of;
    for (long i = 0; i < p.size(); ++i) index_of[p.elements[i].basis().key()] = i;

    std::vector<long> img(parts.size());
    std::vector<char> hit(p.size(), 0);
    for (size_t k = 0; k < parts.size(); ++k) {
        Sublattice s = partition_sublattice(n, parts[k]);
        auto it = index_of.find(s.basis().key());
        if (it == index_of.end()) return false;
        img[k] = it->second;
        if (hit[it->second]) return false;  // not injective
        hit[it->second] = 1;
    }

    auto refines = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // a refines b: items sharing an a-block also share a b-block
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (a[i] == a[j] && b[i] != b[j]) return false;
        return true;
    };
    for (size_t x = 0; x < parts.size(); ++x)
        for (size_t y = 0; y < parts.size(); ++y)
            if (refines(parts[x], parts[y]) != p.leq[img[x]][img[y]]) return false;
    return true;
}

inline nlohmann::ordered_json poset_to_json(const IntersectionPoset& p) {
    nlohmann::ordered_json doc;
    doc["n"] = p.ambient_rank;
    doc["elements"] = nlohmann::ordered_json::array();
    for (long i = 0; i < p.size(); ++i) {
        const Sublattice& s = p.elements[i];
        nlohmann::ordered_json el;
        el["id"] = i;
        el["rank"] = s.rank();
        auto basis = nlohmann::ordered_json::array();
        for (long r = 0; r < s.basis().rows(); ++r) {
            auto row = nlohmann::ordered_json::array();
            for (long c = 0; c < s.basis().cols(); ++c) row.push_back(to_int64(s.basis().at(r, c)));
            basis.push_back(std::move(row));
        }
        el["basis"] = std::move(basis);
        el["mobius"] = to_int64(p.mobius_values[i]);
        el["torsion"] = to_int64(s.torsion_order());
        doc["elements"].push_back(std::move(el));
    }
    doc["covers"] = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : p.covers()) doc["covers"].push_back({lo, hi});
    return doc;
}

// Hasse diagram; nodes labeled "rank/mu".
inline std::string poset_to_dot(const IntersectionPoset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (long i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << p.rank_of(i) << "/" << p.mobius_values[i] << "\"];\n";
    for (const auto& [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string export_poset(const IntersectionPoset& p, const std::string& format) {
    if (format == "json") return poset_to_json(p).dump(2) + "\n";
    if (format == "dot") return poset_to_dot(p);
    throw std::invalid_argument("export_poset: unknown format '" + format + "'");
}

}  // namespace weyltoric
