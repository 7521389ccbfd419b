#pragma once

// Class functions on the symmetric group S_m (m = n+1), indexed by cycle
// type. The total-cohomology character is supported on the identity and the
// transpositions; it is compared against Reg + n*Ind and decomposed into
// irreducibles via the Murnaghan-Nakayama rule.

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "weyltoric/numeric.hpp"

namespace weyltoric {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

private:
    void validate() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
};

// All partitions of m, reverse-lexicographic: (m) first, (1^m) last.
inline std::vector<Partition> partitions(int m) {
    if (m < 1) throw std::invalid_argument("partitions: m must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

// Conjugacy class size m!/z_lambda, z_lambda = prod k^{m_k} m_k!.
inline Int class_size(const Partition& lam) {
    int m = lam.weight();
    std::map<int, int> mult;
    for (int p : lam.parts) ++mult[p];
    Int z = 1;
    for (const auto& [k, mk] : mult) {
        for (int i = 0; i < mk; ++i) z *= k;
        z *= factorial(mk);
    }
    return factorial(m) / z;
}

struct ClassFunction {
    int m = 0;                      // weight: a function on partitions of m
    std::vector<Rat> values;        // parallel to partitions(m)

    static ClassFunction zeros(int m) {
        ClassFunction f;
        f.m = m;
        f.values.assign(partitions(m).size(), Rat(0));
        return f;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.m == b.m && a.values == b.values;
    }

    ClassFunction& operator+=(const ClassFunction& o) {
        if (o.m != m) throw std::invalid_argument("ClassFunction: weight mismatch");
        for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }

    friend ClassFunction scale(ClassFunction f, const Rat& s) {
        for (Rat& v : f.values) v *= s;
        return f;
    }
};

namespace detail {

inline bool is_identity_type(const Partition& lam) {
    for (int p : lam.parts)
        if (p != 1) return false;
    return true;
}

inline bool is_transposition_type(const Partition& lam) {
    if (lam.parts.empty() || lam.parts[0] != 2) return false;
    for (size_t i = 1; i < lam.parts.size(); ++i)
        if (lam.parts[i] != 1) return false;
    return true;
}

}  // namespace detail

// Character of the total cohomology of the type-A toric complement:
// (n+2)!/2 at the identity, n! on transpositions, 0 elsewhere.
inline ClassFunction total_character(long n) {
    if (n < 1) throw std::invalid_argument("total_character: rank must be >= 1");
    int m = static_cast<int>(n) + 1;
    auto parts = partitions(m);
    ClassFunction f = ClassFunction::zeros(m);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (detail::is_identity_type(parts[i]))
            f.values[i] = Rat(factorial(n + 2) / 2);
        else if (detail::is_transposition_type(parts[i]))
            f.values[i] = Rat(factorial(n));
    }
    return f;
}

inline ClassFunction regular_character(long n) {
    if (n < 1) throw std::invalid_argument("regular_character: rank must be >= 1");
    int m = static_cast<int>(n) + 1;
    auto parts = partitions(m);
    ClassFunction f = ClassFunction::zeros(m);
    for (size_t i = 0; i < parts.size(); ++i)
        if (detail::is_identity_type(parts[i])) f.values[i] = Rat(factorial(m));
    return f;
}

// Character induced from the trivial representation of {id, s}, s a simple
// transposition: value on class K is |G|/(2|K|) * |K intersect {id, s}|.
inline ClassFunction induced_trivial_from_transposition(long n) {
    if (n < 1)
        throw std::invalid_argument("induced_trivial_from_transposition: rank must be >= 1");
    int m = static_cast<int>(n) + 1;
    auto parts = partitions(m);
    ClassFunction f = ClassFunction::zeros(m);
    Int order = factorial(m);
    for (size_t i = 0; i < parts.size(); ++i) {
        int hits = 0;
        if (detail::is_identity_type(parts[i])) ++hits;
        if (detail::is_transposition_type(parts[i])) ++hits;
        if (hits == 0) continue;
        f.values[i] = Rat(order * hits, 2 * class_size(parts[i]));
    }
    return f;
}

struct Theorem1ClassCheck {
    Partition cls;
    Rat total;
    Rat reg_plus_n_ind;
    bool ok = false;
};

struct Theorem1Report {
    long n = 0;
    std::vector<Theorem1ClassCheck> classes;
    bool pass = false;
    // The induced character's transposition value from the formula ((n-1)!),
    // next to the 2(n-1)! sometimes quoted for it; the two disagree for
    // every n >= 1, and only the formula value makes the identity close.
    Rat induced_transposition_formula;
    Rat induced_transposition_quoted;
    bool quoted_value_consistent = false;
};

inline Theorem1Report verify_theorem1(long n) {
    Theorem1Report rep;
    rep.n = n;
    auto parts = partitions(static_cast<int>(n) + 1);
    ClassFunction total = total_character(n);
    ClassFunction ind = induced_trivial_from_transposition(n);
    ClassFunction rhs = regular_character(n) + scale(ind, Rat(n));
    rep.pass = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        Theorem1ClassCheck c;
        c.cls = parts[i];
        c.total = total.values[i];
        c.reg_plus_n_ind = rhs.values[i];
        c.ok = (c.total == c.reg_plus_n_ind);
        if (!c.ok) rep.pass = false;
        rep.classes.push_back(std::move(c));
        if (detail::is_transposition_type(parts[i]))
            rep.induced_transposition_formula = ind.values[i];
    }
    rep.induced_transposition_quoted = Rat(2 * factorial(n - 1));
    rep.quoted_value_consistent =
        (rep.induced_transposition_quoted == rep.induced_transposition_formula);
    return rep;
}

// Murnaghan-Nakayama border-strip recursion on beta-sets (abacus model):
// removing a strip of length l moves one bead from b to b-l; the sign is
// (-1)^{number of beads passed over}.
namespace detail {

inline std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int k = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < k; ++i) {
        int part = beta[i] - (k - 1 - i);
        if (part > 0) shape.push_back(part);
    }
    return shape;
}

inline Int mn_recurse(const std::vector<int>& shape, const std::vector<int>& mu, size_t pos,
                      std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
    if (shape.empty()) return 1;
    auto key = std::make_pair(shape, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int l = mu[pos];
    const int k = static_cast<int>(shape.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = shape[i] + (k - 1 - i);

    Int total = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int passed = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++passed;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        Int sub = mn_recurse(partition_from_beta(std::move(nb)), mu, pos + 1, memo);
        total += (passed % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// chi^lambda(mu) for partitions of equal weight.
inline Int irreducible_character(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("irreducible_character: weight mismatch");
    std::map<std::pair<std::vector<int>, size_t>, Int> memo;
    return detail::mn_recurse(lam.parts, mu.parts, 0, memo);
}

struct Decomposition {
    std::vector<Partition> irreps;   // partitions(m) order
    std::vector<Rat> multiplicities; // <f, chi^lambda>, exact
};

inline Decomposition decompose(const ClassFunction& f) {
    Decomposition d;
    d.irreps = partitions(f.m);
    const auto& classes = d.irreps;  // classes and irreps share the index set
    Int order = factorial(f.m);
    for (const Partition& lam : d.irreps) {
        Rat acc = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            acc += Rat(class_size(classes[i])) * f.values[i] * Rat(irreducible_character(lam, classes[i]));
        d.multiplicities.push_back(acc / Rat(order));
    }
    return d;
}

namespace detail {

inline nlohmann::ordered_json rat_to_json(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return to_int64(Int(boost::multiprecision::numerator(r)));
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace detail

inline nlohmann::ordered_json character_report_json(long n) {
    int m = static_cast<int>(n) + 1;
    auto parts = partitions(m);
    ClassFunction total = total_character(n);
    ClassFunction reg = regular_character(n);
    ClassFunction ind = induced_trivial_from_transposition(n);
    Theorem1Report t1 = verify_theorem1(n);
    Decomposition dec = decompose(total);

    nlohmann::ordered_json doc;
    doc["n"] = n;
    auto classes = nlohmann::ordered_json::array();
    for (const Partition& p : parts) classes.push_back(p.str());
    doc["classes"] = std::move(classes);
    auto emit = [&](const ClassFunction& f) {
        auto arr = nlohmann::ordered_json::array();
        for (const Rat& v : f.values) arr.push_back(detail::rat_to_json(v));
        return arr;
    };
    doc["total"] = emit(total);
    doc["regular"] = emit(reg);
    doc["induced"] = emit(ind);
    doc["theorem1"] = t1.pass;
    nlohmann::ordered_json mult;
    for (size_t i = 0; i < dec.irreps.size(); ++i)
        mult[dec.irreps[i].str()] = detail::rat_to_json(dec.multiplicities[i]);
    doc["irreducible_multiplicities"] = std::move(mult);
    return doc;
}

}  // namespace weyltoric
