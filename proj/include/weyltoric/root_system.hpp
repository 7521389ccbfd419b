#pragma once

// Positive roots of the type-A root system, in simple-root coordinates.
// With respect to the simple roots b_1,...,b_n, the positive root spanning
// positions i..j-1 is b_i + ... + b_{j-1}: a 0/1 vector whose ones are
// consecutive. That presentation is all the downstream lattice work needs.

#include <stdexcept>
#include <vector>

#include "weyltoric/numeric.hpp"

namespace weyltoric {

struct RootSystemA {
    long n = 0;                            // rank
    std::vector<std::vector<Int>> roots;   // n(n+1)/2 positive roots
};

inline RootSystemA positive_roots(long n) {
    if (n < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
    RootSystemA rs;
    rs.n = n;
    rs.roots.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (long i = 1; i <= n; ++i) {
        for (long j = i + 1; j <= n + 1; ++j) {
            std::vector<Int> v(n, 0);
            for (long k = i; k < j; ++k) v[k - 1] = 1;
            rs.roots.push_back(std::move(v));
        }
    }
    return rs;
}

}  // namespace weyltoric
