// Acceptance suite: one line per criterion, exit code = number of failures.
// Everything is exact arithmetic; the only tolerance anywhere is the wall
// clock budget on the four-route sweep.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "weyltoric/weyltoric.hpp"

using namespace weyltoric;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, bool ok, const std::string& title, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

unsigned worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

int main() {
    constexpr long kMaxRank = 6;
    constexpr long kCharacterRank = 7;
    constexpr double kRuntimeBudgetSeconds = 300.0;

    // ---- 1. four-way Poincare agreement, n = 1..6, within the time budget
    // ---- 2. every route evaluates to (n+2)!/2 at t = 1
    {
        auto t0 = Clock::now();
        bool agree = true, euler = true;
        std::string mismatch;
        for (long n = 1; n <= kMaxRank; ++n) {
            VerifyAllReport rep = verify_all(n, worker_threads());
            bool four = rep.closed_form == rep.macmeikan && rep.closed_form == rep.point_count &&
                        rep.closed_form == rep.tutte;
            if (!four) {
                agree = false;
                mismatch = "n=" + std::to_string(n);
            }
            Int want = factorial(n + 2) / 2;
            for (const UniPoly* p :
                 {&rep.closed_form, &rep.macmeikan, &rep.point_count, &rep.tutte})
                if (p->eval(1) != want) euler = false;
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream detail;
        detail << "n=1.." << kMaxRank << ", " << elapsed << "s of " << kRuntimeBudgetSeconds
               << "s budget";
        criterion(1, agree && elapsed < kRuntimeBudgetSeconds,
                  "four-way Poincare agreement, exact", detail.str() + mismatch);
        criterion(2, euler, "Euler characteristic P(1) = (n+2)!/2 on every route",
                  "n=1.." + std::to_string(kMaxRank));
    }

    // ---- 3. class-function identity total = Reg + n*Ind, n = 1..7,
    //         with the 2(n-1)! transposition value flagged as inconsistent
    {
        bool ok = true, flagged = true;
        for (long n = 1; n <= kCharacterRank; ++n) {
            Theorem1Report rep = verify_theorem1(n);
            if (!rep.pass) ok = false;
            if (rep.quoted_value_consistent) flagged = false;
            if (rep.induced_transposition_formula != Rat(factorial(n - 1))) ok = false;
            if (rep.induced_transposition_quoted != Rat(2 * factorial(n - 1))) ok = false;
        }
        criterion(3, ok && flagged,
                  "total character = Reg + n*Ind on every class; 2(n-1)! variant flagged",
                  "n=1.." + std::to_string(kCharacterRank));
    }

    // ---- 4. decomposition into irreducibles: nonnegative integers summing
    //         (weighted by dimension) to (n+2)!/2
    {
        bool ok = true;
        for (long n = 1; n <= kMaxRank; ++n) {
            Decomposition dec = decompose(total_character(n));
            std::vector<int> ones(static_cast<size_t>(n) + 1, 1);
            Partition id_class(ones);
            Rat dim_sum = 0;
            for (size_t i = 0; i < dec.irreps.size(); ++i) {
                const Rat& mult = dec.multiplicities[i];
                if (boost::multiprecision::denominator(mult) != 1 || mult < 0) ok = false;
                dim_sum += mult * Rat(irreducible_character(dec.irreps[i], id_class));
            }
            if (dim_sum != Rat(factorial(n + 2) / 2)) ok = false;
        }
        criterion(4, ok, "irreducible multiplicities are nonnegative integers, dimensions sum",
                  "n=1.." + std::to_string(kMaxRank));
    }

    // ---- 5. poset structure: Bell count, Stirling level sizes, top Mobius,
    //         saturation, Whitney sums
    {
        bool ok = true;
        auto bell = oracles::bell_numbers(static_cast<int>(kMaxRank) + 1);
        for (long n = 1; n <= kMaxRank; ++n) {
            IntersectionPoset p = build_poset(positive_roots(n));
            if (Int(p.size()) != bell[n + 1]) ok = false;
            WhitneyNumbers w = whitney_numbers(p);
            if (static_cast<long>(w.sizes.size()) != n + 1) ok = false;
            for (long r = 0; r <= n && ok; ++r) {
                if (Int(w.sizes[r]) !=
                    oracles::stirling2(static_cast<int>(n) + 1, static_cast<int>(n + 1 - r)))
                    ok = false;
                if (w.signed_sums[r] != oracles::elementary_symmetric_subsets(n, r)) ok = false;
            }
            Int top = p.mobius_values[p.size() - 1];
            Int expect_top = factorial(n);
            if (n % 2 != 0) expect_top = -expect_top;
            if (top != expect_top) ok = false;
            if (!all_saturated(p)) ok = false;
            for (const Sublattice& s : p.elements)
                if (s.torsion_order() != 1) ok = false;
        }
        criterion(5, ok, "poset: Bell size, Stirling levels, top Mobius, saturation, Whitney",
                  "n=1.." + std::to_string(kMaxRank));
    }

    // ---- 6. oracle equivalence: subset-span poset (n <= 4) and F_q
    //         enumeration (n <= 3, q in {5,7,11})
    {
        bool ok = true;
        for (long n = 1; n <= 4; ++n) {
            RootSystemA rs = positive_roots(n);
            IntersectionPoset p = build_poset(rs);
            std::set<std::string> brute;
            const size_t m = rs.roots.size();
            for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
                std::vector<std::vector<Int>> rows;
                for (size_t i = 0; i < m; ++i)
                    if (mask & (size_t{1} << i)) rows.push_back(rs.roots[i]);
                brute.insert(sublattice_from_rows(n, rows).basis().key());
            }
            if (brute.size() != static_cast<size_t>(p.size())) ok = false;
            for (const Sublattice& s : p.elements)
                if (brute.count(s.basis().key()) != 1) ok = false;
        }
        for (long n = 1; n <= 3 && ok; ++n) {
            for (long q : {5, 7, 11}) {
                Int closed = 1;
                for (long i = 1; i <= n; ++i) closed *= (q - (i + 1));
                if (brute_force_point_count(n, q) != closed) ok = false;
            }
        }
        criterion(6, ok, "frontier poset = subset-span oracle (n<=4); F_q count = product (n<=3)");
    }

    // ---- 7. property suites: consecutive-ones pivots on >= 10^4 samples,
    //         HNF idempotence + span certificates, character column
    //         orthogonality through m = 7
    {
        bool ok = true;
        std::mt19937_64 rng(0x7a2c3e11);

        constexpr int kConsecutiveSamples = 10000;
        std::uniform_int_distribution<long> rows_d(1, 6);
        int tested = 0;
        while (tested < kConsecutiveSamples && ok) {
            long rows = rows_d(rng);
            std::uniform_int_distribution<long> cols_d(rows, 8);
            IntMatrix m = oracles::random_consecutive_ones(rng, rows, cols_d(rng));
            if (hnf(m).rank != rows) continue;
            ++tested;
            if (!consecutive_ones_pivots_unit(m)) ok = false;
            for (const Int& d : elementary_divisors(m))
                if (d != 1) ok = false;
        }

        constexpr int kHnfSamples = 2000;
        std::uniform_int_distribution<long> hr(1, 6), hc(1, 6);
        for (int i = 0; i < kHnfSamples && ok; ++i) {
            IntMatrix m = oracles::random_matrix(rng, hr(rng), hc(rng), -9, 9);
            HnfResult r = hnf(m);
            if (!oracles::is_canonical_hnf(r.h)) ok = false;
            if (hnf(r.h).h != r.h) ok = false;
            HnfTransform cert = hnf_with_transform(m);
            if (cert.h != oracles::mat_mul(cert.u, m)) ok = false;
            if (abs(det(cert.u)) != 1) ok = false;
            for (long row = 0; row < m.rows(); ++row)
                if (!in_row_span_hnf(r.h, m.row(row))) ok = false;
        }

        for (int m = 1; m <= 7 && ok; ++m) {
            auto parts = partitions(m);
            for (size_t a = 0; a < parts.size() && ok; ++a) {
                for (size_t b = a; b < parts.size() && ok; ++b) {
                    Int dot = 0;
                    for (const Partition& lam : parts)
                        dot += irreducible_character(lam, parts[a]) *
                               irreducible_character(lam, parts[b]);
                    Int expect = a == b ? factorial(m) / class_size(parts[a]) : Int(0);
                    if (dot != expect) ok = false;
                }
            }
        }
        criterion(7, ok,
                  "property suites: consecutive-ones pivots (10^4), HNF certificates, "
                  "column orthogonality (m<=7)");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures;
}
