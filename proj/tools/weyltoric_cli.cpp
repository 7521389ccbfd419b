// Command-line front end: Poincare polynomials by four independent routes,
// Weyl-group character tables, intersection-poset exports, and the combined
// verification sweep. Exit codes: 0 success, 1 usage/input error,
// 2 verification failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "weyltoric/weyltoric.hpp"

namespace {

using namespace weyltoric;

constexpr long kClosedPointsCap = 8;  // cheap product formulas
constexpr long kPosetTutteCap = 6;    // the 2^{n(n+1)/2} subset sum
constexpr long kCharacterCap = 7;

unsigned effective_threads(unsigned requested) {
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    return requested;
}

bool check_cap(long n, long cap, bool unsafe, const std::string& what,
               const std::string& flag = "--n") {
    if (n < 1) {
        std::cerr << "error: " << flag << " must be at least 1\n";
        return false;
    }
    if (n > cap && !unsafe) {
        std::cerr << "error: " << flag << "=" << n << " exceeds the cap of " << cap << " for "
                  << what << "; pass --unsafe-n to override\n";
        return false;
    }
    return true;
}

int run_poincare(long n, const std::string& method, const std::string& format, bool unsafe,
                 unsigned threads) {
    long cap = (method == "closed" || method == "points") ? kClosedPointsCap : kPosetTutteCap;
    if (!check_cap(n, cap, unsafe, "method '" + method + "'")) return 1;

    if (method == "all") {
        VerifyAllReport rep = verify_all(n, threads);
        if (format == "json") {
            std::cout << verify_all_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "n = " << rep.n << "\n"
                      << "closed_form : " << rep.closed_form.str() << "\n"
                      << "macmeikan   : " << rep.macmeikan.str() << "\n"
                      << "point_count : " << rep.point_count.str() << "\n"
                      << "tutte       : " << rep.tutte.str() << "\n"
                      << "P(1)        : " << rep.euler_at_1 << " (expected (n+2)!/2 = "
                      << factorial(n + 2) / 2 << ")\n"
                      << "agreement   : " << (rep.agree ? "yes" : "NO") << "\n";
        }
        return rep.agree ? 0 : 2;
    }

    UniPoly p;
    if (method == "closed") {
        p = poincare_closed_form(n);
    } else if (method == "macmeikan") {
        p = poincare_macmeikan(build_poset(positive_roots(n)));
    } else if (method == "points") {
        p = reverse_transform(point_count_poly(n), n);
    } else {  // tutte
        p = tutte_eval_poincare(arithmetic_tutte(positive_roots(n), threads), n);
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = n;
        doc["method"] = method;
        doc["polynomial"] = p.str();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
    return 0;
}

int run_character(long n, const std::string& format, bool unsafe) {
    if (!check_cap(n, kCharacterCap, unsafe, "character tables")) return 1;

    Theorem1Report t1 = verify_theorem1(n);
    if (format == "json") {
        std::cout << character_report_json(n).dump(2) << "\n";
        return t1.pass ? 0 : 2;
    }

    auto parts = partitions(static_cast<int>(n) + 1);
    ClassFunction total = total_character(n);
    ClassFunction reg = regular_character(n);
    ClassFunction ind = induced_trivial_from_transposition(n);
    Decomposition dec = decompose(total);

    size_t width = 5;
    for (const Partition& p : parts) width = std::max(width, p.str().size());
    std::cout << "classes of S_" << (n + 1) << " by cycle type\n";
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "class"
              << std::setw(8) << "size" << std::setw(12) << "total" << std::setw(12) << "regular"
              << std::setw(12) << "induced" << "reg+n*ind\n";
    for (size_t i = 0; i < parts.size(); ++i) {
        Rat rhs = reg.values[i] + Rat(n) * ind.values[i];
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << parts[i].str()
                  << std::setw(8) << class_size(parts[i]).str() << std::setw(12)
                  << total.values[i] << std::setw(12) << reg.values[i] << std::setw(12)
                  << ind.values[i] << rhs << "\n";
    }
    std::cout << "theorem1 (total = regular + n*induced): " << (t1.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "induced on transpositions: formula gives " << t1.induced_transposition_formula
              << "; the 2(n-1)! = " << t1.induced_transposition_quoted
              << " sometimes quoted is "
              << (t1.quoted_value_consistent ? "consistent" : "inconsistent")
              << " with the identity (formula value used)\n";
    std::cout << "irreducible multiplicities:";
    for (size_t i = 0; i < dec.irreps.size(); ++i)
        std::cout << " [" << dec.irreps[i].str() << "]:" << dec.multiplicities[i];
    std::cout << "\n";
    return t1.pass ? 0 : 2;
}

int run_poset(long n, const std::string& format, const std::string& out, bool unsafe) {
    if (!check_cap(n, kPosetTutteCap, unsafe, "poset construction")) return 1;

    IntersectionPoset p = build_poset(positive_roots(n));
    std::string doc = export_poset(p, format);
    std::string summary = std::to_string(p.size()) + " elements, " +
                          (all_saturated(p) ? "all saturated" : "not all saturated");
    if (out == "-") {
        std::cout << doc;
        std::cerr << summary << "\n";
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f || !(f << doc) || !f.flush()) {
            std::cerr << "error: cannot write '" << out << "'\n";
            return 1;
        }
        std::cout << summary << "\n";
    }
    return 0;
}

int run_verify(long max_n, bool unsafe, unsigned threads) {
    if (!check_cap(max_n, kPosetTutteCap, unsafe, "verify", "--max-n")) return 1;

    long failures = 0, checks = 0;
    auto report = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    };

    for (long n = 1; n <= max_n; ++n) {
        VerifyAllReport rep = verify_all(n, threads);
        bool four_way = rep.closed_form == rep.macmeikan && rep.closed_form == rep.point_count &&
                        rep.closed_form == rep.tutte;
        report(four_way, "n=" + std::to_string(n) +
                             " poincare four-way agreement: " + rep.closed_form.str());
        report(rep.euler_at_1 == factorial(n + 2) / 2,
               "n=" + std::to_string(n) + " euler characteristic P(1) = " + rep.euler_at_1.str());
        Theorem1Report t1 = verify_theorem1(n);
        report(t1.pass, "n=" + std::to_string(n) + " total character = regular + n*induced on " +
                            std::to_string(t1.classes.size()) + " classes");
    }
    for (long n = 1; n <= std::min<long>(3, max_n); ++n) {
        UniPoly p = point_count_poly(n);
        for (long q : {5, 7, 11}) {
            Int bf = brute_force_point_count(n, q);
            report(bf == p.eval(q), "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                        " point-count enumeration = " + bf.str());
        }
    }
    std::cout << "verify: " << (checks - failures) << "/" << checks << " checks passed\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the toric arrangement complement of a type-A root system"};
    app.require_subcommand(1);

    long n = 1;
    long max_n = 6;
    std::string method = "closed";
    std::string format = "text";
    std::string poset_format = "json";
    std::string out = "-";
    bool unsafe = false;
    unsigned threads = 1;

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement");
    poincare->add_option("--n", n, "rank of the root system")->required();
    poincare->add_option("--method", method, "closed|macmeikan|points|tutte|all")
        ->check(CLI::IsMember({"closed", "macmeikan", "points", "tutte", "all"}));
    poincare->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    poincare->add_flag("--unsafe-n", unsafe, "lift the built-in cap on n");
    poincare->add_option("--threads", threads, "worker threads for the subset enumeration (0 = auto)")
        ->envname("WEYL_TORIC_THREADS");

    auto* character = app.add_subcommand("character", "Weyl-group class functions and Theorem-style identity checks");
    character->add_option("--n", n, "rank of the root system")->required();
    character->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    character->add_flag("--unsafe-n", unsafe, "lift the built-in cap on n");

    auto* poset = app.add_subcommand("poset", "intersection poset export");
    poset->add_option("--n", n, "rank of the root system")->required();
    poset->add_option("--format", poset_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    poset->add_option("-o,--output", out, "output path ('-' for stdout)");
    poset->add_flag("--unsafe-n", unsafe, "lift the built-in cap on n");

    auto* verify = app.add_subcommand("verify", "run every cross-check up to a rank bound");
    verify->add_option("--max-n", max_n, "largest rank to verify");
    verify->add_flag("--unsafe-n", unsafe, "lift the built-in cap on max-n");
    verify->add_option("--threads", threads, "worker threads for the subset enumeration (0 = auto)")
        ->envname("WEYL_TORIC_THREADS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(poincare))
            return run_poincare(n, method, format, unsafe, effective_threads(threads));
        if (app.got_subcommand(character)) return run_character(n, format, unsafe);
        if (app.got_subcommand(poset)) return run_poset(n, poset_format, out, unsafe);
        if (app.got_subcommand(verify))
            return run_verify(max_n, unsafe, effective_threads(threads));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
