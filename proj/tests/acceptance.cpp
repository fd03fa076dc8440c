// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. All comparisons are exact rational equality.

#include "bchresum/diagrams.hpp"
#include "bchresum/kernel.hpp"
#include "bchresum/oracle.hpp"
#include "bchresum/resummation.hpp"

#include "dot_check.hpp"
#include "random_gen.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace bchresum;

namespace {

// Adjudicated prefactor of pi_3 in front of the conjugated integral of
// (ad psi0)^2 u. The printed k^3/24 fails the oracle; 1/12 = k_2 passes.
const Scalar kPiThreePrefactor(1, 12);
const Scalar kPrintedPiThreePrefactor(1, 24);

constexpr int kRandomCases = 100;

int run_cli(const std::string &args)
{
    std::string cmd = std::string(BCHRESUM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Outcome {
    bool pass;
    std::string detail;
};

TSeries U(int d) { return TSeries::monomial(0, NCPoly::generator(Alphabet::UW, 0, d)); }

Outcome oracle_equivalence()
{
    auto start = std::chrono::steady_clock::now();
    std::ostringstream failures;
    for (int d = 2; d <= 8; ++d) {
        int code = run_cli("verify --max-order " + std::to_string(d) + " --degree " + std::to_string(d));
        if (code != 0)
            failures << " D=" << d << " exit " << code;
        if (!verify(d, d).matched)
            failures << " D=" << d << " mismatch";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "verify D=2..8 exact, " << std::fixed << std::setprecision(2) << secs << " s" << failures.str();
    return {failures.str().empty() && secs < 120.0, detail.str()};
}

Outcome paper_fixtures()
{
    const int d = 8;
    auto g = psi_via_descendants(7, d);
    const auto p = psi0(d);
    bool pi1 = g.part(1) == p;
    bool even = g.part(2).is_zero() && g.part(4).is_zero();

    std::vector<TSeries> pp{p, p};
    std::vector<TSeries> nested{vertex(2, pp), p};
    std::vector<TSeries> four{p, p, p, p};
    bool pi5 = g.part(5) == vertex(2, nested) * Scalar(1, 2) + vertex(4, four) * Scalar(1, 24);

    std::set<std::string> three;
    for (const auto &t : descendants(3, 10))
        three.insert(t.to_string());
    bool desc = three == std::set<std::string>{"<<1,2>_2,3>_2", "<<1,3>_2,2>_2", "<1,<2,3>_2>_2"};

    std::ostringstream detail;
    detail << std::boolalpha << "pi1=psi0 " << pi1 << ", pi2=pi4=0 " << even << ", pi5 weights 1/2,1/24 " << pi5
           << ", 3 descendants of (v1,v2,v3) " << desc;
    return {pi1 && even && pi5 && desc, detail.str()};
}

Outcome kernel_fixtures()
{
    bool values = bernoulli(2) == Scalar(1, 6) && bernoulli(4) == Scalar(-1, 30) && bernoulli(6) == Scalar(1, 42);
    bool series = true;
    for (int p = 1; p <= 8; ++p)
        series = series && kernel_series_check(p);
    std::ostringstream detail;
    detail << std::boolalpha << "B2=1/6 B4=-1/30 B6=1/42 " << values << ", kernel series P<=8 " << series;
    return {values && series, detail.str()};
}

Outcome construction_cross_check()
{
    int agreed = 0, total = 0;
    for (int n = 1; n <= 7; ++n)
        for (int d = 1; d <= 8; ++d) {
            ++total;
            if (psi_via_descendants(n, d) == psi_via_picard(n, d))
                ++agreed;
        }

    const int d = 6;
    auto g = psi_via_descendants(d, d);
    const auto p = psi0(d);
    auto integral = conjugated_integral(tseries_commutator(p, tseries_commutator(p, U(d))));
    bool fixture = g.part(3) == integral * kPiThreePrefactor;
    auto q = q_series(g);
    bool adjudicated_matches = compare_with_oracle(q, d, d).matched;
    q[2] = tseries_eval_t1(integral * kPrintedPiThreePrefactor);
    bool printed_fails = !compare_with_oracle(q, d, d).matched;

    std::ostringstream detail;
    detail << std::boolalpha << agreed << "/" << total << " (N<=7, D<=8) agree; pi3 prefactor " << kPiThreePrefactor.to_short_string()
           << " matches oracle " << adjudicated_matches << ", printed "
           << kPrintedPiThreePrefactor.to_short_string() << " rejected " << printed_fails;
    return {agreed == total && fixture && adjudicated_matches && printed_fails, detail.str()};
}

Outcome ode_residual_check()
{
    int code = run_cli("residual --max-order 5 --degree 6");
    bool direct = ode_residual(psi_via_descendants(5, 6)).vanishes();
    return {code == 0 && direct, "residual --max-order 5 --degree 6 exit " + std::to_string(code)};
}

Outcome structural_invariants()
{
    auto start = std::chrono::steady_clock::now();
    std::map<std::string, int> passed;
    std::mt19937 rng(2024);

    for (int i = 0; i < kRandomCases; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const int d = std::uniform_int_distribution<int>(1, 7)(rng);
        auto g = psi_via_descendants(n, d);
        bool t_hom = true, u_hom = true, parity = true;
        NCPoly collapsed(Alphabet::UW, d);
        for (int m = 1; m <= n; ++m) {
            const auto &pi = g.part(m);
            t_hom = t_hom && is_t_homogeneous(pi);
            for (const auto &[power, c] : pi.coeffs())
                for (const auto &[word, x] : c.terms())
                    u_hom = u_hom && word.count(0) == m;
            if (m % 2 == 0)
                parity = parity && pi.is_zero();
            collapsed += letter_degree_part(q_m(g, m), 1, 0);
        }
        passed["t-homogeneity"] += t_hom;
        passed["u-homogeneity"] += u_hom;
        passed["parity"] += parity;
        passed["w=0 collapse"] += collapsed == NCPoly::generator(Alphabet::UW, 0, d);
    }

    RandomAlgebra series(7, Alphabet::UW, 5);
    for (int i = 0; i < kRandomCases; ++i) {
        auto a = series.homogeneous_series(3), a2 = series.homogeneous_series(3), b = series.homogeneous_series(3);
        std::vector<TSeries> ab{a, b}, ba{b, a}, a2b{a2, b}, mixed{a + a2 * Scalar(3, 2), b};
        passed["vertex symmetry"] += vertex(2, ab) == vertex(2, ba);
        passed["vertex multilinearity"] += vertex(2, mixed) == vertex(2, ab) + vertex(2, a2b) * Scalar(3, 2);
    }

    for (int i = 0; i < kRandomCases; ++i) {
        RandomAlgebra alg(100 + static_cast<std::uint64_t>(i), Alphabet::XY, 1 + i % 8);
        auto a = alg.poly(3);
        auto one_plus_r = NCPoly::unit(Alphabet::XY, alg.degree) + alg.poly(3);
        passed["exp/log roundtrip"] +=
            log_truncated(exp_truncated(a)) == a && exp_truncated(log_truncated(one_plus_r)) == one_plus_r;
        RandomAlgebra jac(500 + static_cast<std::uint64_t>(i), Alphabet::UW, 7);
        auto x = jac.poly(3), y = jac.poly(3), z = jac.poly(3);
        passed["Jacobi"] += (commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                             commutator(z, commutator(x, y)))
                                .is_zero();
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = true;
    std::ostringstream detail;
    for (const auto &[name, count] : passed) {
        ok = ok && count == kRandomCases;
        detail << name << " " << count << "/" << kRandomCases << "; ";
    }
    detail << std::fixed << std::setprecision(2) << secs << " s";
    return {ok && secs < 60.0, detail.str()};
}

Outcome diagram_emitter()
{
    auto doc = pi_diagrams(5);
    bool shapes = doc.entries.size() == 2 && doc.entries[0].weight == Scalar(1, 2) &&
                  doc.entries[1].weight == Scalar(1, 24);
    bool dot_ok = true;
    for (const auto &e : doc.entries) {
        auto s = summarize_dot(tree_to_dot(e.tree, e.weight));
        const int n = e.leaves + e.vertices;
        dot_ok = dot_ok && s.well_formed && s.diagram_nodes() == n && s.edges == n && s.terminal_nodes == 1;
    }
    const int d = 8;
    bool resum = evaluate_diagrams(doc, psi0(d)) == psi_via_descendants(5, d).part(5);
    std::ostringstream detail;
    detail << std::boolalpha << doc.entries.size() << " shapes with weights";
    for (const auto &e : doc.entries)
        detail << ' ' << e.weight.to_short_string();
    detail << ", DOT counts (r+s, r+s) " << dot_ok << ", re-evaluation equals pi5 " << resum;
    return {shapes && dot_ok && resum, detail.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 worked-example fixtures", paper_fixtures},
        {"3 kernel fixtures", kernel_fixtures},
        {"4 construction cross-check", construction_cross_check},
        {"5 ODE residual", ode_residual_check},
        {"6 structural invariants", structural_invariants},
        {"7 diagram emitter", diagram_emitter},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
