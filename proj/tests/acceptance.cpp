// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include "nefkit/chern.hpp"
#include "nefkit/cones.hpp"
#include "nefkit/diagonal.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace nefkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void for_each_degree_list(long max_degree, std::size_t max_len,
                          const std::function<void(const std::vector<long>&)>& fn)
{
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long from) {
        fn(cur);
        if (cur.size() == max_len)
            return;
        for (long d = from; d <= max_degree; ++d) {
            cur.push_back(d);
            rec(d);
            cur.pop_back();
        }
    };
    rec(2);
}

Outcome oracle_equivalence()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t count = 0;
    for_each_degree_list(6, 4, [&](const std::vector<long>& d) {
        for (long n = 1; n <= 15; ++n) {
            const CIType ci(d, n);
            const ExactInt f = euler_ci_formula(ci);
            o.expect(euler_ci_series(ci) == f && euler_ci_recursive(ci) == f,
                     "routes disagree at " + ci.to_string());
            ++count;
        }
    });
    const double s = seconds_since(t0);
    o.expect(s < 10.0, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.note = std::to_string(count) + " types, " + std::to_string(s) + " s";
    return o;
}

Outcome reference_values()
{
    Outcome o;
    o.expect(euler_ci_formula(CIType({3}, 2)) == 9, "cubic surface Euler number");
    for (long k = 0; k <= 5; ++k) {
        const CIType ci({2, 2}, 2 * k + 1);
        o.expect(euler_ci_formula(ci) == 0, "(2,2) odd Euler number at " + ci.to_string());
        o.expect(betti_ci(ci).betti[static_cast<std::size_t>(2 * k + 1)] == 2 * k + 2,
                 "(2,2) middle Betti at " + ci.to_string());
    }
    o.expect(quadrics_b(1, 3) == 1, "b(1,3)");
    o.expect(quadrics_b(4, 3) == 6, "b(4,3)");
    for (long n = 2; n <= 12; n += 2)
        o.expect(quadrics_b(n, 2) == n / 2 + 1, "b(" + std::to_string(n) + ",2)");
    return o;
}

Outcome sign_bound_scans()
{
    Outcome o;
    const auto t0 = Clock::now();
    try {
        const auto report = scan_ci(ScanOptions{12, 6, 5, 8});
        for (const char* law : {"hypersurface sign", "complete intersection sign",
                                "even-dimensional bound", "quadric positivity", "quadric bound"})
            o.expect(report.law_checks.count(law) && report.law_checks.at(law) > 0,
                     std::string("law never exercised: ") + law);
        if (o.ok) {
            std::size_t total = 0;
            for (const auto& [law, n] : report.law_checks)
                total += n;
            o.note = std::to_string(total) + " checks, 0 violations";
        }
    } catch (const ScanViolation& v) {
        o.expect(false, v.what());
    }
    const double s = seconds_since(t0);
    o.expect(s < 30.0, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.note += ", " + std::to_string(s) + " s";
    return o;
}

Outcome weighted_closed_forms()
{
    Outcome o;
    for (long n = 3; n <= 15; ++n) {
        std::vector<long> w1{3, 2};
        w1.insert(w1.end(), static_cast<std::size_t>(n), 1);
        std::vector<long> w2{2};
        w2.insert(w2.end(), static_cast<std::size_t>(n + 1), 1);
        const ExactRational a = euler_weighted(WeightedHypersurface(w1, 6));
        const ExactRational b = euler_weighted(WeightedHypersurface(w2, 4));
        const ExactInt ca = (3 * n + 2 + pow(ExactInt(-5), static_cast<unsigned>(n))) / 3;
        const ExactInt cb = (4 * n + 5 - pow(ExactInt(-3), static_cast<unsigned>(n + 1))) / 4;
        const std::string at = " at n = " + std::to_string(n);
        o.expect(a == ExactRational(ca) && euler_delpezzo_closed(n, 1) == ca, "degree 1" + at);
        o.expect(b == ExactRational(cb) && euler_delpezzo_closed(n, 2) == cb, "degree 2" + at);
        if (n % 2 == 1) {
            o.expect(ca < 0 && cb < 0, "sign" + at);
        } else if (n >= 4) {
            o.expect(ca > pow(ExactInt(2), static_cast<unsigned>(n)) * (n + 1), "bound 1" + at);
            o.expect(cb > 2 * (n + 1), "bound 2" + at);
        }
    }
    return o;
}

Outcome golden_lists()
{
    Outcome o;
    for_each_degree_list(6, 5, [&](const std::vector<long>& d) {
        for (long n = 2; n <= 12; ++n) {
            const CIType ci(d, n);
            const auto v = verdict_ci(ci);
            const bool expected = ci.is_projective_space() || ci.is_quadric()
                                  || (ci.is_two_quadrics() && n % 2 == 1);
            o.expect((v.status != Status::NotNef) == expected, "verdict_ci at " + ci.to_string());
            o.expect(nef_big_filter_ci(ci)
                         == (ci.is_projective_space() || (ci.is_quadric() && n % 2 == 1)),
                     "nef-big filter at " + ci.to_string());
            if (nef_big_filter_ci(ci))
                o.expect(v.status == Status::Nef, "nef-big but not nef at " + ci.to_string());
        }
    });

    std::set<std::pair<long, int>> nef, nef_big;
    for (int degree = 1; degree <= 7; ++degree)
        for (long n = 3; n <= 15; ++n) {
            if (!delpezzo_exists(n, degree))
                continue;
            auto variants = delpezzo_variants(n, degree);
            if (variants.empty())
                variants.push_back("");
            for (const auto& var : variants) {
                const auto v = var.empty() ? verdict_delpezzo(n, degree)
                                           : verdict_delpezzo(n, degree, var);
                if (v.status == Status::Nef)
                    nef.insert({n, degree});
                o.expect((v.status == Status::Open) == (degree == 4 && n % 2 == 1),
                         "unexpected open del Pezzo verdict");
            }
            if (nef_big_filter_delpezzo(n, degree))
                nef_big.insert({n, degree});
        }
    o.expect(nef == std::set<std::pair<long, int>>{{3, 5}, {6, 5}, {3, 6}, {4, 6}},
             "del Pezzo nef set");
    o.expect(nef_big == std::set<std::pair<long, int>>{{3, 5}}, "del Pezzo nef-big set");
    return o;
}

std::vector<std::string> labels(const CodimCones& c, const RationalCone& cone)
{
    std::vector<std::string> out;
    for (const auto& g : cone.generators)
        out.push_back(format_combination(c.basis, g));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome cone_reproduction()
{
    Outcome o;
    const auto cones = delpezzo5_cones();
    using L = std::vector<std::string>;
    o.expect(labels(cones.codim2, cones.codim2.nef) == L{"tau(2,0)", "tau(2,0)+tau(3,-1)"},
             "Nef^2");
    o.expect(labels(cones.codim2, cones.codim2.effective) == L{"tau(2,0)", "tau(3,-1)"}, "Eff^2");
    o.expect(labels(cones.codim3, cones.codim3.nef) == L{"tau(3,0)", "tau(3,0)+tau(2,1)"},
             "Nef^3");
    o.expect(labels(cones.codim3, cones.codim3.effective) == L{"tau(2,1)", "tau(3,0)"}, "Eff^3");

    const auto v = spherical_nef_diagonal_check(odd_symplectic_g2c5_dataset());
    o.expect(v.status == Status::NotNef && v.witness.class_a == "tau(3,-1)"
                 && v.witness.class_b == "tau(2,1)" && v.witness.value && *v.witness.value == -1,
             "spherical check witness");

    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<long> lift(1, 5);
    int done = 0;
    while (done < 50) {
        const std::size_t d = done % 2 == 0 ? 2 : 3;
        std::uniform_int_distribution<int> count(static_cast<int>(d), static_cast<int>(d) + 3);
        std::vector<IntVector> gens;
        for (int i = count(rng); i > 0; --i) {
            IntVector g(d);
            for (std::size_t k = 0; k + 1 < d; ++k)
                g[k] = entry(rng);
            g[d - 1] = lift(rng);
            gens.push_back(g);
        }
        RationalCone cone;
        try {
            cone = cone_from_generators(gens, d);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!cone.full_dimensional)
            continue;
        const auto back = dual_cone(dual_cone(cone.generators).generators);
        o.expect(back == cone, "dual of dual differs");
        ++done;
    }
    return o;
}

Outcome cp_obstruction()
{
    Outcome o;
    for (long n = 1; n <= 10; ++n)
        o.expect(cp_fibration_obstruction(n).remainder_nonzero,
                 "zero remainder at n = " + std::to_string(n));
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 oracle equivalence of the three Euler characteristic routes", oracle_equivalence},
        {"2 reference values (cubic surface, odd (2,2), quadric b-values)", reference_values},
        {"3 sign and bound scans", sign_bound_scans},
        {"4 weighted hypersurfaces vs del Pezzo closed forms", weighted_closed_forms},
        {"5 classification golden lists", golden_lists},
        {"6 cone reproduction and dual-of-dual", cone_reproduction},
        {"7 fibration obstruction remainders", cp_obstruction},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.name;
        if (!o.note.empty())
            std::cout << " (" << o.note << ")";
        std::cout << '\n';
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
