#include "doctest.h"

#include "nefkit/diagonal.hpp"
#include "oracles.hpp"

#include <random>
#include <set>
#include <tuple>

using namespace nefkit;

TEST_SUITE("diagonal") {

TEST_CASE("curves")
{
    const auto p1 = verdict_curve(0);
    CHECK(p1.status == Status::Nef);
    CHECK(p1.reason == Reason::Homogeneous);

    const auto ell = verdict_curve(1);
    CHECK(ell.status == Status::Nef);
    CHECK(ell.reason == Reason::GroupVariety);

    const auto g3 = verdict_curve(3);
    CHECK(g3.status == Status::NotNef);
    CHECK(g3.reason == Reason::NegativeSelfIntersection);
    REQUIRE(g3.witness.euler);
    CHECK(*g3.witness.euler == -4);

    CHECK_THROWS_AS(verdict_curve(-1), std::invalid_argument);
}

TEST_CASE("projection bound examples")
{
    const auto a = projection_bound_violated(CIType({2, 2}, 4));
    CHECK_FALSE(a.violated);
    CHECK(a.euler == 12);
    CHECK(a.bound == 20);

    const auto b = projection_bound_violated(CIType({3}, 4));
    CHECK(b.violated);
    CHECK(b.euler == 27);
    CHECK(b.bound == 15);

    const auto c = projection_bound_violated(CIType({}, 3));
    CHECK_FALSE(c.violated);
    CHECK(c.euler == 4);
    CHECK(c.bound == 4);
}

TEST_CASE("verdict_ci examples")
{
    const auto cubic = verdict_ci(CIType({3}, 2));
    CHECK(cubic.status == Status::NotNef);
    CHECK(cubic.reason == Reason::NegativeEffectivePair);
    REQUIRE(cubic.witness.value);
    CHECK(*cubic.witness.value == -1);
    CHECK(cubic.witness.table_entry == "cubic surface");

    const auto even22 = verdict_ci(CIType({2, 2}, 6));
    CHECK(even22.status == Status::NotNef);
    CHECK(even22.witness.class_a == "Lambda_1");
    CHECK(even22.witness.class_b == "Lambda_2");
    CHECK(*even22.witness.value == -1);

    const auto odd22 = verdict_ci(CIType({2, 2}, 5));
    CHECK(odd22.status == Status::Open);
    CHECK(odd22.reason == Reason::OpenQuestion);
    CHECK(odd22.detail.find("inconclusive") != std::string::npos);

    const auto quartic = verdict_ci(CIType({4}, 3));
    CHECK(quartic.status == Status::NotNef);
    CHECK(quartic.reason == Reason::NegativeSelfIntersection);
    CHECK(*quartic.witness.euler == -56);
}

TEST_CASE("verdict_ci special families")
{
    CHECK(verdict_ci(CIType({}, 5)).reason == Reason::Homogeneous);
    CHECK(verdict_ci(CIType({2}, 4)).reason == Reason::Homogeneous);
    CHECK(verdict_ci(CIType({3}, 1)).reason == Reason::GroupVariety);
    CHECK(verdict_ci(CIType({2, 2}, 1)).reason == Reason::GroupVariety);
    CHECK(verdict_ci(CIType({4}, 1)).status == Status::NotNef);

    const auto k3 = verdict_ci(CIType({2, 2, 2}, 2));
    CHECK(k3.status == Status::NotNef);
    CHECK(k3.reason == Reason::ExceptionTable);
    CHECK_FALSE(k3.witness.table_entry.empty());

    const auto bound = verdict_ci(CIType({3}, 4));
    CHECK(bound.reason == Reason::ProjectionBound);
    CHECK(*bound.witness.euler == 27);
    CHECK(*bound.witness.bound == 15);

    CHECK_THROWS_AS(verdict_ci(CIType({3}, 0)), std::invalid_argument);
}

TEST_CASE("status and reason names round trip")
{
    for (auto s : {Status::NotNef, Status::Nef, Status::Open})
        CHECK(status_from_string(to_string(s)) == s);
    for (int i = 0; i <= static_cast<int>(Reason::Unclassified); ++i) {
        const auto r = static_cast<Reason>(i);
        CHECK(reason_from_string(to_string(r)) == r);
    }
    CHECK_THROWS_AS(status_from_string("Maybe"), std::invalid_argument);
    CHECK_THROWS_AS(reason_from_string("Whatever"), std::invalid_argument);
}

TEST_CASE("exception table")
{
    const auto& table = exception_table();
    CHECK(table.size() == 5);
    for (const auto& e : table) {
        CHECK_FALSE(e.name.empty());
        CHECK_FALSE(e.justification.empty());
        if (e.witness)
            CHECK(e.witness->value < 0);
    }
    CHECK_THROWS_AS(parse_exception_table("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exception_table(R"({"entries":[{"name":"x"}]})"),
                    std::invalid_argument);
}

TEST_CASE("del Pezzo examples")
{
    const auto fake = verdict_delpezzo(3, 5);
    CHECK(fake.status == Status::Nef);
    CHECK(fake.reason == Reason::FakeProjectiveSpace);

    const auto dp45 = verdict_delpezzo(4, 5);
    CHECK(dp45.status == Status::NotNef);
    CHECK(dp45.witness.class_a == "Pi");
    CHECK(dp45.witness.class_b == "Lambda");
    CHECK(*dp45.witness.value == -1);

    const auto dp51 = verdict_delpezzo(5, 1);
    CHECK(dp51.status == Status::NotNef);
    CHECK(dp51.reason == Reason::NegativeSelfIntersection);
    CHECK(*dp51.witness.euler == -1036);

    const auto dp37 = verdict_delpezzo(3, 7);
    CHECK(dp37.status == Status::NotNef);
    CHECK(dp37.reason == Reason::BirationalContraction);

    const auto dp55 = verdict_delpezzo(5, 5);
    CHECK(dp55.witness.class_a == "tau(3,-1)");
    CHECK(dp55.witness.class_b == "tau(2,1)");
    CHECK(*dp55.witness.value == -1);

    CHECK(verdict_delpezzo(6, 5).reason == Reason::Homogeneous);
    CHECK(verdict_delpezzo(3, 6, "P(T_P2)").status == Status::Nef);
    CHECK(verdict_delpezzo(4, 6, "P2xP2").status == Status::Nef);
}

TEST_CASE("del Pezzo invalid pairs")
{
    CHECK_THROWS_AS(verdict_delpezzo(7, 5), InvalidDelPezzo);
    CHECK_THROWS_AS(verdict_delpezzo(4, 7), InvalidDelPezzo);
    CHECK_THROWS_AS(verdict_delpezzo(5, 6), InvalidDelPezzo);
    CHECK_THROWS_AS(verdict_delpezzo(2, 3), InvalidDelPezzo);
    CHECK_THROWS_AS(verdict_delpezzo(3, 8), InvalidDelPezzo);
    CHECK_THROWS_AS(verdict_delpezzo(4, 6, "P1xP1xP1"), InvalidDelPezzo);
}

TEST_CASE("del Pezzo degree 1 and 2: sign for odd n, bound for even n")
{
    for (long n = 3; n <= 15; ++n)
        for (int deg : {1, 2}) {
            const auto v = verdict_delpezzo(n, deg);
            REQUIRE(v.status == Status::NotNef);
            if (n % 2 == 1) {
                REQUIRE(v.reason == Reason::NegativeSelfIntersection);
            } else {
                REQUIRE(v.reason == Reason::ProjectionBound);
                const ExactInt cover = deg == 1 ? pow(ExactInt(2), static_cast<unsigned>(n)) : 2;
                REQUIRE(*v.witness.bound == cover * (n + 1));
            }
        }
}

TEST_CASE("del Pezzo golden list")
{
    std::set<std::pair<long, int>> nef;
    for (const auto& row : delpezzo_table())
        for (long n = 3; n <= 12; ++n) {
            if (!delpezzo_exists(n, row.degree))
                continue;
            auto variants = delpezzo_variants(n, row.degree);
            if (variants.empty())
                variants.push_back("");
            for (const auto& var : variants) {
                const auto v = var.empty() ? verdict_delpezzo(n, row.degree)
                                           : verdict_delpezzo(n, row.degree, var);
                // degree 4 in odd dimension is the odd (2,2) question
                REQUIRE((v.status == Status::Open) == (row.degree == 4 && n % 2 == 1));
                if (v.status == Status::Nef)
                    nef.insert({n, row.degree});
                if (nef_big_filter_delpezzo(n, row.degree))
                    REQUIRE(v.status == Status::Nef);
            }
        }
    const std::set<std::pair<long, int>> expected{{3, 5}, {6, 5}, {3, 6}, {4, 6}};
    CHECK(nef == expected);
    CHECK(delpezzo_variants(3, 6).size() == 2);
    CHECK(delpezzo_variants(4, 6).size() == 1);
}

TEST_CASE("del Pezzo table has seven rows")
{
    const auto& rows = delpezzo_table();
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i].degree == static_cast<int>(i + 1));
    CHECK(rows[6].description == "the blow-up of P^3 at a point");
}

TEST_CASE("nef and big filter")
{
    CHECK(nef_big_filter_ci(CIType({2}, 5)));
    CHECK_FALSE(nef_big_filter_ci(CIType({2}, 4)));
    CHECK(nef_big_filter_ci(CIType({}, 4)));
    CHECK_FALSE(nef_big_filter_ci(CIType({2, 2}, 5)));
    CHECK(nef_big_filter_delpezzo(3, 5));
    CHECK_FALSE(nef_big_filter_delpezzo(6, 5));
    CHECK_FALSE(nef_big_filter_delpezzo(3, 6));
}

TEST_CASE("polynomial helpers")
{
    const IntPolynomial a{1, 2, 3};
    const IntPolynomial b{0, 1};
    CHECK(multiply(a, b) == IntPolynomial{0, 1, 2, 3});
    const auto [q, r] = divide_monic(IntPolynomial{1, 2, 3, 4}, IntPolynomial{1, 0, 1});
    CHECK(multiply(q, IntPolynomial{1, 0, 1}).size() >= 3);
    // (1 + t^2)(3 + 4t) = 3 + 4t + 3t^2 + 4t^3
    CHECK(q == IntPolynomial{3, 4});
    CHECK(r == IntPolynomial{-2, -2});
    CHECK_THROWS_AS(divide_monic(a, IntPolynomial{1, 2}), std::invalid_argument);
}

TEST_CASE("fibration obstruction")
{
    const auto r1 = cp_fibration_obstruction(1);
    CHECK(r1.p_f == IntPolynomial{4});
    CHECK(r1.remainder == IntPolynomial{0, 16});
    CHECK(r1.remainder_nonzero);

    for (long n = 1; n <= 10; ++n) {
        const auto r = cp_fibration_obstruction(n);
        REQUIRE(r.remainder_nonzero);
        // remainder mod 1 + t^2 equals the value at t = i
        const auto [re, im] = oracle::eval_at_i(r.product);
        REQUIRE(r.remainder.size() == 2);
        REQUIRE(r.remainder[0] == re);
        REQUIRE(r.remainder[1] == im);
        // quotient * (1 + t^2) + remainder reproduces the product
        IntPolynomial back = multiply(r.quotient, IntPolynomial{1, 0, 1});
        back.resize(std::max(back.size(), r.product.size()), 0);
        back[0] += r.remainder[0];
        back[1] += r.remainder[1];
        while (back.size() > r.product.size() && back.back() == 0)
            back.pop_back();
        REQUIRE(back == r.product);
    }
    CHECK_THROWS_AS(cp_fibration_obstruction(0), std::invalid_argument);
}

TEST_CASE("scan examples")
{
    const auto small = scan_ci({1, 3, 1, 1});
    CHECK(small.ok());
    CHECK(verdict_ci(CIType({3}, 1)).reason == Reason::GroupVariety);

    const auto quad = scan_ci({2, 2, 1, 1});
    CHECK(quad.ok());
    CHECK(quad.verdict_counts.at("Nef/Homogeneous") >= 1);

    CHECK_THROWS_AS(scan_ci({0, 3, 1, 1}), std::invalid_argument);
}

TEST_CASE("full default scan has no violations")
{
    const auto report = scan_ci(ScanOptions{});
    CHECK(report.ok());
    CHECK(report.verdict_counts.count("Open/Unclassified") == 0);
    CHECK(report.law_checks.at("hypersurface sign") > 0);
    CHECK(report.law_checks.at("complete intersection sign") > 0);
    CHECK(report.law_checks.at("even-dimensional bound") > 0);
    CHECK(report.law_checks.at("quadric bound") > 0);
}

TEST_CASE("every NotNef verdict on random types carries a re-checkable witness")
{
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> deg(1, 8);
    std::uniform_int_distribution<long> dim(1, 14);
    std::uniform_int_distribution<int> len(0, 5);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<long> d(static_cast<std::size_t>(len(rng)));
        for (auto& x : d)
            x = deg(rng);
        const CIType ci(d, dim(rng));
        const auto v = verdict_ci(ci);
        REQUIRE(v.reason != Reason::Unclassified);
        REQUIRE((v.status != Status::NotNef) == in_ci_golden_list(ci));
        if (v.status != Status::NotNef)
            continue;
        const ExactInt chi = euler_ci_formula(ci);
        switch (v.reason) {
        case Reason::NegativeSelfIntersection:
            REQUIRE(*v.witness.euler == chi);
            REQUIRE(chi < 0);
            break;
        case Reason::ProjectionBound:
            REQUIRE(chi > (ci.dimension() + 1) * ci.degree());
            break;
        case Reason::NegativeEffectivePair:
            REQUIRE(*v.witness.value < 0);
            REQUIRE_FALSE(v.witness.table_entry.empty());
            break;
        default:
            REQUIRE(v.reason == Reason::ExceptionTable);
            REQUIRE_FALSE(v.witness.table_entry.empty());
        }
    }
}

} // TEST_SUITE
