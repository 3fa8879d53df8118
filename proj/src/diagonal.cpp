#include "nefkit/diagonal.hpp"

#include "embedded_data.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace nefkit {

using nlohmann::json;

namespace {

constexpr std::array kStatusNames{"NotNef", "Nef", "Open"};
constexpr std::array kReasonNames{
    "NegativeSelfIntersection", "ProjectionBound", "NegativeEffectivePair",
    "ExceptionTable",           "BirationalContraction", "Homogeneous",
    "FakeProjectiveSpace",      "GroupVariety",    "OpenQuestion",
    "NonNegativeOrbitPairings", "Unclassified",
};

constexpr std::string_view kCriterionSelfIntersection =
    "negative self-intersection: deg(Delta^2) = deg c_n(X) < 0";
constexpr std::string_view kCriterionProjection =
    "projection bound: deg c_n(X) > (n+1) * degree of a finite map X -> P^n";
constexpr std::string_view kCriterionPair = "effective cycles with negative intersection";
constexpr std::string_view kCriterionTable = "exception table";
constexpr std::string_view kCriterionContraction =
    "birational extremal contraction (pseudoeffective curves would have to be nef)";
constexpr std::string_view kCriterionHomogeneous = "rational homogeneous variety";
constexpr std::string_view kCriterionFake =
    "fake projective space (Betti numbers of P^n)";
constexpr std::string_view kCriterionGroup = "elliptic curve (group variety)";
constexpr std::string_view kCriterionOpen =
    "open problem: nefness of the diagonal is undecided for odd-dimensional "
    "complete intersections of two quadrics";
constexpr std::string_view kCriterionUnclassified = "unclassified by the implemented criteria";

Verdict make(Status s, Reason r, std::string_view criterion, std::string detail)
{
    Verdict v;
    v.status = s;
    v.reason = r;
    v.criterion = std::string(criterion);
    v.detail = std::move(detail);
    return v;
}

Verdict negative_self_intersection(const ExactInt& chi, std::string what)
{
    auto v = make(Status::NotNef, Reason::NegativeSelfIntersection, kCriterionSelfIntersection,
                  what + ": deg c_n = " + to_string(chi) + " < 0");
    v.witness.euler = chi;
    return v;
}

Verdict projection_bound(const ExactInt& chi, const ExactInt& bound, std::string what)
{
    auto v = make(Status::NotNef, Reason::ProjectionBound, kCriterionProjection,
                  what + ": deg c_n = " + to_string(chi) + " > " + to_string(bound));
    v.witness.euler = chi;
    v.witness.bound = bound;
    return v;
}

Verdict from_table(const ExceptionEntry& e)
{
    Verdict v;
    v.status = Status::NotNef;
    v.witness.table_entry = e.name;
    if (e.witness) {
        v.reason = Reason::NegativeEffectivePair;
        v.criterion = std::string(kCriterionPair);
        v.witness.class_a = e.witness->a;
        v.witness.class_b = e.witness->b;
        v.witness.value = e.witness->value;
    } else {
        v.reason = Reason::ExceptionTable;
        v.criterion = std::string(kCriterionTable);
    }
    v.detail = e.name + ": " + e.justification;
    return v;
}

PairingWitness parse_witness(const json& j)
{
    PairingWitness w;
    w.a = j.at("a").get<std::string>();
    w.b = j.at("b").get<std::string>();
    w.value = j.at("value").get<long>();
    return w;
}

} // namespace

std::string_view to_string(Status s)
{
    return kStatusNames.at(static_cast<std::size_t>(s));
}

std::string_view to_string(Reason r)
{
    return kReasonNames.at(static_cast<std::size_t>(r));
}

Status status_from_string(std::string_view s)
{
    for (std::size_t i = 0; i < kStatusNames.size(); ++i)
        if (kStatusNames[i] == s)
            return static_cast<Status>(i);
    throw std::invalid_argument("unknown status " + std::string(s));
}

Reason reason_from_string(std::string_view s)
{
    for (std::size_t i = 0; i < kReasonNames.size(); ++i)
        if (kReasonNames[i] == s)
            return static_cast<Reason>(i);
    throw std::invalid_argument("unknown reason " + std::string(s));
}

bool ExceptionEntry::matches(const CIType& ci) const
{
    if (!degrees || *degrees != ci.degrees())
        return false;
    if (dimension && *dimension != ci.dimension())
        return false;
    if (dimension_parity && ci.dimension() % 2 != *dimension_parity)
        return false;
    return true;
}

bool ExceptionEntry::matches_delpezzo(long n, int degree) const
{
    return delpezzo_degree && *delpezzo_degree == degree && (!dimension || *dimension == n);
}

std::vector<ExceptionEntry> parse_exception_table(std::string_view json_text)
{
    std::vector<ExceptionEntry> out;
    try {
        const auto doc = json::parse(json_text);
        for (const auto& j : doc.at("entries")) {
            ExceptionEntry e;
            e.name = j.at("name").get<std::string>();
            e.justification = j.value("justification", "");
            const auto& m = j.at("match");
            if (m.contains("degrees"))
                e.degrees = CIType(m["degrees"].get<std::vector<long>>(), 0).degrees();
            if (m.contains("dimension"))
                e.dimension = m["dimension"].get<long>();
            if (m.contains("parity")) {
                const auto p = m["parity"].get<std::string>();
                if (p != "even" && p != "odd")
                    throw std::invalid_argument("parity must be even or odd");
                e.dimension_parity = p == "even" ? 0 : 1;
            }
            if (m.contains("delpezzo_degree"))
                e.delpezzo_degree = m["delpezzo_degree"].get<int>();
            if (!e.degrees && !e.delpezzo_degree)
                throw std::invalid_argument("entry " + e.name + " matches nothing");
            if (j.contains("witness") && !j["witness"].is_null()) {
                e.witness = parse_witness(j["witness"]);
                if (e.witness->value >= 0)
                    throw std::invalid_argument("entry " + e.name
                                                + " has a non-negative witness value");
            }
            out.push_back(std::move(e));
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed exception table: ") + ex.what());
    }
    return out;
}

const std::vector<ExceptionEntry>& exception_table()
{
    static const std::vector<ExceptionEntry> table =
        parse_exception_table(embedded::exceptions_json());
    return table;
}

Verdict verdict_curve(long genus)
{
    if (genus < 0)
        throw std::invalid_argument("genus must be non-negative");
    if (genus == 0)
        return make(Status::Nef, Reason::Homogeneous, kCriterionHomogeneous,
                    "genus 0: the projective line");
    if (genus == 1)
        return make(Status::Nef, Reason::GroupVariety, kCriterionGroup,
                    "genus 1: an elliptic curve");
    return negative_self_intersection(ExactInt(2 - 2 * genus),
                                      "curve of genus " + std::to_string(genus));
}

ProjectionCheck projection_bound_violated(const CIType& ci)
{
    ProjectionCheck c;
    c.euler = euler_ci_formula(ci);
    c.bound = (ci.dimension() + 1) * ci.degree();
    c.violated = c.euler > c.bound;
    return c;
}

Verdict verdict_ci(const CIType& ci)
{
    const long n = ci.dimension();
    if (n < 1)
        throw std::invalid_argument("verdict_ci needs dimension >= 1");
    const std::string what = "complete intersection " + ci.to_string();

    if (ci.is_projective_space())
        return make(Status::Nef, Reason::Homogeneous, kCriterionHomogeneous,
                    "projective space P^" + std::to_string(n));
    if (ci.is_quadric())
        return make(Status::Nef, Reason::Homogeneous, kCriterionHomogeneous,
                    "smooth quadric of dimension " + std::to_string(n));
    if (n == 1) {
        // 2 - 2g = deg c_1
        const ExactInt chi = euler_ci_formula(ci);
        auto v = verdict_curve((2 - chi).convert_to<long>() / 2);
        v.detail = what + ", " + v.detail;
        return v;
    }
    if (ci.is_two_quadrics() && n % 2 == 1) {
        auto v = make(Status::Open, Reason::OpenQuestion, kCriterionOpen,
                      what + ": all Euler characteristic criteria are inconclusive (deg c_n = 0)");
        v.witness.euler = euler_ci_formula(ci);
        return v;
    }
    for (const auto& e : exception_table())
        if (e.matches(ci))
            return from_table(e);

    const auto check = projection_bound_violated(ci);
    if (check.euler < 0)
        return negative_self_intersection(check.euler, what);
    if (check.violated)
        return projection_bound(check.euler, check.bound, what);

    auto v = make(Status::Open, Reason::Unclassified, kCriterionUnclassified,
                  what + ": deg c_n = " + to_string(check.euler) + " lies in [0, "
                      + to_string(check.bound) + "]");
    v.witness.euler = check.euler;
    v.witness.bound = check.bound;
    return v;
}

const std::vector<DelPezzoRow>& delpezzo_table()
{
    static const std::vector<DelPezzoRow> rows{
        {1, 3, std::nullopt, "hypersurface of degree 6 in the weighted projective space P(3,2,1,...,1)"},
        {2, 3, std::nullopt,
         "hypersurface of degree 4 in the weighted projective space P(2,1,...,1); a double cover "
         "of P^n branched along a quartic"},
        {3, 3, std::nullopt, "cubic hypersurface in P^(n+1)"},
        {4, 3, std::nullopt, "complete intersection of two quadrics in P^(n+2)"},
        {5, 3, 6, "linear section of the Grassmannian G(2,C^5) in its Pluecker embedding in P^9"},
        {6, 3, 4, "P^1 x P^1 x P^1, P^2 x P^2 or P(T_P^2)"},
        {7, 3, 3, "the blow-up of P^3 at a point"},
    };
    return rows;
}

bool delpezzo_exists(long n, int degree)
{
    if (degree == 6)
        return n == 3 || n == 4;
    for (const auto& row : delpezzo_table())
        if (row.degree == degree)
            return n >= row.min_dimension && (!row.max_dimension || n <= *row.max_dimension);
    return false;
}

std::vector<std::string> delpezzo_variants(long n, int degree)
{
    if (degree != 6)
        return {};
    if (n == 3)
        return {"P1xP1xP1", "P(T_P2)"};
    if (n == 4)
        return {"P2xP2"};
    return {};
}

Verdict verdict_delpezzo(long n, int degree, std::optional<std::string> variant)
{
    if (!delpezzo_exists(n, degree))
        throw InvalidDelPezzo("no smooth del Pezzo variety of dimension " + std::to_string(n)
                              + " and degree " + std::to_string(degree));
    if (variant) {
        const auto allowed = delpezzo_variants(n, degree);
        if (std::find(allowed.begin(), allowed.end(), *variant) == allowed.end())
            throw InvalidDelPezzo("variant '" + *variant + "' does not exist in dimension "
                                  + std::to_string(n) + " and degree "
                                  + std::to_string(degree));
    }
    const std::string what = "del Pezzo " + std::to_string(n) + "-fold of degree "
                             + std::to_string(degree);

    switch (degree) {
    case 1:
    case 2: {
        const ExactInt chi = euler_delpezzo_closed(n, degree);
        if (chi < 0)
            return negative_self_intersection(chi, what);
        // finite covering of P^n of degree 2^n (degree 1) or 2 (degree 2)
        const ExactInt cover = degree == 1 ? pow(ExactInt(2), static_cast<unsigned>(n))
                                           : ExactInt(2);
        const ExactInt bound = cover * (n + 1);
        if (chi > bound)
            return projection_bound(chi, bound, what);
        auto v = make(Status::Open, Reason::Unclassified, kCriterionUnclassified, what);
        v.witness.euler = chi;
        v.witness.bound = bound;
        return v;
    }
    case 3:
        return verdict_ci(CIType({3}, n));
    case 4:
        return verdict_ci(CIType({2, 2}, n));
    case 5:
        if (n == 3)
            return make(Status::Nef, Reason::FakeProjectiveSpace, kCriterionFake,
                        what + ": a fake projective space");
        if (n == 6)
            return make(Status::Nef, Reason::Homogeneous, kCriterionHomogeneous,
                        what + ": the Grassmannian G(2,C^5)");
        for (const auto& e : exception_table())
            if (e.matches_delpezzo(n, degree))
                return from_table(e);
        break;
    case 6:
        return make(Status::Nef, Reason::Homogeneous, kCriterionHomogeneous,
                    what + (variant ? ": " + *variant : std::string(": homogeneous")));
    case 7:
        return make(Status::NotNef, Reason::BirationalContraction, kCriterionContraction,
                    what + ": the blow-up of P^3 at a point");
    default:
        break;
    }
    return make(Status::Open, Reason::Unclassified, kCriterionUnclassified, what);
}

bool nef_big_filter_ci(const CIType& ci)
{
    return ci.is_projective_space() || (ci.is_quadric() && ci.dimension() % 2 == 1);
}

bool nef_big_filter_delpezzo(long n, int degree)
{
    return n == 3 && degree == 5;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPolynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a,
                                                     const IntPolynomial& divisor)
{
    if (divisor.empty() || divisor.back() != 1)
        throw std::invalid_argument("divisor must be monic");
    const std::size_t dd = divisor.size() - 1;
    IntPolynomial rem = a;
    if (rem.size() < dd)
        rem.resize(dd, 0);
    IntPolynomial quot(rem.size() > dd ? rem.size() - dd : 1, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const ExactInt c = rem[k];
        if (c == 0)
            continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] -= c * divisor[j];
    }
    rem.resize(dd);
    return {quot, rem};
}

ObstructionReport cp_fibration_obstruction(long n)
{
    if (n < 1)
        throw std::invalid_argument("cp_fibration_obstruction needs n >= 1");
    ObstructionReport r;
    r.n = n;
    r.p_x = poincare_polynomial_ci(CIType({2, 2}, 2 * n + 1));
    // For n = 1 the fibre is four points.
    r.p_f = n == 1 ? IntPolynomial{4} : poincare_polynomial_ci(CIType({2, 2}, 2 * n - 2));
    r.product = multiply(r.p_x, r.p_f);
    std::tie(r.quotient, r.remainder) = divide_monic(r.product, {1, 0, 1});
    r.remainder_nonzero = std::any_of(r.remainder.begin(), r.remainder.end(),
                                      [](const ExactInt& c) { return c != 0; });
    return r;
}

bool in_ci_golden_list(const CIType& ci)
{
    if (ci.dimension() == 1)
        return euler_ci_formula(ci) >= 0; // genus <= 1
    return ci.is_projective_space() || ci.is_quadric()
           || (ci.is_two_quadrics() && ci.dimension() % 2 == 1);
}

namespace {

void for_each_degree_list(long max_degree, long max_r,
                          const std::function<void(const std::vector<long>&)>& fn)
{
    std::vector<long> current;
    std::function<void(long)> rec = [&](long from) {
        fn(current);
        if (static_cast<long>(current.size()) == max_r)
            return;
        for (long d = from; d <= max_degree; ++d) {
            current.push_back(d);
            rec(d);
            current.pop_back();
        }
    };
    rec(2);
}

class ScanChecker {
public:
    explicit ScanChecker(ScanReport& report) : report_(report) {}

    void check(const std::string& law, bool ok, const std::string& tuple)
    {
        ++report_.law_checks[law];
        if (!ok)
            report_.violations.push_back(law + " violated at " + tuple);
    }

private:
    ScanReport& report_;
};

bool witness_rechecks(const Verdict& v, const CIType& ci)
{
    switch (v.reason) {
    case Reason::NegativeSelfIntersection:
        return v.witness.euler && *v.witness.euler < 0
               && *v.witness.euler == euler_ci_formula(ci);
    case Reason::ProjectionBound:
        return v.witness.euler && v.witness.bound && *v.witness.euler > *v.witness.bound
               && *v.witness.bound == (ci.dimension() + 1) * ci.degree()
               && *v.witness.euler == euler_ci_formula(ci);
    case Reason::NegativeEffectivePair:
        return v.witness.value && *v.witness.value < 0 && !v.witness.class_a.empty();
    case Reason::ExceptionTable:
        return std::any_of(exception_table().begin(), exception_table().end(),
                           [&](const ExceptionEntry& e) {
                               return e.name == v.witness.table_entry && e.matches(ci);
                           });
    default:
        return false;
    }
}

} // namespace

ScanReport scan_ci(const ScanOptions& options)
{
    if (options.max_dimension < 1 || options.max_degree < 1 || options.max_codimension < 1
        || options.max_quadric_codimension < 1)
        throw std::invalid_argument("scan bounds must be at least 1");

    ScanReport report;
    report.options = options;
    ScanChecker checker(report);

    for_each_degree_list(options.max_degree, options.max_codimension,
                         [&](const std::vector<long>& degrees) {
        const long r = static_cast<long>(degrees.size());
        const long top = degrees.empty() ? 0 : degrees.back();
        for (long n = 1; n <= options.max_dimension; ++n) {
            const CIType ci(degrees, n);
            const std::string tuple = ci.to_string();
            const ExactInt chi = euler_ci_formula(ci);
            ++report.varieties;

            if (r == 1) {
                const long d = top;
                const ExactInt lhs = d * chi;
                const ExactInt rhs = pow(ExactInt(1 - d), static_cast<unsigned>(n + 2)) - 1
                                     + d * (n + 2);
                checker.check("hypersurface closed form", lhs == rhs, tuple);
                if (d >= 3 && !(n == 1 && d == 3))
                    checker.check("hypersurface sign", n % 2 == 0 ? chi > 0 : chi < 0, tuple);
            }
            if (r >= 2 && top >= 3)
                checker.check("complete intersection sign", n % 2 == 0 ? chi > 0 : chi < 0,
                              tuple);
            const bool bound_hyp = (r == 1 && top >= 3 && !(n == 2 && top == 3))
                                   || (r >= 2 && top >= 3);
            if (bound_hyp && n % 2 == 0)
                checker.check("even-dimensional bound", chi > (n + 1) * ci.degree(), tuple);

            const Verdict v = verdict_ci(ci);
            ++report.verdict_counts[std::string(to_string(v.status)) + "/"
                                    + std::string(to_string(v.reason))];
            checker.check("verdict classified", v.reason != Reason::Unclassified, tuple);
            if (v.status == Status::NotNef)
                checker.check("witness re-verifies", witness_rechecks(v, ci), tuple);
            checker.check("nef/open set is the golden list",
                          (v.status != Status::NotNef) == in_ci_golden_list(ci), tuple);
            if (nef_big_filter_ci(ci))
                checker.check("nef and big implies nef", v.status == Status::Nef, tuple);
        }
    });

    for (long r = 1; r <= options.max_quadric_codimension; ++r) {
        for (long n = 1; n <= options.max_dimension; ++n) {
            const CIType ci(std::vector<long>(static_cast<std::size_t>(r), 2), n);
            const std::string tuple = ci.to_string();
            const ExactRational b = quadrics_b(n, r);
            ExactRational direct = ExactRational(euler_ci_formula(ci))
                                   / ExactRational(pow(ExactInt(2), static_cast<unsigned>(r)));
            if (n % 2 == 1)
                direct = -direct;
            checker.check("quadric recursion matches direct value", b == direct, tuple);
            if (r >= 3) {
                checker.check("quadric positivity", b > 0, tuple);
                if (n % 2 == 0 && !(n == 2 && r == 3))
                    checker.check("quadric bound", b > n + 1, tuple);
            }
        }
    }

    if (!report.ok())
        throw ScanViolation(report.violations.front(), report);
    return report;
}

} // namespace nefkit
