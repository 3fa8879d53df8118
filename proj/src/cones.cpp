#include "nefkit/cones.hpp"

#include "embedded_data.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace nefkit {

using nlohmann::json;

bool is_odd_symplectic_partition(long n, const Partition& p)
{
    const auto [l1, l2] = p;
    if (l1 == 2 * n - 1 && l2 == -1)
        return true;
    if (!(2 * n - 1 >= l1 && l1 >= l2 && l2 >= 0))
        return false;
    // (n-2)-strict: equal parts must not exceed n-2
    return !(l1 == l2 && l1 > n - 2);
}

CycleDataset::CycleDataset(std::string variety, long dimension, std::vector<SchubertClass> classes,
                           std::optional<long> symplectic_n)
    : variety_(std::move(variety)),
      dimension_(dimension),
      symplectic_n_(symplectic_n),
      classes_(std::move(classes))
{
    if (classes_.empty())
        throw SchemaError("dataset has no classes");
    if (dimension_ < 0)
        throw SchemaError("dataset dimension is negative");
    std::set<std::string> seen;
    for (const auto& c : classes_) {
        if (!seen.insert(c.label).second)
            throw SchemaError("duplicate class label " + c.label);
        if (c.codim < 0 || c.codim > dimension_)
            throw SchemaError("class " + c.label + " has codimension outside [0, dimension]");
        if (c.partition && (*c.partition)[0] + (*c.partition)[1] != c.codim)
            throw SchemaError("class " + c.label + ": partition does not sum to its codimension");
        if (symplectic_n_) {
            if (!c.partition)
                throw SchemaError("class " + c.label + " needs a partition");
            if (!is_odd_symplectic_partition(*symplectic_n_, *c.partition))
                throw SchemaError("class " + c.label + " has an invalid partition for n = "
                                  + std::to_string(*symplectic_n_));
        }
    }
}

const SchubertClass& CycleDataset::find(std::string_view label) const
{
    for (const auto& c : classes_)
        if (c.label == label)
            return c;
    throw SchemaError("unknown class label " + std::string(label));
}

std::vector<SchubertClass> CycleDataset::classes_of_codim(long codim) const
{
    std::vector<SchubertClass> out;
    for (const auto& c : classes_)
        if (c.codim == codim)
            out.push_back(c);
    return out;
}

namespace {

std::pair<std::string, std::string> pairing_key(std::string_view a, std::string_view b)
{
    if (b < a)
        std::swap(a, b);
    return {std::string(a), std::string(b)};
}

} // namespace

void CycleDataset::add_pairing(const std::string& a, const std::string& b, const ExactInt& value)
{
    const auto& ca = find(a);
    const auto& cb = find(b);
    if (ca.codim + cb.codim != dimension_)
        throw InconsistentPairing("pairing " + a + " x " + b + ": codimensions "
                                  + std::to_string(ca.codim) + " + " + std::to_string(cb.codim)
                                  + " != " + std::to_string(dimension_));
    auto [it, inserted] = pairings_.emplace(pairing_key(a, b), value);
    if (!inserted && it->second != value)
        throw InconsistentPairing("pairing " + a + " x " + b + " given as both "
                                  + to_string(it->second) + " and " + to_string(value));
}

std::optional<ExactInt> CycleDataset::lookup(std::string_view a, std::string_view b) const
{
    const auto it = pairings_.find(pairing_key(a, b));
    if (it == pairings_.end())
        return std::nullopt;
    return it->second;
}

CycleDataset load_dataset(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("dataset is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object())
            throw SchemaError("dataset must be a JSON object");
        const auto& jclasses = doc.at("classes");
        if (!jclasses.is_array() || jclasses.empty())
            throw SchemaError("dataset has no classes");
        std::vector<SchubertClass> classes;
        for (const auto& jc : jclasses) {
            SchubertClass c;
            c.label = jc.at("label").get<std::string>();
            c.codim = jc.at("codim").get<long>();
            if (jc.contains("partition")) {
                const auto p = jc["partition"].get<std::vector<long>>();
                if (p.size() != 2)
                    throw SchemaError("class " + c.label + ": partition must have two parts");
                c.partition = Partition{p[0], p[1]};
            }
            classes.push_back(std::move(c));
        }
        std::optional<long> symplectic_n;
        if (doc.contains("symplectic_n"))
            symplectic_n = doc["symplectic_n"].get<long>();
        CycleDataset ds(doc.at("variety").get<std::string>(), doc.at("dimension").get<long>(),
                        std::move(classes), symplectic_n);
        for (const auto& jp : doc.value("pairings", json::array()))
            ds.add_pairing(jp.at("a").get<std::string>(), jp.at("b").get<std::string>(),
                           ExactInt(jp.at("value").get<long>()));
        return ds;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("dataset does not match the schema: ") + e.what());
    }
}

CycleDataset load_dataset_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open dataset " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return load_dataset(buf.str());
}

const CycleDataset& odd_symplectic_g2c5_dataset()
{
    static const CycleDataset ds = load_dataset(embedded::gw2c5_json());
    return ds;
}

const CycleDataset& grassmannian_g2c5_dataset()
{
    static const CycleDataset ds = load_dataset(embedded::g2c5_json());
    return ds;
}

ExactInt pair(const SchubertClass& a, const SchubertClass& b, const CycleDataset& ds)
{
    if (a.codim + b.codim != ds.dimension())
        throw MissingPairing(a.label + " and " + b.label
                             + " do not have complementary codimension");
    auto v = ds.lookup(a.label, b.label);
    if (!v)
        throw MissingPairing("no pairing stored for " + a.label + " x " + b.label);
    return *v;
}

ExactInt tau_top_pairing(long n, long a, long b)
{
    if (n < 2)
        throw InvalidPartition("tau_top_pairing needs n >= 2");
    if (!(a >= b && b >= 0 && a + b == 2 * n - 1))
        throw InvalidPartition("(" + std::to_string(a) + "," + std::to_string(b)
                               + ") is not a partition with a >= b >= 0 and a + b = 2n-1");
    return (a - 1) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Exact linear algebra and cones

namespace {

using RatVector = std::vector<ExactRational>;

ExactInt dot(const IntVector& a, const IntVector& b)
{
    ExactInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim)
{
    std::vector<RatVector> m;
    m.reserve(rows.size());
    for (const auto& r : rows)
        m.emplace_back(r.begin(), r.end());
    std::size_t rk = 0;
    for (std::size_t col = 0; col < dim && rk < m.size(); ++col) {
        std::size_t piv = rk;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rk]);
        for (std::size_t i = rk + 1; i < m.size(); ++i) {
            if (m[i][col] == 0)
                continue;
            const ExactRational f = m[i][col] / m[rk][col];
            for (std::size_t j = col; j < dim; ++j)
                m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

IntVector to_primitive_integer(const RatVector& v)
{
    ExactInt l = 1;
    for (const auto& x : v)
        l = boost::multiprecision::lcm(l, ExactInt(denominator(x)));
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(ExactInt(numerator(x)) * (l / ExactInt(denominator(x))));
    return primitive(std::move(out));
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const ExactInt& x) { return x == 0; });
}

std::vector<IntVector> canonical_rays(std::vector<IntVector> rays)
{
    for (auto& r : rays)
        r = primitive(std::move(r));
    std::erase_if(rays, is_zero);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

// Columns of the inverse of a square rational matrix, i.e. the rays of the
// simplicial cone { x : B x >= 0 }.
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& b)
{
    const std::size_t d = b.size();
    std::vector<RatVector> m(d, RatVector(2 * d, ExactRational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            m[i][j] = ExactRational(b[i][j]);
        m[i][d + i] = 1;
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (m[piv][col] == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        const ExactRational p = m[col][col];
        for (auto& x : m[col])
            x /= p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            const ExactRational f = m[i][col];
            for (std::size_t j = 0; j < 2 * d; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < d; ++j) {
        RatVector c(d);
        for (std::size_t i = 0; i < d; ++i)
            c[i] = m[i][d + j];
        cols.push_back(to_primitive_integer(c));
    }
    return cols;
}

// Extreme rays of the pointed cone { x : a . x >= 0 for all rows a } in
// dimension 2, by rotating each constraint normal a quarter turn both ways.
std::vector<IntVector> rays_by_rotation(const std::vector<IntVector>& constraints)
{
    std::vector<IntVector> rays;
    for (const auto& a : constraints) {
        for (const IntVector cand : {IntVector{-a[1], a[0]}, IntVector{a[1], -a[0]}}) {
            if (is_zero(cand))
                continue;
            const bool feasible = std::all_of(constraints.begin(), constraints.end(),
                                              [&](const IntVector& c) { return dot(c, cand) >= 0; });
            if (feasible)
                rays.push_back(cand);
        }
    }
    return canonical_rays(std::move(rays));
}

// Double description: start from a simplicial cone on d independent
// constraints and add the rest one at a time.
std::vector<IntVector> rays_by_double_description(const std::vector<IntVector>& constraints,
                                                  std::size_t d)
{
    std::vector<std::size_t> basis;
    std::vector<IntVector> basis_rows;
    for (std::size_t i = 0; i < constraints.size() && basis.size() < d; ++i) {
        basis_rows.push_back(constraints[i]);
        if (rank(basis_rows, d) == basis_rows.size())
            basis.push_back(i);
        else
            basis_rows.pop_back();
    }

    std::vector<IntVector> rays = inverse_columns(basis_rows);
    std::vector<IntVector> processed = basis_rows;

    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (std::find(basis.begin(), basis.end(), i) != basis.end())
            continue;
        const IntVector& a = constraints[i];
        std::vector<IntVector> pos, neg, next;
        for (const auto& r : rays) {
            const ExactInt s = dot(a, r);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                // p and q are adjacent when the constraints tight at both have rank d-2
                std::vector<IntVector> common;
                for (const auto& c : processed)
                    if (dot(c, p) == 0 && dot(c, q) == 0)
                        common.push_back(c);
                if (d >= 2 && common.size() >= d - 2 && rank(common, d) == d - 2) {
                    const ExactInt ap = dot(a, p);
                    const ExactInt aq = dot(a, q);
                    IntVector r(d);
                    for (std::size_t k = 0; k < d; ++k)
                        r[k] = ap * q[k] - aq * p[k];
                    next.push_back(std::move(r));
                }
            }
        }
        next.insert(next.end(), pos.begin(), pos.end());
        rays = canonical_rays(std::move(next));
        processed.push_back(a);
    }
    return canonical_rays(std::move(rays));
}

RationalCone cone_of_constraints(const std::vector<IntVector>& constraints, std::size_t d)
{
    if (constraints.empty() || rank(constraints, d) < d)
        throw std::invalid_argument(
            "effective generators do not span the ambient space; the dual cone is not pointed");
    RationalCone cone;
    cone.dimension = d;
    cone.generators = d == 2 ? rays_by_rotation(constraints)
                             : rays_by_double_description(constraints, d);
    cone.full_dimensional = !cone.generators.empty() && rank(cone.generators, d) == d;
    return cone;
}

} // namespace

IntVector primitive(IntVector v)
{
    ExactInt g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, ExactInt(abs(x)));
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

RationalCone dual_cone(std::span<const IntVector> effective_generators, const IntMatrix& pairing)
{
    if (pairing.empty())
        throw std::invalid_argument("empty pairing matrix");
    const std::size_t out_dim = pairing.size();
    const std::size_t in_dim = pairing.front().size();
    for (const auto& row : pairing)
        if (row.size() != in_dim)
            throw std::invalid_argument("pairing matrix is ragged");
    std::vector<IntVector> constraints;
    for (const auto& g : effective_generators) {
        if (g.size() != in_dim)
            throw std::invalid_argument("generator length does not match the pairing matrix");
        IntVector c(out_dim);
        for (std::size_t i = 0; i < out_dim; ++i)
            c[i] = dot(pairing[i], g);
        constraints.push_back(std::move(c));
    }
    return cone_of_constraints(constraints, out_dim);
}

RationalCone dual_cone(std::span<const IntVector> generators)
{
    if (generators.empty())
        throw std::invalid_argument("no generators");
    const std::size_t d = generators.front().size();
    IntMatrix identity(d, IntVector(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        identity[i][i] = 1;
    return dual_cone(generators, identity);
}

RationalCone cone_from_generators(std::span<const IntVector> generators, std::size_t dimension)
{
    std::vector<IntVector> gens(generators.begin(), generators.end());
    if (!gens.empty() && rank(gens, dimension) == dimension) {
        const auto dual = dual_cone(gens);
        if (dual.full_dimensional)
            return dual_cone(dual.generators);
    }
    RationalCone cone;
    cone.dimension = dimension;
    cone.generators = canonical_rays(std::move(gens));
    cone.full_dimensional = false;
    return cone;
}

bool cone_contains(const RationalCone& cone, const IntVector& x)
{
    if (!cone.full_dimensional)
        throw std::invalid_argument("containment test needs a full-dimensional cone");
    const auto dual = dual_cone(cone.generators);
    return std::all_of(dual.generators.begin(), dual.generators.end(),
                       [&](const IntVector& y) { return dot(x, y) >= 0; });
}

bool cone_contains(const RationalCone& outer, const RationalCone& inner)
{
    return std::all_of(inner.generators.begin(), inner.generators.end(),
                       [&](const IntVector& g) { return cone_contains(outer, g); });
}

CodimCones cones_in_codim(const CycleDataset& ds, long codim)
{
    if (codim < 0 || codim > ds.dimension())
        throw std::invalid_argument("codimension out of range");
    const auto here = ds.classes_of_codim(codim);
    const auto there = ds.classes_of_codim(ds.dimension() - codim);
    if (here.empty() || there.empty())
        throw SchemaError("dataset has no classes in codimension " + std::to_string(codim));

    CodimCones out;
    out.codim = codim;
    for (const auto& c : here)
        out.basis.push_back(c.label);

    std::vector<IntVector> unit;
    for (std::size_t i = 0; i < here.size(); ++i) {
        IntVector e(here.size(), 0);
        e[i] = 1;
        unit.push_back(std::move(e));
    }
    out.effective = cone_from_generators(unit, here.size());

    IntMatrix m(here.size(), IntVector(there.size()));
    for (std::size_t i = 0; i < here.size(); ++i)
        for (std::size_t j = 0; j < there.size(); ++j)
            m[i][j] = pair(here[i], there[j], ds);
    std::vector<IntVector> complementary;
    for (std::size_t j = 0; j < there.size(); ++j) {
        IntVector e(there.size(), 0);
        e[j] = 1;
        complementary.push_back(std::move(e));
    }
    out.nef = dual_cone(complementary, m);
    return out;
}

std::string format_combination(const std::vector<std::string>& basis, const IntVector& coeffs)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const ExactInt& c = coeffs[i];
        if (c == 0)
            continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const ExactInt mag = abs(c);
        if (mag != 1)
            out += to_string(mag) + "*";
        out += basis.at(i);
    }
    return out.empty() ? "0" : out;
}

DelPezzo5Cones delpezzo5_cones()
{
    const auto& ds = odd_symplectic_g2c5_dataset();
    return {cones_in_codim(ds, 2), cones_in_codim(ds, 3)};
}

Verdict spherical_nef_diagonal_check(const CycleDataset& ds)
{
    const auto& cls = ds.classes();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i; j < cls.size(); ++j) {
            if (cls[i].codim + cls[j].codim != ds.dimension())
                continue;
            const ExactInt v = pair(cls[i], cls[j], ds);
            ++checked;
            if (v < 0) {
                Verdict verdict;
                verdict.status = Status::NotNef;
                verdict.reason = Reason::NegativeEffectivePair;
                verdict.criterion = "orbit closures of complementary dimension with negative "
                                    "intersection";
                verdict.witness.class_a = cls[i].label;
                verdict.witness.class_b = cls[j].label;
                verdict.witness.value = v;
                verdict.detail = ds.variety() + ": deg(" + cls[i].label + " . " + cls[j].label
                                 + ") = " + to_string(v);
                return verdict;
            }
        }
    }
    Verdict verdict;
    verdict.status = Status::Nef;
    verdict.reason = Reason::NonNegativeOrbitPairings;
    verdict.criterion = "all orbit closures of complementary dimension meet non-negatively";
    verdict.detail = ds.variety() + ": " + std::to_string(checked)
                     + " complementary pairings, none negative";
    return verdict;
}

} // namespace nefkit
