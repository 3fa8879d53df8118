#include "nefkit/chern.hpp"

#include <algorithm>
#include <sstream>

namespace nefkit {

CIType::CIType(std::vector<long> degrees, long dimension)
    : dimension_(dimension)
{
    if (dimension < 0)
        throw std::invalid_argument("dimension must be non-negative");
    for (long d : degrees) {
        if (d < 1)
            throw std::invalid_argument("degree " + std::to_string(d) + " is not positive");
        if (d > 1)
            degrees_.push_back(d);
    }
    std::sort(degrees_.begin(), degrees_.end());
}

ExactInt CIType::degree() const
{
    ExactInt p = 1;
    for (long d : degrees_)
        p *= d;
    return p;
}

std::string CIType::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        os << (i ? "," : "") << degrees_[i];
    os << ";" << dimension_ << ')';
    return os.str();
}

WeightedHypersurface::WeightedHypersurface(std::vector<long> weights, long degree)
    : weights_(std::move(weights)), degree_(degree)
{
    if (weights_.size() < 5)
        throw std::invalid_argument("weighted hypersurface needs at least 5 weights");
    for (long a : weights_)
        if (a < 1)
            throw std::invalid_argument("weights must be positive");
    if (degree_ < 1)
        throw std::invalid_argument("degree must be positive");
}

ExactInt BettiTable::euler_characteristic() const
{
    ExactInt chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i)
        chi += (i % 2 == 0) ? betti[i] : ExactInt(-betti[i]);
    return chi;
}

ExactInt euler_ci_formula(const CIType& ci)
{
    const long n = ci.dimension();
    const long r = static_cast<long>(ci.codimension());
    const auto& ds = ci.degrees();
    ExactInt sum = 0;
    for (long i = 0; i <= n; ++i) {
        ExactInt term = binomial(n + r + 1, i) * complete_homogeneous(n - i, ds);
        if ((n - i) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return ci.degree() * sum;
}

namespace {

TruncatedSeries tangent_chern_series(const CIType& ci)
{
    const auto order = static_cast<std::size_t>(ci.dimension());
    const PowerFactor euler{1, static_cast<unsigned>(ci.ambient_dimension() + 1)};
    std::vector<ExactRational> normal;
    for (long d : ci.degrees())
        normal.emplace_back(d);
    return series_rational_coefficients(std::span(&euler, 1), normal, order);
}

} // namespace

std::vector<ExactInt> chern_degrees_ci(const CIType& ci)
{
    const auto series = tangent_chern_series(ci);
    const ExactInt deg = ci.degree();
    std::vector<ExactInt> out;
    out.reserve(series.coefficients().size());
    for (const auto& c : series.coefficients())
        out.push_back(deg * to_integer(c));
    return out;
}

ExactInt euler_ci_series(const CIType& ci)
{
    return chern_degrees_ci(ci).back();
}

ExactInt euler_ci_recursive(const CIType& ci)
{
    const auto& ds = ci.degrees();
    const std::size_t r = ds.size();
    const auto n = static_cast<std::size_t>(ci.dimension());

    // table[i][k] = chi(ds[i..r); k); row r is P^k.
    std::vector<std::vector<ExactInt>> table(r + 1, std::vector<ExactInt>(n + 1));
    for (std::size_t k = 0; k <= n; ++k)
        table[r][k] = static_cast<long>(k) + 1;
    for (std::size_t i = r; i-- > 0;) {
        ExactInt base = 1;
        for (std::size_t j = i; j < r; ++j)
            base *= ds[j];
        table[i][0] = base;
        for (std::size_t k = 1; k <= n; ++k)
            table[i][k] = ds[i] * table[i + 1][k] - (ds[i] - 1) * table[i][k - 1];
    }
    return table[0][n];
}

ExactRational quadrics_b(long n, long r)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("quadrics_b needs n >= 1 and r >= 1");
    const auto rows = static_cast<std::size_t>(n) + 1;
    const auto cols = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<ExactRational>> b(rows, std::vector<ExactRational>(cols));
    for (std::size_t i = 1; i < rows; ++i) {
        const long sign = (i % 2 == 0) ? 1 : -1;
        b[i][1] = ExactRational(sign * (2 * static_cast<long>(i) + 3) + 1, 4);
    }
    for (std::size_t j = 1; j < cols; ++j)
        b[1][j] = static_cast<long>(j) - 2;
    for (std::size_t i = 2; i < rows; ++i)
        for (std::size_t j = 2; j < cols; ++j)
            b[i][j] = b[i][j - 1] + b[i - 1][j];
    return b[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

BettiTable betti_ci(const CIType& ci)
{
    const long n = ci.dimension();
    if (n < 1)
        throw std::invalid_argument("betti_ci needs dimension >= 1");
    const ExactInt chi = euler_ci_formula(ci);
    BettiTable table;
    table.betti.assign(static_cast<std::size_t>(2 * n + 1), 0);
    for (long i = 0; i <= 2 * n; i += 2)
        table.betti[static_cast<std::size_t>(i)] = 1;
    // Every b_i off the middle degree matches P^n.
    const ExactInt middle = (n % 2 == 0) ? ExactInt(chi - n) : ExactInt(n + 1 - chi);
    if (middle < 0)
        throw NegativeBetti("middle Betti number of " + ci.to_string() + " would be "
                            + to_string(middle));
    table.betti[static_cast<std::size_t>(n)] = middle;
    return table;
}

IntPolynomial poincare_polynomial_ci(const CIType& ci)
{
    auto table = betti_ci(ci);
    IntPolynomial p(table.betti.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = (i % 2 == 0) ? table.betti[i] : ExactInt(-table.betti[i]);
    return p;
}

ExactRational euler_weighted(const WeightedHypersurface& wh)
{
    const auto& a = wh.weights();
    const long m = static_cast<long>(a.size()) - 1;
    const ExactInt minus_d = -wh.degree();
    ExactInt sum = 0;
    ExactInt power = 1;
    for (long i = 0; i <= m - 1; ++i) {
        sum += elementary_symmetric(m - 1 - i, a) * power;
        power *= minus_d;
    }
    // deg h^{m-1} = d / prod(a)
    ExactInt weight_product = 1;
    for (long w : a)
        weight_product *= w;
    ExactRational value = ExactRational(sum * wh.degree()) / ExactRational(weight_product);
    if (!is_integral(value))
        throw NonIntegralResult("top Chern number " + to_string(value)
                                + " is not an integer for these weights and degree");
    return value;
}

ExactInt euler_delpezzo_closed(long n, int degree)
{
    if (n < 3)
        throw std::invalid_argument("del Pezzo dimension must be at least 3");
    const auto un = static_cast<unsigned>(n);
    ExactInt numer;
    long denom = 0;
    switch (degree) {
    case 1:
        numer = 3 * n + 2 + pow(ExactInt(-5), un);
        denom = 3;
        break;
    case 2:
        numer = 4 * n + 5 - pow(ExactInt(-3), un + 1);
        denom = 4;
        break;
    default:
        throw std::invalid_argument("closed form exists only for degree 1 or 2");
    }
    if (numer % denom != 0)
        throw NonIntegralResult("closed form is not integral");
    return numer / denom;
}

} // namespace nefkit
