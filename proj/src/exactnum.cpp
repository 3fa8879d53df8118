#include "nefkit/exactnum.hpp"

namespace nefkit {

std::string to_string(const ExactInt& v)
{
    return v.str();
}

std::string to_string(const ExactRational& v)
{
    if (is_integral(v))
        return to_string(ExactInt(numerator(v)));
    return to_string(ExactInt(numerator(v))) + "/" + to_string(ExactInt(denominator(v)));
}

bool is_integral(const ExactRational& v)
{
    return denominator(v) == 1;
}

ExactInt to_integer(const ExactRational& v)
{
    if (!is_integral(v))
        throw std::domain_error("value " + to_string(v) + " is not an integer");
    return numerator(v);
}

ExactInt pow(const ExactInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

ExactInt binomial(long n, long k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    ExactInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

ExactInt complete_homogeneous(long k, std::span<const long> values)
{
    if (k < 0)
        return 0;
    // row[j] = h_j of the prefix processed so far
    std::vector<ExactInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (long d : values) {
        // h_j(prefix, d) = h_j(prefix) + d * h_{j-1}(prefix, d)
        for (std::size_t j = 1; j < row.size(); ++j)
            row[j] += d * row[j - 1];
    }
    return row[static_cast<std::size_t>(k)];
}

ExactInt elementary_symmetric(long k, std::span<const long> values)
{
    if (k < 0 || static_cast<std::size_t>(k) > values.size())
        return 0;
    std::vector<ExactInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (long d : values) {
        for (std::size_t j = row.size() - 1; j >= 1; --j)
            row[j] += d * row[j - 1];
    }
    return row[static_cast<std::size_t>(k)];
}

TruncatedSeries::TruncatedSeries(std::size_t order)
    : coeffs_(order + 1, ExactRational(0))
{
}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients))
{
    coeffs_.resize(order + 1, ExactRational(0));
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::binomial_power(const ExactRational& s, unsigned p,
                                                std::size_t order)
{
    TruncatedSeries out(order);
    ExactRational power = 1;
    for (std::size_t k = 0; k <= order && k <= p; ++k) {
        out.coeffs_[k] = ExactRational(binomial(p, static_cast<long>(k))) * power;
        power *= s;
    }
    return out;
}

void TruncatedSeries::check_order(const TruncatedSeries& rhs) const
{
    if (order() != rhs.order())
        throw std::invalid_argument("truncated series of different orders");
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const
{
    check_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= order(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs_[0] == 0)
        throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
        ExactRational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& rhs) const
{
    check_order(rhs);
    return *this * rhs.inverse();
}

TruncatedSeries series_rational_coefficients(std::span<const PowerFactor> numerator,
                                             std::span<const ExactRational> denominator,
                                             std::size_t order)
{
    auto num = TruncatedSeries::one(order);
    for (const auto& f : numerator)
        num = num * TruncatedSeries::binomial_power(f.scalar, f.exponent, order);
    auto den = TruncatedSeries::one(order);
    for (const auto& s : denominator)
        den = den * TruncatedSeries::binomial_power(s, 1, order);
    return num / den;
}

} // namespace nefkit
