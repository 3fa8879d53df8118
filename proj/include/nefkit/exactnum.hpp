#pragma once

// Exact arithmetic layer: big integers, rationals, symmetric functions of
// integer lists and truncated power series over Q.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nefkit {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& v);

bool is_integral(const ExactRational& v);
// Throws std::domain_error when v has a non-trivial denominator.
ExactInt to_integer(const ExactRational& v);

ExactInt pow(const ExactInt& base, unsigned exponent);

/// C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.
ExactInt binomial(long n, long k);

/// h_k(values): sum of all degree-k monomials. h_0 = 1, h_k(empty) = 0 for k > 0.
ExactInt complete_homogeneous(long k, std::span<const long> values);

/// e_k(values). e_0 = 1, and 0 outside 0..values.size().
ExactInt elementary_symmetric(long k, std::span<const long> values);

// Power series in t truncated after t^order. Multiplication drops every
// term of degree > order, so all series combined must share one order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::vector<ExactRational> coefficients, std::size_t order);

    static TruncatedSeries one(std::size_t order);
    // (1 + s t)^p
    static TruncatedSeries binomial_power(const ExactRational& s, unsigned p,
                                          std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<ExactRational>& coefficients() const noexcept { return coeffs_; }
    const ExactRational& operator[](std::size_t i) const { return coeffs_.at(i); }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    // Requires a non-zero constant term.
    TruncatedSeries inverse() const;
    TruncatedSeries operator/(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    void check_order(const TruncatedSeries& rhs) const;

    std::vector<ExactRational> coeffs_;
};

struct PowerFactor {
    ExactRational scalar;  // s in (1 + s t)^p
    unsigned exponent = 1; // p
};

/// prod (1 + s t)^p / prod (1 + s' t), truncated at `order`.
TruncatedSeries series_rational_coefficients(std::span<const PowerFactor> numerator,
                                             std::span<const ExactRational> denominator,
                                             std::size_t order);

} // namespace nefkit
