#pragma once

// Chern numbers and Euler characteristics of smooth complete intersections
// in P^N and of smooth hypersurfaces in weighted projective space.

#include "nefkit/exactnum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nefkit {

class NegativeBetti : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonIntegralResult : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Complete intersection of type (d_1, ..., d_r) and dimension n, stored in
// canonical form: degrees sorted ascending with hyperplanes (degree 1) dropped.
// No degrees means P^n.
class CIType {
public:
    // Throws std::invalid_argument for degrees < 1 or dimension < 0.
    CIType(std::vector<long> degrees, long dimension);

    const std::vector<long>& degrees() const noexcept { return degrees_; }
    long dimension() const noexcept { return dimension_; }
    std::size_t codimension() const noexcept { return degrees_.size(); }
    long ambient_dimension() const noexcept
    {
        return dimension_ + static_cast<long>(degrees_.size());
    }
    // d_1 * ... * d_r, i.e. the degree of X in P^{n+r}.
    ExactInt degree() const;

    bool is_projective_space() const noexcept { return degrees_.empty(); }
    bool is_quadric() const noexcept { return degrees_ == std::vector<long>{2}; }
    bool is_two_quadrics() const noexcept { return degrees_ == std::vector<long>{2, 2}; }

    std::string to_string() const;

    auto operator<=>(const CIType&) const = default;

private:
    std::vector<long> degrees_;
    long dimension_;
};

// Hypersurface of degree d in P(a_0, ..., a_m), m >= 4.
class WeightedHypersurface {
public:
    WeightedHypersurface(std::vector<long> weights, long degree);

    const std::vector<long>& weights() const noexcept { return weights_; }
    long degree() const noexcept { return degree_; }
    long dimension() const noexcept { return static_cast<long>(weights_.size()) - 2; }

private:
    std::vector<long> weights_;
    long degree_;
};

struct BettiTable {
    std::vector<ExactInt> betti; // b_0 .. b_{2n}

    ExactInt euler_characteristic() const;
};

// Integer polynomial, coefficient i belongs to t^i.
using IntPolynomial = std::vector<ExactInt>;

// deg c_n via the closed binomial / complete-homogeneous sum.
ExactInt euler_ci_formula(const CIType& ci);
// deg c_n as prod(d) * [t^n] (1+t)^{n+r+1} / prod(1 + d_j t).
ExactInt euler_ci_series(const CIType& ci);
// deg c_n via chi(d_1..d_r; n) = d_1 chi(d_2..; n) - (d_1 - 1) chi(d_1..; n-1).
ExactInt euler_ci_recursive(const CIType& ci);

/// [deg(c_k . h^{n-k}) for k = 0..n]
std::vector<ExactInt> chern_degrees_ci(const CIType& ci);

/// b(n, r) = (-1)^n deg c_n(r quadrics, dim n) / 2^r, evaluated by the
/// recursion b(n,r) = b(n,r-1) + b(n-1,r).
ExactRational quadrics_b(long n, long r);

BettiTable betti_ci(const CIType& ci);
/// sum_i b_i (-t)^i
IntPolynomial poincare_polynomial_ci(const CIType& ci);

ExactRational euler_weighted(const WeightedHypersurface& wh);

/// Closed forms for del Pezzo varieties of degree 1 and 2 and dimension n >= 3.
ExactInt euler_delpezzo_closed(long n, int degree);

} // namespace nefkit
