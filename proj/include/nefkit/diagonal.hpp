#pragma once

// Nef-diagonal verdicts for curves, complete intersections and del Pezzo
// varieties, together with the exhaustive verification scan.

#include "nefkit/chern.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nefkit {

enum class Status { NotNef, Nef, Open };

enum class Reason {
    NegativeSelfIntersection,
    ProjectionBound,
    NegativeEffectivePair,
    ExceptionTable,
    BirationalContraction,
    Homogeneous,
    FakeProjectiveSpace,
    GroupVariety,
    OpenQuestion,
    NonNegativeOrbitPairings,
    Unclassified,
};

std::string_view to_string(Status s);
std::string_view to_string(Reason r);
Status status_from_string(std::string_view s);
Reason reason_from_string(std::string_view s);

struct Witness {
    std::optional<ExactInt> euler; // deg c_n
    std::optional<ExactInt> bound; // (n+1) * degree of the finite projection
    std::string class_a;
    std::string class_b;
    std::optional<ExactInt> value; // intersection number of class_a and class_b
    std::string table_entry;

    bool operator==(const Witness&) const = default;
};

struct Verdict {
    Status status = Status::Open;
    Reason reason = Reason::Unclassified;
    Witness witness;
    std::string criterion;
    std::string detail;

    bool operator==(const Verdict&) const = default;
};

class InvalidDelPezzo : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PairingWitness {
    std::string a;
    std::string b;
    ExactInt value;
};

// One row of the table of known non-nef cases that the Euler
// characteristic criteria cannot detect.
struct ExceptionEntry {
    std::string name;
    // complete intersection pattern
    std::optional<std::vector<long>> degrees;
    std::optional<long> dimension;
    std::optional<long> dimension_parity; // 0 even, 1 odd
    // del Pezzo pattern
    std::optional<int> delpezzo_degree;
    std::optional<PairingWitness> witness;
    std::string justification;

    bool matches(const CIType& ci) const;
    bool matches_delpezzo(long n, int degree) const;
};

// Throws std::invalid_argument on malformed input.
std::vector<ExceptionEntry> parse_exception_table(std::string_view json_text);
// The embedded table shipped with the library.
const std::vector<ExceptionEntry>& exception_table();

Verdict verdict_curve(long genus);

struct ProjectionCheck {
    bool violated = false;
    ExactInt euler;
    ExactInt bound;
};

/// deg c_n > (n+1) * prod(d_i): a general linear projection X -> P^n has
/// degree prod(d_i).
ProjectionCheck projection_bound_violated(const CIType& ci);

// Criteria are tried in a fixed order: special families, exception table,
// negative Euler characteristic, projection bound.
Verdict verdict_ci(const CIType& ci);

struct DelPezzoRow {
    int degree;
    long min_dimension;
    std::optional<long> max_dimension; // nullopt: unbounded
    std::string description;
};

const std::vector<DelPezzoRow>& delpezzo_table();
bool delpezzo_exists(long n, int degree);
/// Degree-6 variants valid in dimension n.
std::vector<std::string> delpezzo_variants(long n, int degree);

Verdict verdict_delpezzo(long n, int degree, std::optional<std::string> variant = std::nullopt);

bool nef_big_filter_ci(const CIType& ci);
bool nef_big_filter_delpezzo(long n, int degree);

struct ObstructionReport {
    long n = 0;
    IntPolynomial p_x; // (2,2) of dimension 2n+1
    IntPolynomial p_f; // (2,2) of dimension 2n-2
    IntPolynomial product;
    IntPolynomial quotient;
    IntPolynomial remainder; // modulo 1 + t^2, degree < 2
    bool remainder_nonzero = false;
};

ObstructionReport cp_fibration_obstruction(long n);

// Polynomial helpers with coefficient i for t^i.
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
// Division by a monic divisor; returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a,
                                                     const IntPolynomial& divisor);

struct ScanOptions {
    long max_dimension = 12;
    long max_degree = 6;
    long max_codimension = 5;
    long max_quadric_codimension = 8;
};

struct ScanReport {
    ScanOptions options;
    std::size_t varieties = 0;
    // "Nef/Homogeneous", "NotNef/ProjectionBound", ...
    std::map<std::string, std::size_t> verdict_counts;
    // law name -> number of instances checked
    std::map<std::string, std::size_t> law_checks;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

class ScanViolation : public std::runtime_error {
public:
    ScanViolation(const std::string& what, ScanReport report)
        : std::runtime_error(what), report_(std::move(report))
    {
    }
    const ScanReport& report() const noexcept { return report_; }

private:
    ScanReport report_;
};

/// Runs every sign/bound law and verdict_ci over all canonical types in range.
/// Throws ScanViolation if any check fails.
ScanReport scan_ci(const ScanOptions& options);

/// The set of complete intersections whose diagonal may be nef.
bool in_ci_golden_list(const CIType& ci);

} // namespace nefkit
