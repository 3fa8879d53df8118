#pragma once

// Cycle classes with an integer intersection pairing, exact dual cones, and
// the orbit-closure nef check for spherical varieties.

#include "nefkit/diagonal.hpp"
#include "nefkit/exactnum.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nefkit {

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public DatasetError {
public:
    using DatasetError::DatasetError;
};

class InconsistentPairing : public DatasetError {
public:
    using DatasetError::DatasetError;
};

class MissingPairing : public DatasetError {
public:
    using DatasetError::DatasetError;
};

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Partition = std::array<long, 2>;

struct SchubertClass {
    std::string label;
    std::optional<Partition> partition;
    long codim = 0;

    bool operator==(const SchubertClass&) const = default;
};

/// Partitions indexing Schubert classes of G_w(2, C^{2n+1}): (n-2)-strict
/// with 2n-1 >= l1 >= l2 >= 0, or exactly (2n-1, -1).
bool is_odd_symplectic_partition(long n, const Partition& p);

class CycleDataset {
public:
    CycleDataset(std::string variety, long dimension, std::vector<SchubertClass> classes,
                 std::optional<long> symplectic_n = std::nullopt);

    // Throws InconsistentPairing on codimension mismatch or a conflicting
    // duplicate, SchemaError on unknown labels.
    void add_pairing(const std::string& a, const std::string& b, const ExactInt& value);

    const std::string& variety() const noexcept { return variety_; }
    long dimension() const noexcept { return dimension_; }
    std::optional<long> symplectic_n() const noexcept { return symplectic_n_; }
    const std::vector<SchubertClass>& classes() const noexcept { return classes_; }
    std::size_t pairing_count() const noexcept { return pairings_.size(); }

    const SchubertClass& find(std::string_view label) const;
    std::vector<SchubertClass> classes_of_codim(long codim) const;
    std::optional<ExactInt> lookup(std::string_view a, std::string_view b) const;

private:
    std::string variety_;
    long dimension_;
    std::optional<long> symplectic_n_;
    std::vector<SchubertClass> classes_;
    // key ordered so that first <= second
    std::map<std::pair<std::string, std::string>, ExactInt> pairings_;
};

CycleDataset load_dataset(std::string_view document);
CycleDataset load_dataset_file(const std::filesystem::path& path);

// Datasets compiled into the library.
const CycleDataset& odd_symplectic_g2c5_dataset();
const CycleDataset& grassmannian_g2c5_dataset();

/// deg(a . b); throws MissingPairing when absent or codimensions do not add up.
ExactInt pair(const SchubertClass& a, const SchubertClass& b, const CycleDataset& ds);

/// deg(tau_{a,b} . tau_{2n-1,-1}) = (-1)^{a-1} on G_w(2, C^{2n+1}).
ExactInt tau_top_pairing(long n, long a, long b);

using IntVector = std::vector<ExactInt>;
using IntMatrix = std::vector<IntVector>;

IntVector primitive(IntVector v);

struct RationalCone {
    std::size_t dimension = 0;
    std::vector<IntVector> generators; // primitive, sorted
    bool full_dimensional = false;

    bool operator==(const RationalCone&) const = default;
};

/// Cone spanned by `generators` reduced to its extremal rays.
RationalCone cone_from_generators(std::span<const IntVector> generators, std::size_t dimension);

/// { x : x . (M g) >= 0 for every effective generator g }. Rows of M index
/// the output basis, columns the basis of the effective generators. Throws
/// std::invalid_argument when the effective generators do not span.
RationalCone dual_cone(std::span<const IntVector> effective_generators, const IntMatrix& pairing);

/// Dual with respect to the standard inner product.
RationalCone dual_cone(std::span<const IntVector> generators);

/// x lies in the (full-dimensional) cone.
bool cone_contains(const RationalCone& cone, const IntVector& x);
bool cone_contains(const RationalCone& outer, const RationalCone& inner);

struct CodimCones {
    long codim = 0;
    std::vector<std::string> basis; // labels of the codim-k classes
    RationalCone effective;
    RationalCone nef;
};

/// Effective cone (spanned by the classes) and nef cone (dual of the
/// complementary effective cone) in codimension k.
CodimCones cones_in_codim(const CycleDataset& ds, long codim);

/// "tau(2,0)+tau(3,-1)", "2*a-b", ...
std::string format_combination(const std::vector<std::string>& basis, const IntVector& coeffs);

struct DelPezzo5Cones {
    CodimCones codim2;
    CodimCones codim3;
};

/// Nef and pseudoeffective cones of codimension 2 and 3 on the del Pezzo
/// 5-fold of degree 5, from the compiled-in pairing data.
DelPezzo5Cones delpezzo5_cones();

/// Nef when every stored complementary pairing is >= 0; otherwise NotNef with
/// the first negative pair (classes in dataset order) as witness.
Verdict spherical_nef_diagonal_check(const CycleDataset& ds);

} // namespace nefkit
