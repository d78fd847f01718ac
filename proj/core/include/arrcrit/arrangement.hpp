#pragma once

#include "arrcrit/linalg.hpp"
#include "arrcrit/scalar.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace arrcrit {

/// Subset of hyperplane indices; bit i stands for H_i.
using Mask = std::uint32_t;
/// Sorted list of hyperplane indices.
using IndexSet = std::vector<int>;

/// Largest supported number of hyperplanes. The matroid keeps a rank table
/// over all subsets, so memory grows as 2^n.
inline constexpr int kMaxHyperplanes = 20;

Mask to_mask(std::span<const int> indices);
IndexSet to_indices(Mask m);
inline int popcount(Mask m) { return __builtin_popcount(m); }
/// Lexicographic order on the sorted index lists encoded by two masks.
bool mask_lex_less(Mask a, Mask b);

struct Flat {
    IndexSet members;
    int rank = 0;
    Mask mask = 0;

    friend bool operator==(const Flat& a, const Flat& b) { return a.mask == b.mask; }
};

/// Maximal chain X_1 < ... < X_{r-1} of proper nonempty flats, X_k of rank k.
struct Flag {
    std::vector<Flat> chain;
};

/// Maximal nested set of proper connected flats, elements ordered by (rank, members).
struct NestedSet {
    std::vector<Flat> elements;
};

struct CharacteristicData {
    std::vector<std::pair<Flat, long>> mobius;  // μ(X) for every flat, bottom included
    std::vector<long> poincare;                 // coefficient of t^k in π(A, t)
    long euler_characteristic = 0;              // χ of the projective complement
};

class Matroid;

/*
 * Ordered list of nonzero homogeneous linear forms α_0..α_n in ℓ+1
 * variables. Proportional forms are allowed. The matroid is built on
 * construction and shared between copies.
 */
class Arrangement {
public:
    Arrangement(Field field, std::vector<std::vector<Scalar>> forms);

    Field field() const { return field_; }
    /// Number of hyperplanes, n+1.
    int size() const { return static_cast<int>(forms_.size()); }
    /// Number of homogeneous coordinates, ℓ+1.
    int coords() const { return coords_; }
    int n() const { return size() - 1; }
    int ell() const { return coords_ - 1; }
    const std::vector<Scalar>& form(int i) const { return forms_.at(i); }
    const std::vector<std::vector<Scalar>>& forms() const { return forms_; }
    Matrix<Scalar> matrix() const { return Matrix<Scalar>(forms_); }
    Mask ground() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

    const Matroid& matroid() const;
    /// rank(A) == ℓ+1.
    bool essential() const;

    /// The forms with indices in `keep`, in that order.
    Arrangement restrict_to(std::span<const int> keep) const;

private:
    Field field_;
    int coords_ = 0;
    std::vector<std::vector<Scalar>> forms_;
    std::shared_ptr<const Matroid> matroid_;
};

/*
 * Combinatorics of the linear dependence matroid: lattice of flats, a rank
 * table over all subsets, circuits. All enumerations return the canonical
 * deterministic order (index sets ascending, lists lexicographic).
 */
class Matroid {
public:
    explicit Matroid(const Arrangement& arr);

    int size() const { return size_; }
    int rank() const { return rank_; }
    Mask ground() const { return ground_; }
    int rank(Mask subset) const { return rank_table_[subset]; }
    Mask closure(Mask subset) const;
    Flat flat(Mask closed) const;

    /// All flats ordered by rank, then lexicographically.
    const std::vector<Flat>& flats() const { return flats_; }
    std::vector<Flat> flats_of_rank(int r) const;
    const std::vector<IndexSet>& circuits() const { return circuits_; }
    const std::vector<Mask>& circuit_masks() const { return circuit_masks_; }

    /// Restriction to the flat is not a direct sum of two nonempty parts.
    bool is_connected(Mask flat) const;
    /// Proper nonempty connected flats, ordered as in flats().
    const std::vector<Flat>& connected_flats() const { return connected_; }

    std::vector<Flag> maximal_flags() const;
    std::vector<NestedSet> maximal_nested_sets() const;
    /// Inclusion-maximal nested sets; tested to coincide with maximal_nested_sets().
    std::vector<NestedSet> inclusion_maximal_nested_sets() const;
    /// Every antichain T of size >= 2 has join outside the building set and below the top.
    bool is_nested(std::span<const Mask> family) const;
    CharacteristicData characteristic_data() const;

private:
    int size_ = 0;
    int rank_ = 0;
    Mask ground_ = 0;
    std::vector<Flat> flats_;
    std::vector<std::uint8_t> rank_table_;
    std::vector<IndexSet> circuits_;
    std::vector<Mask> circuit_masks_;
    std::vector<Flat> connected_;
};

// Free-function surface.

int rank_of(const Arrangement& arr, const IndexSet& subset);
std::vector<IndexSet> circuits(const Arrangement& arr);
Flat closure(const Arrangement& arr, const IndexSet& subset);
std::vector<Flat> connected_flats(const Arrangement& arr);
std::vector<Flag> maximal_flags(const Arrangement& arr);
std::vector<NestedSet> maximal_nested_sets(const Arrangement& arr);
CharacteristicData characteristic_data(const Arrangement& arr);

} // namespace arrcrit
