#pragma once

#include "arrcrit/arrangement.hpp"
#include "arrcrit/scalar.hpp"
#include "arrcrit/weights.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace arrcrit {

struct MaskLexLess {
    bool operator()(Mask a, Mask b) const { return mask_lex_less(a, b); }
};

/// Homogeneous element of the central Orlik-Solomon algebra in NBC coordinates.
struct OSElement {
    int degree = 0;
    std::map<Mask, Scalar, MaskLexLess> coords;

    bool is_zero() const { return coords.empty(); }
    void add(Mask basis, const Scalar& c);
    OSElement& operator+=(const OSElement& o);
    OSElement& operator*=(const Scalar& c);
    friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
    friend bool operator==(const OSElement& a, const OSElement& b) {
        return a.degree == b.degree && a.coords == b.coords;
    }
};

struct OneForm {
    std::vector<Scalar> weights;
    OSElement element;
    bool projective = false;
};

struct CohomologyDims {
    std::size_t z = 0;
    std::size_t b = 0;
    std::size_t h = 0;
};

struct WedgeRank {
    bool is_singular = false;
    int rank = 0;
};

/*
 * A(cA) = E/I with the NBC basis of the input hyperplane order. Monomials are
 * straightened by repeatedly replacing the lexicographically least broken
 * circuit; reductions are memoized, so one instance should be reused.
 * The NBC basis is built on construction. Thread-safe.
 */
class OSAlgebra {
public:
    explicit OSAlgebra(const Arrangement& arr);

    const Arrangement& arrangement() const { return arr_; }
    int top_degree() const { return arr_.matroid().rank(); }

    /// NBC sets of size k in lexicographic order.
    const std::vector<Mask>& nbc_basis(int k) const;
    std::size_t dimension(int k) const { return nbc_basis(k).size(); }
    /// Dimension of the projective algebra ker(∂) in degree k.
    std::size_t projective_dimension(int k) const;

    /// Class of e_{s_1} ... e_{s_k} in the given order. Throws on a repeated index.
    OSElement normal_form(const IndexSet& monomial) const;
    OSElement wedge(const OSElement& u, const OSElement& v) const;
    OSElement boundary(const OSElement& u) const;
    OneForm one_form(const std::vector<Scalar>& weights) const;
    OneForm one_form(const WeightVector& weights) const;

    /// Basis of ker(∂) in degree k: the elements ∂(e_0 e_S), S NBC with 0 ∉ S.
    std::vector<OSElement> projective_basis(int k) const;
    std::vector<Scalar> to_vector(const OSElement& u) const;

    CohomologyDims cohomology_dimension(const OneForm& omega, int p) const;
    /// ψ ∈ ω ∧ A^{p-1}(A) for a projective cocycle ψ of degree p.
    bool is_trivial_cocycle(const OneForm& omega, const OSElement& psi) const;
    WedgeRank subspace_wedge_rank(const WeightBasis& lambda) const;

private:
    using Expansion = std::vector<std::pair<Mask, mpz_class>>;
    const Expansion& reduce(Mask s) const;
    Matrix<Scalar> multiplication_matrix(const OneForm& omega, int p) const;

    Arrangement arr_;
    std::vector<std::pair<Mask, int>> broken_circuits_;  // (C - min C, min C), lexicographic
    std::vector<std::vector<Mask>> nbc_;
    std::vector<std::unordered_map<Mask, std::size_t>> nbc_index_;
    mutable std::unordered_map<Mask, Expansion> memo_;
    mutable std::recursive_mutex mu_;
};

// Free-function surface, each building a fresh algebra.
OSElement normal_form(const Arrangement& arr, const IndexSet& monomial);
CohomologyDims cohomology_dimension(const Arrangement& arr, const OneForm& omega, int p);
WedgeRank subspace_wedge_rank(const Arrangement& arr, const WeightBasis& lambda);

} // namespace arrcrit
