#pragma once

#include "arrcrit/arrangement.hpp"
#include "arrcrit/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace arrcrit {

using WeightVector = std::vector<long>;

/// Ordered, linearly independent integer rows with zero coordinate sums.
class WeightBasis {
public:
    WeightBasis() = default;
    /// Throws on ragged rows, nonzero row sums or dependent rows.
    WeightBasis(int size, std::vector<WeightVector> rows);

    int size() const { return size_; }
    int q() const { return static_cast<int>(rows_.size()); }
    const std::vector<WeightVector>& rows() const { return rows_; }
    const WeightVector& row(int i) const { return rows_.at(i); }
    /// Column j of the q x (n+1) weight matrix.
    std::vector<long> column(int j) const;
    std::vector<std::vector<Scalar>> scalar_rows() const;

private:
    int size_ = 0;
    std::vector<WeightVector> rows_;
};

struct HomogenizedWeights {
    std::vector<std::vector<long>> nu;  // ν_0, ..., ν_q
    long degree = 0;
};

HomogenizedWeights homogenize(const WeightBasis& lambda);

struct EssentialReport {
    bool essential = false;
    IndexSet uncovered;
};

EssentialReport essential_check(const HomogenizedWeights& h, int size);
EssentialReport essential_check(const WeightBasis& lambda);

using Exponent = std::vector<int>;

/// Graded lexicographic order, largest monomial first.
struct GrLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Homogeneous polynomial with exact coefficients keyed by exponent vectors.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int vars) : vars_(vars) {}
    static Polynomial constant(int vars, const Scalar& c);
    static Polynomial linear(const std::vector<Scalar>& coeffs);

    int vars() const { return vars_; }
    const std::map<Exponent, Scalar, GrLexGreater>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);
    Scalar evaluate(const std::vector<Scalar>& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& c);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Human-readable form with variables x0, x1, ... ("x0^3 + x1^3 - 3*x0*x1*x2").
    std::string str() const;

private:
    int vars_ = 0;
    std::map<Exponent, Scalar, GrLexGreater> terms_;
};

using MasterPolynomial = Polynomial;

/// Π_j α_j^{ν_j}, expanded.
MasterPolynomial expand_master_polynomial(const Arrangement& arr, const std::vector<long>& nu);

/// All degree-d exponent vectors in `vars` variables, in graded-lex order.
std::vector<Exponent> monomials_of_degree(int vars, int d);

/// Reduced echelon basis of {b : Σ b_i Φ_{ν_i} = 0}.
std::vector<std::vector<Scalar>> linear_syzygies(const Arrangement& arr, const HomogenizedWeights& h);

struct Multinet {
    std::vector<IndexSet> blocks;
    std::vector<long> mult;  // one entry per hyperplane; unused hyperplanes keep 1
};

struct BaseLocusPoint {
    Flat flat;
    long n_x = 0;
};

struct MultinetReport {
    std::vector<long> block_degrees;
    long d = 0;
    std::vector<BaseLocusPoint> base_locus;
    bool axiom1 = false;
    bool axiom2 = false;
    bool axiom3 = false;
    std::vector<bool> block_connected;
    std::vector<std::string> messages;

    bool passed() const { return axiom1 && axiom2 && axiom3; }
};

/// Throws on overlapping blocks, empty blocks, bad indices or non-positive multiplicities.
MultinetReport multinet_check(const Arrangement& arr, const Multinet& net);

/// ν_i = Σ_{H ∈ block i} m(H) e_H. Throws unless the multinet passes.
HomogenizedWeights characteristic_vectors(const Arrangement& arr, const Multinet& net);
/// The rows ν_i - ν_0, i = 1..q.
WeightBasis characteristic_basis(const Arrangement& arr, const Multinet& net);

} // namespace arrcrit
