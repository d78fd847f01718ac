#pragma once

#include "arrcrit/arrangement.hpp"
#include "arrcrit/weights.hpp"

#include <random>
#include <vector>

namespace arrcrit {

/// Point of P^ℓ scaled so that its first nonzero coordinate is 1.
struct ProjectivePoint {
    std::vector<Scalar> coords;
    int chart = 0;

    static ProjectivePoint make(std::vector<Scalar> coords);
};

/// Throws unless no form vanishes at x.
void require_in_complement(const Arrangement& arr, const ProjectivePoint& x);
bool in_complement(const Arrangement& arr, const ProjectivePoint& x);

std::vector<Scalar> to_scalars(const std::vector<long>& v);

/// Rational point of U with first coordinate 1 and the others p/q, |p| <= height, 1 <= q <= height.
ProjectivePoint random_complement_point(const Arrangement& arr, std::mt19937_64& rng, int height = 6);

/// Σ λ_i ∇f_i / f_i in the affine chart of x (length ℓ, chart coordinate omitted).
std::vector<Scalar> dlog_evaluate(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x);

/// Reduced echelon basis of {b : Σ b_j α_j = 0}; n - ℓ rows for an essential arrangement.
std::vector<std::vector<Scalar>> dual_syzygy_matrix(const Arrangement& arr);

struct EquationTerm {
    int sign = 1;
    Scalar minor;
    int index = 0;
};

/// Σ_{i ∈ I} sign · b_{I - i} · λ_i / α_i(x) = 0.
struct CriticalEquation {
    IndexSet subset;
    std::vector<EquationTerm> terms;
};

/// One equation per (n-ℓ+1)-subset I: the maximal minors of [λ_i/α_i ; B] expanded along the first row.
std::vector<CriticalEquation> critical_equations(const Arrangement& arr);
Scalar evaluate_equation(const Arrangement& arr, const CriticalEquation& eq, const std::vector<Scalar>& lambda,
                         const ProjectivePoint& x);

/// (λ_i / α_i(x)) lies in the row space of the dual syzygy matrix.
bool verify_critical_point(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x);

struct SingularPointResult {
    int jacobian_rank = 0;
    int subspace_rank = 0;
    bool is_singular_point = false;
};

/// Rank of the dlog Jacobian of (Φ_{ξ_1}, ..., Φ_{ξ_q}) at x against the rank of D.
SingularPointResult singular_point_test(const Arrangement& arr, const WeightBasis& lambda, const ProjectivePoint& x);
SingularPointResult singular_point_test(const Arrangement& arr, const WeightBasis& lambda, const ProjectivePoint& x,
                                        int subspace_rank);

/// target[j] · Φ_{ν_i}(x) = target[i] · Φ_{ν_j}(x).
struct LevelEquation {
    int i = 0;
    int j = 0;
};

struct FiberTarget {
    std::vector<Scalar> target;  // [a_0/b_0 : ... : a_q/b_q]
    std::vector<LevelEquation> equations;
    bool in_torus = false;
};

FiberTarget fiber_target(const std::vector<Scalar>& syzygy, const std::vector<Scalar>& a);
/// All level-set equations hold at x.
bool on_fiber(const Arrangement& arr, const HomogenizedWeights& h, const FiberTarget& t, const ProjectivePoint& x);

struct InducedArrangement {
    std::vector<std::vector<Scalar>> parametrization;  // (q+1) x (p+1), rows are the forms β_i
    Arrangement arrangement;
    int p = 0;
    long euler_characteristic = 0;
    long expected_count = 0;
};

/// Linear image closure of Φ_Λ cut out by the linear syzygies, pulled back to P^p.
InducedArrangement induced_arrangement(const Arrangement& arr, const WeightBasis& lambda);

} // namespace arrcrit
