#include "arrcrit/critical.hpp"

#include "arrcrit/error.hpp"
#include "arrcrit/linalg.hpp"
#include "arrcrit/singular_rank.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace arrcrit {

namespace {

Scalar evaluate_form(const std::vector<Scalar>& form, const std::vector<Scalar>& x) {
    Scalar s(0);
    for (std::size_t k = 0; k < form.size(); ++k)
        if (!form[k].is_zero() && !x[k].is_zero()) s += form[k] * x[k];
    return s;
}

void require_projective(const Arrangement& arr, const std::vector<Scalar>& lambda) {
    if (static_cast<int>(lambda.size()) != arr.size()) throw Error("weight vector has the wrong length");
    Scalar sum(0);
    for (const auto& l : lambda) sum += l;
    if (!sum.is_zero()) throw Error("weights do not sum to zero");
}

void require_dimension(const Arrangement& arr, const ProjectivePoint& x) {
    if (static_cast<int>(x.coords.size()) != arr.coords()) throw Error("point has the wrong number of coordinates");
}

std::vector<Scalar> reciprocal_row(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x) {
    std::vector<Scalar> u;
    for (int i = 0; i < arr.size(); ++i) u.push_back(lambda[i] / evaluate_form(arr.form(i), x.coords));
    return u;
}

} // namespace

ProjectivePoint ProjectivePoint::make(std::vector<Scalar> coords) {
    auto it = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == coords.end()) throw Error("projective point with all coordinates zero");
    ProjectivePoint p;
    p.chart = static_cast<int>(it - coords.begin());
    const Scalar inv = it->inverse();
    for (auto& c : coords) c *= inv;
    p.coords = std::move(coords);
    return p;
}

bool in_complement(const Arrangement& arr, const ProjectivePoint& x) {
    require_dimension(arr, x);
    for (int i = 0; i < arr.size(); ++i)
        if (evaluate_form(arr.form(i), x.coords).is_zero()) return false;
    return true;
}

void require_in_complement(const Arrangement& arr, const ProjectivePoint& x) {
    require_dimension(arr, x);
    for (int i = 0; i < arr.size(); ++i)
        if (evaluate_form(arr.form(i), x.coords).is_zero())
            throw Error("point lies on hyperplane " + std::to_string(i));
}

std::vector<Scalar> to_scalars(const std::vector<long>& v) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ProjectivePoint random_complement_point(const Arrangement& arr, std::mt19937_64& rng, int height) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Scalar> c{Scalar(1)};
        for (int k = 1; k < arr.coords(); ++k) c.emplace_back(mpq_class(num(rng), den(rng)));
        auto p = ProjectivePoint::make(std::move(c));
        if (in_complement(arr, p)) return p;
    }
    throw Error("no point of the complement found; increase the sampling height");
}

std::vector<Scalar> dlog_evaluate(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x) {
    require_projective(arr, lambda);
    require_in_complement(arr, x);
    const auto u = reciprocal_row(arr, lambda, x);
    std::vector<Scalar> out;
    for (int k = 0; k < arr.coords(); ++k) {
        if (k == x.chart) continue;
        Scalar s(0);
        for (int i = 0; i < arr.size(); ++i)
            if (!u[i].is_zero() && !arr.form(i)[k].is_zero()) s += u[i] * arr.form(i)[k];
        out.push_back(s);
    }
    return out;
}

std::vector<std::vector<Scalar>> dual_syzygy_matrix(const Arrangement& arr) {
    if (!arr.essential()) throw Error("dual syzygy matrix requires an essential arrangement");
    return left_kernel(arr.matrix());
}

std::vector<CriticalEquation> critical_equations(const Arrangement& arr) {
    const auto b = dual_syzygy_matrix(arr);
    const int r = static_cast<int>(b.size());
    const int n1 = arr.size();
    std::vector<CriticalEquation> out;
    IndexSet subset;
    std::function<void(int)> choose = [&](int next) {
        if (static_cast<int>(subset.size()) == r + 1) {
            CriticalEquation eq;
            eq.subset = subset;
            for (int pos = 0; pos <= r; ++pos) {
                Matrix<Scalar> minor(r, r);
                int col = 0;
                for (int k = 0; k <= r; ++k) {
                    if (k == pos) continue;
                    for (int row = 0; row < r; ++row) minor(row, col) = b[row][subset[k]];
                    ++col;
                }
                eq.terms.push_back({(pos & 1) ? -1 : 1, determinant(std::move(minor)), subset[pos]});
            }
            out.push_back(std::move(eq));
            return;
        }
        for (int j = next; j < n1; ++j) {
            subset.push_back(j);
            choose(j + 1);
            subset.pop_back();
        }
    };
    choose(0);
    return out;
}

Scalar evaluate_equation(const Arrangement& arr, const CriticalEquation& eq, const std::vector<Scalar>& lambda,
                         const ProjectivePoint& x) {
    require_projective(arr, lambda);
    require_in_complement(arr, x);
    Scalar s(0);
    for (const auto& t : eq.terms) {
        if (t.minor.is_zero() || lambda[t.index].is_zero()) continue;
        s += Scalar(t.sign) * t.minor * lambda[t.index] / evaluate_form(arr.form(t.index), x.coords);
    }
    return s;
}

bool verify_critical_point(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x) {
    require_projective(arr, lambda);
    require_in_complement(arr, x);
    const auto b = dual_syzygy_matrix(arr);
    const auto u = reciprocal_row(arr, lambda, x);
    Matrix<Scalar> m(b.empty() ? Matrix<Scalar>(0, arr.size()) : Matrix<Scalar>(b));
    const std::size_t before = m.rows();
    m.append_row(u);
    return bareiss_rank(std::move(m)) == before;
}

SingularPointResult singular_point_test(const Arrangement& arr, const WeightBasis& lambda, const ProjectivePoint& x,
                                        int subspace_rank) {
    if (lambda.size() != arr.size()) throw Error("weight rows do not match the arrangement size");
    require_in_complement(arr, x);
    SingularPointResult res;
    res.subspace_rank = subspace_rank;
    Matrix<Scalar> jac(0, arr.ell());
    for (const auto& row : lambda.rows()) jac.append_row(dlog_evaluate(arr, to_scalars(row), x));
    res.jacobian_rank = jac.rows() == 0 || jac.cols() == 0 ? 0 : static_cast<int>(bareiss_rank(std::move(jac)));
    res.is_singular_point = res.jacobian_rank < subspace_rank;
    return res;
}

SingularPointResult singular_point_test(const Arrangement& arr, const WeightBasis& lambda, const ProjectivePoint& x) {
    return singular_point_test(arr, lambda, x, flag_rank_condition(arr, lambda).rank);
}

FiberTarget fiber_target(const std::vector<Scalar>& syzygy, const std::vector<Scalar>& a) {
    if (syzygy.size() != a.size()) throw Error("syzygy and coefficient vector differ in length");
    if (a.size() < 2) throw Error("fiber target needs at least two coordinates");
    for (std::size_t i = 0; i < syzygy.size(); ++i)
        if (syzygy[i].is_zero()) throw Error("syzygy coefficient " + std::to_string(i) + " is zero");
    Scalar sum(0);
    bool nonzero = false;
    for (const auto& x : a) {
        sum += x;
        nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) throw Error("coefficient vector is zero");
    if (!sum.is_zero()) throw Error("coefficients do not sum to zero");

    FiberTarget t;
    for (std::size_t i = 0; i < a.size(); ++i) t.target.push_back(a[i] / syzygy[i]);
    t.in_torus = std::none_of(t.target.begin(), t.target.end(), [](const Scalar& s) { return s.is_zero(); });
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(a.size()); ++j) t.equations.push_back({i, j});
    return t;
}

bool on_fiber(const Arrangement& arr, const HomogenizedWeights& h, const FiberTarget& t, const ProjectivePoint& x) {
    require_dimension(arr, x);
    if (h.nu.size() != t.target.size()) throw Error("fiber target does not match the weights");
    std::vector<Scalar> values;
    for (const auto& nu : h.nu) values.push_back(expand_master_polynomial(arr, nu).evaluate(x.coords));
    for (const auto& eq : t.equations)
        if (t.target[eq.j] * values[eq.i] != t.target[eq.i] * values[eq.j]) return false;
    return true;
}

InducedArrangement induced_arrangement(const Arrangement& arr, const WeightBasis& lambda) {
    const int p = flag_rank_condition(arr, lambda).rank;
    const auto h = homogenize(lambda);
    const auto syz = linear_syzygies(arr, h);
    const int q = lambda.q();
    if (static_cast<int>(syz.size()) != q - p)
        throw Error("linear syzygies have dimension " + std::to_string(syz.size()) + ", expected " +
                    std::to_string(q - p) + "; the image closure is not linear");
    std::vector<std::vector<Scalar>> param(q + 1);
    if (syz.empty()) {
        for (int i = 0; i <= q; ++i) {
            param[i].assign(q + 1, Scalar(0));
            param[i][i] = Scalar(1);
        }
    } else {
        const auto basis = nullspace(Matrix<Scalar>(syz));
        for (int i = 0; i <= q; ++i)
            for (const auto& v : basis) param[i].push_back(v[i]);
    }
    for (int i = 0; i <= q; ++i)
        if (std::all_of(param[i].begin(), param[i].end(), [](const Scalar& s) { return s.is_zero(); }))
            throw Error("image closure lies in coordinate hyperplane " + std::to_string(i));
    Arrangement b(arr.field(), param);
    const long chi = b.matroid().characteristic_data().euler_characteristic;
    return InducedArrangement{param, std::move(b), p, chi, chi < 0 ? -chi : chi};
}

} // namespace arrcrit
