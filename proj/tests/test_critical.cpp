#include "support.hpp"

#include "arrcrit/error.hpp"
#include "arrcrit/linalg.hpp"
#include "arrcrit/singular_rank.hpp"

#include <doctest.h>

#include <random>

using namespace arrcrit;
using namespace testing;

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

ProjectivePoint point(std::vector<Scalar> c) { return ProjectivePoint::make(std::move(c)); }

// λ = a(e0+e5) + b(e1+e4) + c(e2+e3) on the braid fixture.
std::vector<Scalar> braid_lambda(long a, long b, long c) { return ints({a, b, c, c, b, a}); }

std::vector<Scalar> combine(const WeightBasis& w, const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> out(w.size(), Scalar(0));
    for (int i = 0; i < w.q(); ++i)
        for (int j = 0; j < w.size(); ++j) out[j] += coeffs[i] * Scalar(w.row(i)[j]);
    return out;
}

bool all_equations_vanish(const Arrangement& arr, const std::vector<Scalar>& lambda, const ProjectivePoint& x) {
    for (const auto& eq : critical_equations(arr))
        if (!evaluate_equation(arr, eq, lambda, x).is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("dlog evaluation") {
    const auto braid = load_arrangement("braid");
    const auto lam = braid_lambda(1, 1, -2);
    CHECK(all_zero(dlog_evaluate(braid, lam, point({q(1), q(2), q(4, 3)}))));
    CHECK_FALSE(all_zero(dlog_evaluate(braid, lam, point({q(1), q(2), q(3)}))));
    CHECK(all_zero(dlog_evaluate(braid, ints({0, 0, 0, 0, 0, 0}), point({q(1), q(2), q(5)}))));
    CHECK_THROWS_AS(dlog_evaluate(braid, lam, point({q(1), q(1), q(3)})), Error);
    CHECK_THROWS_AS(dlog_evaluate(braid, ints({1, 0, 0, 0, 0, 0}), point({q(1), q(2), q(5)})), Error);
}

TEST_CASE("projective points normalize") {
    const auto p = point({q(0), q(2), q(4)});
    CHECK(p.chart == 1);
    CHECK(p.coords == std::vector<Scalar>{q(0), q(1), q(2)});
    CHECK_THROWS_AS(point({q(0), q(0)}), Error);
}

TEST_CASE("dual syzygy matrix") {
    const auto braid = load_arrangement("braid");
    const auto b = dual_syzygy_matrix(braid);
    CHECK(b.size() == 3);
    CHECK(same_span(b, {ints({0, -1, 1, 0, 0, 1}), ints({-1, 0, 1, 0, 1, 0}), ints({-1, 1, 0, 1, 0, 0})}, 6));

    const auto boolean = rational_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(dual_syzygy_matrix(boolean).empty());

    const auto prism = load_arrangement("prism");
    auto pb = dual_syzygy_matrix(prism);
    CHECK(pb.size() == 2);
    pb.push_back(ints({1, 1, 1, -1, 0, 0}));
    CHECK(naive_rank(pb) == 2);

    for (const char* name : {"braid", "prism", "hessian", "cube", "pappus"}) {
        const auto arr = load_arrangement(name);
        const auto rows = dual_syzygy_matrix(arr);
        CHECK(static_cast<int>(rows.size()) == arr.n() - arr.ell());
        for (const auto& r : rows)
            for (int k = 0; k < arr.coords(); ++k) {
                Scalar s(0);
                for (int j = 0; j < arr.size(); ++j) s += r[j] * arr.form(j)[k];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("critical equation counts") {
    const auto braid = load_arrangement("braid");
    const auto eqs = critical_equations(braid);
    CHECK(eqs.size() == 15);
    for (const auto& e : eqs) CHECK(e.subset.size() == 4);
    const auto lam = braid_lambda(1, 1, -2);
    CHECK(all_equations_vanish(braid, lam, point({q(1), q(2), q(4, 3)})));
    CHECK(critical_equations(load_arrangement("prism")).size() == 20);

    // Without syzygies every equation is a single reciprocal λ_i / α_i.
    const auto boolean = rational_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto single = critical_equations(boolean);
    CHECK(single.size() == 3);
    for (const auto& e : single) CHECK(e.terms.size() == 1);
}

TEST_CASE("critical point tests agree on and off the braid critical curve") {
    const auto braid = load_arrangement("braid");
    std::mt19937_64 rng(211);
    std::uniform_int_distribution<long> pick(-5, 5);
    int on = 0;
    for (int trial = 0; trial < 60; ++trial) {
        long a = pick(rng), b = pick(rng);
        const long c = -a - b;
        if (a == 0 || b == 0 || c == 0) continue;
        const auto lam = braid_lambda(a, b, c);
        // a/x + b/y + c/z = 0 in the chart x = 1.
        const Scalar y = q(pick(rng), 1 + trial % 4);
        const Scalar denom = Scalar(a) + Scalar(b) / (y.is_zero() ? Scalar(1) : y);
        if (y.is_zero() || denom.is_zero()) continue;
        const auto x = point({q(1), y, Scalar(-c) / denom});
        if (!in_complement(braid, x)) continue;
        ++on;
        CHECK(verify_critical_point(braid, lam, x));
        CHECK(all_zero(dlog_evaluate(braid, lam, x)));
        CHECK(all_equations_vanish(braid, lam, x));

        const auto off = random_complement_point(braid, rng);
        const Scalar residue = Scalar(a) / off.coords[0] + Scalar(b) / off.coords[1] + Scalar(c) / off.coords[2];
        const bool crit = verify_critical_point(braid, lam, off);
        CHECK(crit == residue.is_zero());
        CHECK(crit == all_zero(dlog_evaluate(braid, lam, off)));
        CHECK(crit == all_equations_vanish(braid, lam, off));
    }
    CHECK(on > 20);
}

TEST_CASE("agreement on random weights and points") {
    std::mt19937_64 rng(223);
    for (const char* name : {"prism", "cube", "pappus"}) {
        const auto arr = load_arrangement(name);
        for (int trial = 0; trial < 10; ++trial) {
            const auto w = random_weight_basis(rng, arr.size(), 1);
            const auto lam = to_scalars(w.row(0));
            const auto x = random_complement_point(arr, rng);
            const bool crit = verify_critical_point(arr, lam, x);
            CHECK(crit == all_zero(dlog_evaluate(arr, lam, x)));
            CHECK(crit == all_equations_vanish(arr, lam, x));
        }
    }
}

TEST_CASE("scaling λ preserves verdicts") {
    const auto braid = load_arrangement("braid");
    std::mt19937_64 rng(227);
    const auto on = point({q(1), q(2), q(4, 3)});
    for (long s : {-3L, 2L, 7L}) {
        const auto lam = braid_lambda(s, s, -2 * s);
        CHECK(verify_critical_point(braid, lam, on));
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_complement_point(braid, rng);
            CHECK(verify_critical_point(braid, lam, x) == verify_critical_point(braid, braid_lambda(1, 1, -2), x));
        }
    }
}

TEST_CASE("a zero weight leaves no critical points in the complement") {
    const auto braid = load_arrangement("braid");
    const auto lam = braid_lambda(1, 0, -1);
    std::mt19937_64 rng(229);
    for (int trial = 0; trial < 40; ++trial) {
        // a/x + c/z = 0 forces z = x, which is a hyperplane of the arrangement.
        const auto x = point({q(1), q(trial + 2, 3), q(1)});
        CHECK_FALSE(in_complement(braid, x));
        CHECK_FALSE(verify_critical_point(braid, lam, random_complement_point(braid, rng)));
    }
}

TEST_CASE("fiber targets") {
    const auto braid = load_arrangement("braid");
    const auto h = homogenize(load_weights("braid", braid));
    const auto t = fiber_target(ints({1, -1, 1}), ints({2, 3, -5}));
    CHECK(t.target == ints({2, -3, -5}));
    CHECK(t.in_torus);
    CHECK(t.equations.size() == 3);

    const auto t0 = fiber_target(ints({1, -1, 1}), ints({1, 1, -2}));
    CHECK(on_fiber(braid, h, t0, point({q(1), q(2), q(4, 3)})));
    CHECK_FALSE(on_fiber(braid, h, t0, point({q(1), q(2), q(3)})));

    const auto cube = fiber_target(ints({1, 1, 1, 1}), ints({1, 1, -2, 0}));
    CHECK_FALSE(cube.in_torus);
    CHECK_THROWS_AS(fiber_target(ints({1, 0, 1}), ints({1, 1, -2})), Error);
    CHECK_THROWS_AS(fiber_target(ints({1, -1, 1}), ints({1, 1, 1})), Error);
    CHECK_THROWS_AS(fiber_target(ints({1, -1, 1}), ints({0, 0, 0})), Error);
}

TEST_CASE("points on a fiber are critical") {
    const auto braid = load_arrangement("braid");
    const auto h = homogenize(load_weights("braid", braid));
    for (const auto& abc : std::vector<std::array<long, 3>>{{1, 1, -2}, {2, -5, 3}, {-4, 1, 3}}) {
        const auto [a, b, c] = abc;
        const auto t = fiber_target(ints({1, -1, 1}), ints({a, b, c}));
        int hits = 0;
        for (long yn = -9; yn <= 9; ++yn) {
            // Φ_0 : Φ_1 = a : -b with Φ_0 = y - z and Φ_1 = y(1 - z), solved for z.
            const Scalar y = q(yn, 2);
            const Scalar den = Scalar(b) + Scalar(a) * y;
            if (y.is_zero() || den.is_zero()) continue;
            const auto x = point({q(1), y, y * Scalar(a + b) / den});
            if (!in_complement(braid, x)) continue;
            CHECK(on_fiber(braid, h, t, x));
            CHECK(verify_critical_point(braid, braid_lambda(a, b, c), x));
            ++hits;
        }
        CHECK(hits > 10);
    }
}

TEST_CASE("Hessian critical set is cut out by the residue equation") {
    const auto hessian = load_arrangement("hessian");
    const auto net = load_multinet("hessian", hessian);
    const auto h = characteristic_vectors(hessian, net);
    const auto lam = characteristic_basis(hessian, net);
    const Scalar z = zeta();
    std::mt19937_64 rng(233);
    std::uniform_int_distribution<long> pick(-4, 4);
    int checked = 0, critical = 0;
    while (checked < 30) {
        const auto x = point({q(1), q(pick(rng)) + q(pick(rng)) * z, q(pick(rng), 3) + q(pick(rng)) * z});
        if (!in_complement(hessian, x) || x.coords[1].is_zero() || x.coords[2].is_zero()) continue;
        std::vector<Scalar> p;
        for (const auto& nu : h.nu) p.push_back(expand_master_polynomial(hessian, nu).evaluate(x.coords));
        // Coefficients a_i = P_i(x) s_i with Σ s_i = 0 put x on crit; generic ones do not.
        const long s1 = pick(rng), s2 = pick(rng);
        const std::vector<Scalar> tuned{p[1] * Scalar(s1), p[2] * Scalar(s2), p[3] * Scalar(-s1 - s2)};
        const std::vector<Scalar> generic{Scalar(1), Scalar(2), Scalar(3)};
        for (const auto& a : {tuned, generic}) {
            if (std::any_of(a.begin(), a.end(), [](const Scalar& v) { return v.is_zero(); })) continue;
            const Scalar residue = a[0] / p[1] + a[1] / p[2] + a[2] / p[3];
            const bool crit = verify_critical_point(hessian, combine(lam, a), x);
            CHECK(crit == residue.is_zero());
            critical += crit;
        }
        ++checked;
    }
    CHECK(critical > 10);
}

TEST_CASE("singular points of the sub-Hessian map") {
    const auto sub = load_arrangement("subhessian");
    const auto lam = load_weights("subhessian", sub);
    const int p = flag_rank_condition(sub, lam).rank;
    CHECK(p == 1);
    for (int k = 0; k < 3; ++k) {
        std::vector<Scalar> c(3, Scalar(0));
        c[k] = Scalar(1);
        const auto x = point(c);
        const auto r = singular_point_test(sub, lam, x);
        CHECK(r.jacobian_rank == 0);
        CHECK(r.subspace_rank == 1);
        CHECK(r.is_singular_point);
        for (const auto& a : std::vector<std::vector<Scalar>>{ints({1, -1}), ints({2, 5}), ints({-3, 1})})
            CHECK(verify_critical_point(sub, combine(lam, a), x));
    }
    std::mt19937_64 rng(239);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_complement_point(sub, rng);
        CHECK_FALSE(singular_point_test(sub, lam, x).is_singular_point);
    }
}

TEST_CASE("braid map is nonsingular on the complement") {
    const auto braid = load_arrangement("braid");
    const auto lam = load_weights("braid", braid);
    std::mt19937_64 rng(241);
    for (int trial = 0; trial < 30; ++trial) {
        const auto r = singular_point_test(braid, lam, random_complement_point(braid, rng));
        CHECK(r.jacobian_rank == 1);
        CHECK_FALSE(r.is_singular_point);
    }
    CHECK_THROWS_AS(singular_point_test(braid, lam, point({q(1), q(1), q(2)})), Error);
}

TEST_CASE("induced arrangements") {
    const auto braid = load_arrangement("braid");
    const auto ib = induced_arrangement(braid, load_weights("braid", braid));
    CHECK(ib.p == 1);
    CHECK(ib.arrangement.size() == 3);
    CHECK(ib.euler_characteristic == -1);
    CHECK(ib.expected_count == 1);

    const auto hessian = load_arrangement("hessian");
    const auto ih = induced_arrangement(hessian, load_weights("hessian", hessian));
    CHECK(ih.p == 1);
    CHECK(ih.arrangement.size() == 4);
    CHECK(ih.euler_characteristic == -2);
    CHECK(ih.expected_count == 2);
    // Four distinct points: every pair of forms is independent.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(rank_of(ih.arrangement, {i, j}) == 2);

    const auto cube = load_arrangement("cube");
    const auto ic = induced_arrangement(cube, load_weights("cube", cube));
    CHECK(ic.p == 2);
    CHECK(ic.arrangement.size() == 4);
    CHECK(ic.expected_count == std::abs(characteristic_data(ic.arrangement).euler_characteristic));

    // The parametrization lands on the syzygy variety.
    for (const auto& [arr, ind, name] :
         std::vector<std::tuple<Arrangement, InducedArrangement, const char*>>{{braid, ib, "braid"}, {cube, ic, "cube"}}) {
        const auto h = homogenize(load_weights(name, arr));
        for (const auto& s : linear_syzygies(arr, h))
            for (std::size_t col = 0; col < ind.parametrization[0].size(); ++col) {
                Scalar v(0);
                for (std::size_t i = 0; i < s.size(); ++i) v += s[i] * ind.parametrization[i][col];
                CHECK(v.is_zero());
            }
    }
}
