#include "support.hpp"

#include "arrcrit/error.hpp"

#include <doctest.h>

#include <random>

using namespace arrcrit;
using namespace testing;

namespace {

OSElement basis_element(int degree, const IndexSet& s, long c = 1) {
    OSElement e;
    e.degree = degree;
    e.add(to_mask(s), Scalar(c));
    return e;
}

OSElement random_element(const OSAlgebra& os, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    OSElement e;
    e.degree = k;
    for (Mask m : os.nbc_basis(k)) e.add(m, Scalar(coef(rng)));
    return e;
}

} // namespace

TEST_CASE("normal forms in the braid algebra") {
    const OSAlgebra os(load_arrangement("braid"));
    CHECK(os.normal_form({0, 1}) == basis_element(2, {0, 1}));
    // ∂e_{013} = e_{13} - e_{03} + e_{01}
    OSElement expected = basis_element(2, {0, 3});
    expected += basis_element(2, {0, 1}, -1);
    CHECK(os.normal_form({1, 3}) == expected);
    CHECK(os.normal_form({0, 1, 3}).is_zero());
    OSElement swapped = os.normal_form({1, 0});
    swapped *= Scalar(-1);
    CHECK(swapped == os.normal_form({0, 1}));
    CHECK_THROWS_AS(os.normal_form({1, 1}), Error);
    CHECK_THROWS_AS(os.normal_form({9}), Error);
}

TEST_CASE("NBC dimensions") {
    const OSAlgebra os(load_arrangement("braid"));
    CHECK(os.dimension(0) == 1);
    CHECK(os.dimension(1) == 6);
    CHECK(os.dimension(2) == 11);
    CHECK(os.dimension(3) == 6);
    CHECK(os.projective_dimension(1) == 5);
    for (const char* name : {"braid", "prism", "cube"}) {
        const auto arr = load_arrangement(name);
        const OSAlgebra alg(arr);
        const BruteOS brute(arr);
        for (int k = 0; k <= alg.top_degree(); ++k) CHECK(static_cast<int>(alg.dimension(k)) == brute.dimension(k));
        const auto cd = characteristic_data(arr);
        for (int k = 0; k <= alg.top_degree(); ++k) CHECK(static_cast<long>(alg.dimension(k)) == cd.poincare[k]);
    }
}

TEST_CASE("wedge products") {
    const OSAlgebra os(load_arrangement("braid"));
    const auto e0 = os.normal_form({0});
    CHECK(os.wedge(e0, e0).is_zero());
    const auto u = os.one_form(ints({1, 0, 0, 0, 0, 1})).element;
    const auto v = os.one_form(ints({0, 1, 0, 0, 1, 0})).element;
    CHECK((os.wedge(u, v) + os.wedge(v, u)).is_zero());

    const auto lambda = load_weights("braid", os.arrangement());
    const auto w1 = os.one_form(lambda.row(0)).element;
    const auto w2 = os.one_form(lambda.row(1)).element;
    CHECK(os.wedge(w1, w2).is_zero());
}

TEST_CASE("boundary") {
    const OSAlgebra os(load_arrangement("braid"));
    const auto f = os.one_form(ints({2, -1, 3, 0, 0, 5}));
    const auto d = os.boundary(f.element);
    CHECK(d.degree == 0);
    CHECK(d == basis_element(0, {}, 9));
    OSElement expect = basis_element(1, {1});
    expect += basis_element(1, {0}, -1);
    CHECK(os.boundary(basis_element(2, {0, 1})) == expect);
    CHECK(os.boundary(os.boundary(os.normal_form({0, 1, 2}))).is_zero());
}

TEST_CASE("boundary is a graded derivation") {
    std::mt19937_64 rng(3);
    for (const char* name : {"braid", "prism", "cube"}) {
        const OSAlgebra os(load_arrangement(name));
        for (int trial = 0; trial < 20; ++trial) {
            for (int a = 1; a < os.top_degree(); ++a) {
                const int b = 1;
                const auto u = random_element(os, a, rng);
                const auto v = random_element(os, b, rng);
                OSElement rhs = os.wedge(os.boundary(u), v);
                OSElement second = os.wedge(u, os.boundary(v));
                second *= Scalar((a & 1) ? -1 : 1);
                rhs += second;
                const auto lhs = os.boundary(os.wedge(u, v));
                OSElement diff = lhs;
                OSElement neg = rhs;
                neg *= Scalar(-1);
                diff += neg;
                CHECK(diff.is_zero());
            }
        }
    }
}

TEST_CASE("one-forms square to zero") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> w(-4, 4);
    for (const char* name : {"braid", "hessian", "simplex8"}) {
        const OSAlgebra os(load_arrangement(name));
        for (int trial = 0; trial < 20; ++trial) {
            WeightVector v(os.arrangement().size());
            for (auto& x : v) x = w(rng);
            const auto f = os.one_form(v).element;
            CHECK(os.wedge(f, f).is_zero());
        }
    }
}

TEST_CASE("monomials vanish exactly on dependent sets") {
    for (const char* name : {"braid", "prism", "cube"}) {
        const auto arr = load_arrangement(name);
        const OSAlgebra os(arr);
        for (Mask s = 1; s <= arr.ground(); ++s) {
            if (popcount(s) > 4) continue;
            const auto idx = to_indices(s);
            CHECK(os.normal_form(idx).is_zero() == (naive_rank_of(arr, idx) < static_cast<int>(idx.size())));
        }
    }
}

TEST_CASE("normal forms agree with the exterior-algebra quotient") {
    const auto arr = load_arrangement("braid");
    const OSAlgebra os(arr);
    const BruteOS brute(arr);
    for (Mask s = 1; s <= arr.ground(); ++s) {
        const int k = popcount(s);
        if (k > 3) continue;
        // e_S minus its normal form must lie in the ideal.
        BruteOS::Vec diff{{s, Scalar(1)}};
        for (const auto& [m, c] : os.normal_form(to_indices(s)).coords) diff[m] -= c;
        for (auto it = diff.begin(); it != diff.end();) it = it->second.is_zero() ? diff.erase(it) : std::next(it);
        CHECK(brute.in_ideal(diff, k));
    }
}

TEST_CASE("cohomology dimensions") {
    const auto braid = load_arrangement("braid");
    const OSAlgebra os(braid);
    const auto d = os.cohomology_dimension(os.one_form(ints({1, 1, -2, -2, 1, 1})), 1);
    CHECK(d.z == 2);
    CHECK(d.b == 1);
    CHECK(d.h == 1);
    CHECK_THROWS_AS(os.cohomology_dimension(os.one_form(ints({0, 0, 0, 0, 0, 0})), 1), Error);
    CHECK_THROWS_AS(os.cohomology_dimension(os.one_form(ints({1, 0, 0, 0, 0, 0})), 1), Error);
    CHECK_THROWS_AS(os.cohomology_dimension(os.one_form(ints({1, -1, 0, 0, 0, 0})), 3), Error);

    const OSAlgebra s8(load_arrangement("simplex8"));
    const auto w = s8.one_form(ints({1, 1, 1, 1, -1, -1, -1, -1}));
    CHECK(s8.cohomology_dimension(w, 1).h == 0);
    CHECK(s8.cohomology_dimension(w, 2).h == 1);

    const auto hessian = load_arrangement("hessian");
    const OSAlgebra hs(hessian);
    const auto lam = load_weights("hessian", hessian);
    WeightVector omega(hessian.size(), 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < hessian.size(); ++j) omega[j] += (i + 1) * lam.row(i)[j];
    CHECK(hs.cohomology_dimension(hs.one_form(omega), 1).h == 2);
}

TEST_CASE("Z minus B is nonnegative") {
    std::mt19937_64 rng(17);
    for (const char* name : {"braid", "prism", "cube"}) {
        const auto arr = load_arrangement(name);
        const OSAlgebra os(arr);
        for (int trial = 0; trial < 30; ++trial) {
            const auto w = random_weight_basis(rng, arr.size(), 1);
            for (int p = 0; p < os.top_degree(); ++p) {
                const auto d = os.cohomology_dimension(os.one_form(w.row(0)), p);
                CHECK(d.z >= d.b);
                CHECK(d.h == d.z - d.b);
            }
        }
    }
}

TEST_CASE("trivial cocycles") {
    const auto braid = load_arrangement("braid");
    const OSAlgebra os(braid);
    const auto omega = os.one_form(ints({1, 1, -2, -2, 1, 1}));
    const auto lambda = load_weights("braid", braid);
    // ω itself is trivial; another element of D is a nontrivial cocycle.
    CHECK(os.is_trivial_cocycle(omega, omega.element));
    const auto eta = os.one_form(lambda.row(0));
    CHECK(os.wedge(omega.element, eta.element).is_zero());
    CHECK_FALSE(os.is_trivial_cocycle(omega, eta.element));
    CHECK_THROWS_AS(os.is_trivial_cocycle(omega, os.one_form(ints({1, -1, 0, 0, 0, 0})).element), Error);
}

TEST_CASE("subspace wedge rank") {
    const auto braid = load_arrangement("braid");
    auto r = subspace_wedge_rank(braid, load_weights("braid", braid));
    CHECK(r.is_singular);
    CHECK(r.rank == 1);
    const auto prism = load_arrangement("prism");
    r = subspace_wedge_rank(prism, load_weights("prism", prism));
    CHECK_FALSE(r.is_singular);
    CHECK(r.rank == 3);
    const auto hessian = load_arrangement("hessian");
    r = subspace_wedge_rank(hessian, load_weights("hessian", hessian));
    CHECK(r.is_singular);
    CHECK(r.rank == 1);
}

TEST_CASE("wedge rank matches the exterior-algebra oracle") {
    std::mt19937_64 rng(23);
    for (const char* name : {"braid", "prism"}) {
        const auto arr = load_arrangement(name);
        const OSAlgebra os(arr);
        const BruteOS brute(arr);
        for (int trial = 0; trial < 12; ++trial) {
            const auto w = random_weight_basis(rng, arr.size(), 2 + trial % 2);
            CHECK(os.subspace_wedge_rank(w).rank == brute.wedge_rank(w.scalar_rows()));
        }
    }
}

TEST_CASE("verdicts do not depend on the hyperplane order") {
    std::mt19937_64 rng(31);
    const auto arr = load_arrangement("prism");
    std::vector<int> perm{5, 3, 1, 0, 4, 2};
    std::vector<std::vector<Scalar>> forms;
    for (int i : perm) forms.push_back(arr.form(i));
    const Arrangement permuted(arr.field(), forms);
    const OSAlgebra a(arr), b(permuted);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = random_weight_basis(rng, arr.size(), 2 + trial % 2);
        std::vector<WeightVector> rows;
        for (const auto& r : w.rows()) {
            WeightVector p;
            for (int i : perm) p.push_back(r[i]);
            rows.push_back(p);
        }
        const WeightBasis wp(arr.size(), rows);
        const auto ra = a.subspace_wedge_rank(w), rb = b.subspace_wedge_rank(wp);
        CHECK(ra.rank == rb.rank);
        CHECK(ra.is_singular == rb.is_singular);
        const auto da = a.cohomology_dimension(a.one_form(w.row(0)), 1);
        const auto db = b.cohomology_dimension(b.one_form(wp.row(0)), 1);
        CHECK(da.h == db.h);
    }
}
