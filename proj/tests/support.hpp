#pragma once

// Fixture loading and independent oracles shared by the unit and acceptance tests.

#include "arrcrit/arrangement.hpp"
#include "arrcrit/critical.hpp"
#include "arrcrit/io.hpp"
#include "arrcrit/os_algebra.hpp"
#include "arrcrit/weights.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#ifndef ARRCRIT_FIXTURE_DIR
#error "ARRCRIT_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace testing {

using namespace arrcrit;

inline std::string fixture(const std::string& name) { return std::string(ARRCRIT_FIXTURE_DIR) + "/" + name; }

inline Arrangement load_arrangement(const std::string& name) {
    return io::parse_arrangement(io::read_json_file(fixture(name + ".json")));
}

inline WeightBasis load_weights(const std::string& name, const Arrangement& arr) {
    return io::parse_weights(io::read_json_file(fixture(name + "_lambda.json")), arr.size());
}

inline Multinet load_multinet(const std::string& name, const Arrangement& arr) {
    return io::parse_multinet(io::read_json_file(fixture(name + "_multinet.json")), arr.size());
}

inline Field zeta_field() { return Field::extension({1, 1, 1}); }
inline Scalar zeta() { return Scalar::generator(zeta_field()); }

inline std::vector<Scalar> ints(std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline Arrangement rational_arrangement(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> f;
    for (const auto& r : rows) {
        std::vector<Scalar> s;
        for (long x : r) s.emplace_back(x);
        f.push_back(std::move(s));
    }
    return Arrangement(Field::rational(), std::move(f));
}

// Plain Gaussian elimination over the field, written independently of linalg.hpp.
inline int naive_rank(std::vector<std::vector<Scalar>> m) {
    int r = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Scalar f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int naive_rank_of(const Arrangement& arr, const IndexSet& s) {
    std::vector<std::vector<Scalar>> m;
    for (int i : s) m.push_back(arr.form(i));
    return naive_rank(m);
}

// Circuits by brute force over all subsets with the naive rank.
inline std::vector<IndexSet> naive_circuits(const Arrangement& arr) {
    std::vector<IndexSet> out;
    const int n = arr.size();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        const IndexSet idx = to_indices(s);
        const int k = static_cast<int>(idx.size());
        if (naive_rank_of(arr, idx) != k - 1) continue;
        bool minimal = true;
        for (int drop = 0; drop < k && minimal; ++drop) {
            IndexSet t = idx;
            t.erase(t.begin() + drop);
            minimal = naive_rank_of(arr, t) == k - 1;
        }
        if (minimal) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/*
 * The exterior algebra E on n generators with the full monomial basis, and
 * the Orlik-Solomon ideal I spanned degree by degree by e_T ∂e_C. Membership
 * in I is an exact rank test; nothing here uses broken circuits.
 */
class BruteOS {
public:
    explicit BruteOS(const Arrangement& arr) : n_(arr.size()), circuits_(naive_circuits(arr)) {}

    using Vec = std::map<Mask, Scalar>;

    static int sign_of(Mask a, Mask b) {
        int inv = 0;
        for (int i = 0; i < 32; ++i)
            if ((b >> i) & 1u)
                for (int j = i + 1; j < 32; ++j)
                    if ((a >> j) & 1u) ++inv;
        return (inv & 1) ? -1 : 1;
    }

    static Vec wedge(const Vec& u, const Vec& v) {
        Vec out;
        for (const auto& [a, ca] : u)
            for (const auto& [b, cb] : v) {
                if (a & b) continue;
                out[a | b] += ca * cb * Scalar(sign_of(a, b));
            }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    static Vec boundary_of(Mask m) {
        Vec out;
        int j = 0;
        for (int i = 0; i < 32; ++i)
            if ((m >> i) & 1u) out[m ^ (Mask{1} << i)] += Scalar((j++ & 1) ? -1 : 1);
        return out;
    }

    Vec one_form(const std::vector<Scalar>& w) const {
        Vec v;
        for (int i = 0; i < n_; ++i)
            if (!w[i].is_zero()) v[Mask{1} << i] = w[i];
        return v;
    }

    std::vector<Mask> monomials(int k) const {
        std::vector<Mask> out;
        for (Mask s = 0; s < (Mask{1} << n_); ++s)
            if (popcount(s) == k) out.push_back(s);
        return out;
    }

    std::vector<std::vector<Scalar>> ideal_rows(int k) const {
        const auto basis = monomials(k);
        std::map<Mask, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        std::vector<std::vector<Scalar>> rows;
        for (const auto& c : circuits_) {
            const int csize = static_cast<int>(c.size());
            if (csize - 1 > k) continue;
            const Mask cm = to_mask(c);
            const Vec dc = boundary_of(cm);
            for (Mask t : monomials(k - csize + 1)) {
                Vec e{{t, Scalar(1)}};
                const Vec prod = wedge(e, dc);
                if (prod.empty()) continue;
                std::vector<Scalar> row(basis.size(), Scalar(0));
                for (const auto& [m, c2] : prod) row[index[m]] = c2;
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    bool in_ideal(const Vec& v, int k) const {
        if (v.empty()) return true;
        auto rows = ideal_rows(k);
        const auto basis = monomials(k);
        std::map<Mask, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        const int before = naive_rank(rows);
        std::vector<Scalar> row(basis.size(), Scalar(0));
        for (const auto& [m, c] : v) row[index[m]] = c;
        rows.push_back(row);
        return naive_rank(rows) == before;
    }

    /// Dimension of (E/I)^k.
    int dimension(int k) const {
        return static_cast<int>(monomials(k).size()) - naive_rank(ideal_rows(k));
    }

    /// Largest k with a nonzero k-fold product of the given one-forms in E/I.
    int wedge_rank(const std::vector<std::vector<Scalar>>& forms) const {
        int best = 0;
        const int q = static_cast<int>(forms.size());
        for (unsigned sel = 1; sel < (1u << q); ++sel) {
            const int k = __builtin_popcount(sel);
            if (k <= best) continue;
            Vec prod{{0, Scalar(1)}};
            for (int i = 0; i < q; ++i)
                if ((sel >> i) & 1u) prod = wedge(prod, one_form(forms[i]));
            if (!in_ideal(prod, k)) best = k;
        }
        return best;
    }

private:
    int n_;
    std::vector<IndexSet> circuits_;
};

// Euler characteristic of the complement of distinct lines in P^2: 3 - χ(union of lines).
inline long line_arrangement_euler(const Arrangement& arr) {
    const int n = arr.size();
    std::map<Mask, int> points;  // closure of each pair -> multiplicity
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mask members = 0;
            for (int k = 0; k < n; ++k) {
                if (naive_rank_of(arr, {i, j, k}) == 2) members |= Mask{1} << k;
            }
            points[members] = popcount(members);
        }
    long union_chi = 2L * n;
    for (const auto& [m, mult] : points) union_chi -= mult - 1;
    return 3 - union_chi;
}

// Seeded random weight bases: q rows, entries in [-2, 2], zero row sums, independent.
inline WeightBasis random_weight_basis(std::mt19937_64& rng, int size, int q) {
    std::uniform_int_distribution<long> entry(-2, 2);
    for (;;) {
        std::vector<WeightVector> rows;
        while (static_cast<int>(rows.size()) < q) {
            WeightVector r(size);
            long sum = 0;
            for (int j = 0; j + 1 < size; ++j) sum += (r[j] = entry(rng));
            r[size - 1] = -sum;
            if (r[size - 1] < -2 || r[size - 1] > 2) continue;
            if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; })) continue;
            rows.push_back(std::move(r));
        }
        std::vector<std::vector<Scalar>> s;
        for (const auto& r : rows) s.push_back(to_scalars(r));
        if (naive_rank(s) == q) return WeightBasis(size, std::move(rows));
    }
}

inline bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace testing
