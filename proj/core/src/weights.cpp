#include "arrcrit/weights.hpp"

#include "arrcrit/error.hpp"
#include "arrcrit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace arrcrit {

// ---------------------------------------------------------------- WeightBasis

WeightBasis::WeightBasis(int size, std::vector<WeightVector> rows) : size_(size), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (static_cast<int>(rows_[i].size()) != size_)
            throw Error("weight row " + std::to_string(i) + " has length " + std::to_string(rows_[i].size()) +
                        ", expected " + std::to_string(size_));
        if (std::accumulate(rows_[i].begin(), rows_[i].end(), 0L) != 0)
            throw Error("weight row " + std::to_string(i) + " does not sum to zero");
    }
    if (rows_.empty()) return;
    Matrix<mpz_class> m(rows_.size(), size_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < size_; ++j) m(i, j) = rows_[i][j];
    if (bareiss_rank(m) != rows_.size()) throw Error("weight rows are linearly dependent");
}

std::vector<long> WeightBasis::column(int j) const {
    std::vector<long> c;
    for (const auto& r : rows_) c.push_back(r.at(j));
    return c;
}

std::vector<std::vector<Scalar>> WeightBasis::scalar_rows() const {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : rows_) {
        std::vector<Scalar> s;
        for (long x : r) s.emplace_back(x);
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------- homogenization

HomogenizedWeights homogenize(const WeightBasis& lambda) {
    HomogenizedWeights h;
    const int n = lambda.size();
    std::vector<long> nu0(n, 0);
    for (int j = 0; j < n; ++j)
        for (const auto& r : lambda.rows()) nu0[j] = std::max(nu0[j], -r[j]);
    h.nu.push_back(nu0);
    for (const auto& r : lambda.rows()) {
        std::vector<long> v(n);
        for (int j = 0; j < n; ++j) v[j] = r[j] + nu0[j];
        h.nu.push_back(std::move(v));
    }
    h.degree = std::accumulate(nu0.begin(), nu0.end(), 0L);
    return h;
}

EssentialReport essential_check(const HomogenizedWeights& h, int size) {
    EssentialReport rep;
    for (int j = 0; j < size; ++j) {
        bool covered = false;
        for (const auto& v : h.nu) covered = covered || v.at(j) > 0;
        if (!covered) rep.uncovered.push_back(j);
    }
    rep.essential = rep.uncovered.empty();
    return rep;
}

EssentialReport essential_check(const WeightBasis& lambda) {
    if (lambda.q() == 0) {
        EssentialReport rep;
        for (int j = 0; j < lambda.size(); ++j) rep.uncovered.push_back(j);
        return rep;
    }
    return essential_check(homogenize(lambda), lambda.size());
}

// ---------------------------------------------------------------- polynomials

bool GrLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(int vars, const Scalar& c) {
    Polynomial p(vars);
    p.add_term(Exponent(vars, 0), c);
    return p;
}

Polynomial Polynomial::linear(const std::vector<Scalar>& coeffs) {
    Polynomial p(static_cast<int>(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponent e(coeffs.size(), 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != vars_) throw Error("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != vars_) throw Error("point has the wrong number of coordinates");
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int k = 0; k < vars_; ++k)
            if (e[k]) t *= x[k].pow(static_cast<unsigned>(e[k]));
        total += t;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.vars_ != vars_) throw Error("polynomials in different numbers of variables");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw Error("polynomials in different numbers of variables");
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea);
            for (int k = 0; k < a.vars_; ++k) e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.is_rational() && c.rational_value() < 0;
        std::string coef = c.is_rational() ? mpq_class(abs(c.rational_value())).get_str() : c.str();
        const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        first = false;
        std::string mono;
        for (int k = 0; k < vars_; ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (constant_term) out += coef;
        else if (coef == "1") out += mono;
        else out += coef + "*" + mono;
    }
    return out;
}

MasterPolynomial expand_master_polynomial(const Arrangement& arr, const std::vector<long>& nu) {
    if (static_cast<int>(nu.size()) != arr.size()) throw Error("exponent vector has the wrong length");
    Polynomial p = Polynomial::constant(arr.coords(), Scalar(1));
    for (int j = 0; j < arr.size(); ++j) {
        if (nu[j] < 0) throw Error("negative exponent in master polynomial");
        if (nu[j] == 0) continue;
        const Polynomial f = Polynomial::linear(arr.form(j));
        for (long k = 0; k < nu[j]; ++k) p = p * f;
    }
    return p;
}

std::vector<Exponent> monomials_of_degree(int vars, int d) {
    std::vector<Exponent> out;
    Exponent e(vars, 0);
    std::function<void(int, int)> fill = [&](int k, int left) {
        if (k == vars - 1) {
            e[k] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[k] = x;
            fill(k + 1, left - x);
        }
    };
    if (vars > 0) fill(0, d);
    return out;
}

std::vector<std::vector<Scalar>> linear_syzygies(const Arrangement& arr, const HomogenizedWeights& h) {
    const auto monos = monomials_of_degree(arr.coords(), static_cast<int>(h.degree));
    Matrix<Scalar> m(h.nu.size(), monos.size());
    for (std::size_t i = 0; i < h.nu.size(); ++i) {
        const auto p = expand_master_polynomial(arr, h.nu[i]);
        for (std::size_t c = 0; c < monos.size(); ++c) m(i, c) = p.coefficient(monos[c]);
    }
    return left_kernel(m);
}

// ---------------------------------------------------------------- multinets

namespace {

void validate_multinet(const Arrangement& arr, const Multinet& net) {
    if (net.blocks.size() < 2) throw Error("a multinet needs at least two blocks");
    if (static_cast<int>(net.mult.size()) != arr.size()) throw Error("multiplicity vector has the wrong length");
    std::set<int> seen;
    for (const auto& b : net.blocks) {
        if (b.empty()) throw Error("empty multinet block");
        for (int i : b) {
            if (i < 0 || i >= arr.size()) throw Error("block index " + std::to_string(i) + " out of range");
            if (!seen.insert(i).second) throw Error("hyperplane " + std::to_string(i) + " lies in two blocks");
        }
    }
    for (int i = 0; i < arr.size(); ++i)
        if (net.mult[i] <= 0) throw Error("multiplicity of hyperplane " + std::to_string(i) + " is not positive");
}

} // namespace

MultinetReport multinet_check(const Arrangement& arr, const Multinet& net) {
    validate_multinet(arr, net);
    MultinetReport rep;
    const auto& mat = arr.matroid();

    std::vector<int> block_of(arr.size(), -1);
    Mask support = 0;
    for (std::size_t b = 0; b < net.blocks.size(); ++b)
        for (int i : net.blocks[b]) {
            block_of[i] = static_cast<int>(b);
            support |= Mask{1} << i;
        }

    for (const auto& b : net.blocks) {
        long d = 0;
        for (int i : b) d += net.mult[i];
        rep.block_degrees.push_back(d);
    }
    rep.d = rep.block_degrees.front();
    rep.axiom1 = std::all_of(rep.block_degrees.begin(), rep.block_degrees.end(), [&](long d) { return d == rep.d; });
    if (!rep.axiom1) rep.messages.push_back("block degrees differ");

    rep.axiom2 = true;
    std::vector<Mask> base;
    for (const auto& x : mat.flats_of_rank(2)) {
        const Mask inside = x.mask & support;
        if (mat.rank(inside) != 2) continue;
        std::vector<long> sums(net.blocks.size(), 0);
        std::set<int> touched;
        for (int i : to_indices(inside)) {
            sums[block_of[i]] += net.mult[i];
            touched.insert(block_of[i]);
        }
        if (touched.size() < 2) continue;
        base.push_back(inside);
        const bool balanced = std::all_of(sums.begin(), sums.end(), [&](long s) { return s == sums.front(); });
        if (!balanced) {
            rep.axiom2 = false;
            std::string members;
            for (int i : x.members) members += (members.empty() ? "" : ",") + std::to_string(i);
            rep.messages.push_back("unbalanced base-locus flat {" + members + "}");
        }
        rep.base_locus.push_back({x, balanced ? sums.front() : 0});
    }

    // Combinatorial stand-in for connectivity of the block minus the base locus:
    // two lines of a block are adjacent when they meet away from the base locus.
    rep.axiom3 = true;
    for (const auto& b : net.blocks) {
        std::vector<int> comp(b.size());
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
        for (std::size_t u = 0; u < b.size(); ++u)
            for (std::size_t v = u + 1; v < b.size(); ++v) {
                const Mask meet = mat.closure((Mask{1} << b[u]) | (Mask{1} << b[v])) & support;
                if (std::find(base.begin(), base.end(), meet) != base.end()) continue;
                comp[find(static_cast<int>(u))] = find(static_cast<int>(v));
            }
        bool connected = true;
        for (std::size_t u = 0; u < b.size(); ++u) connected = connected && find(static_cast<int>(u)) == find(0);
        rep.block_connected.push_back(connected);
        rep.axiom3 = rep.axiom3 && connected;
    }
    if (!rep.axiom3) rep.messages.push_back("some block is disconnected by the base locus");
    if (arr.ell() > 2) rep.messages.push_back("connectivity is tested on the line graph of each block, exact only for line arrangements");
    return rep;
}

HomogenizedWeights characteristic_vectors(const Arrangement& arr, const Multinet& net) {
    const auto rep = multinet_check(arr, net);
    if (!rep.passed()) throw Error("multinet check failed");
    HomogenizedWeights h;
    h.degree = rep.d;
    for (const auto& b : net.blocks) {
        std::vector<long> nu(arr.size(), 0);
        for (int i : b) nu[i] = net.mult[i];
        h.nu.push_back(std::move(nu));
    }
    return h;
}

WeightBasis characteristic_basis(const Arrangement& arr, const Multinet& net) {
    const auto h = characteristic_vectors(arr, net);
    std::vector<WeightVector> rows;
    for (std::size_t i = 1; i < h.nu.size(); ++i) {
        WeightVector r(arr.size());
        for (int j = 0; j < arr.size(); ++j) r[j] = h.nu[i][j] - h.nu[0][j];
        rows.push_back(std::move(r));
    }
    return WeightBasis(arr.size(), std::move(rows));
}

} // namespace arrcrit
