#include "arrcrit/os_algebra.hpp"

#include "arrcrit/error.hpp"
#include "arrcrit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace arrcrit {

namespace {

int parity(int count) { return (count & 1) ? -1 : 1; }

// Sign of e_A e_B = ± e_{A ∪ B} for disjoint A, B.
int shuffle_sign(Mask a, Mask b) {
    int inversions = 0;
    for (Mask t = b; t; t &= t - 1) {
        const int j = __builtin_ctz(t);
        const Mask above = j >= 31 ? 0 : ~((Mask{2} << j) - 1);
        inversions += popcount(a & above);
    }
    return parity(inversions);
}

} // namespace

// ---------------------------------------------------------------- OSElement

void OSElement::add(Mask basis, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coords.try_emplace(basis, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords.erase(it);
    }
}

OSElement& OSElement::operator+=(const OSElement& o) {
    if (!o.is_zero() && !is_zero() && o.degree != degree) throw Error("adding elements of different degrees");
    if (is_zero()) degree = o.degree;
    for (const auto& [m, c] : o.coords) add(m, c);
    return *this;
}

OSElement& OSElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        coords.clear();
        return *this;
    }
    for (auto& [m, v] : coords) v *= c;
    return *this;
}

// ---------------------------------------------------------------- OSAlgebra

OSAlgebra::OSAlgebra(const Arrangement& arr) : arr_(arr) {
    const auto& mat = arr_.matroid();
    for (Mask c : mat.circuit_masks()) {
        const Mask low = c & (~c + 1);
        broken_circuits_.emplace_back(c ^ low, __builtin_ctz(c));
    }
    std::sort(broken_circuits_.begin(), broken_circuits_.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return mask_lex_less(a.first, b.first);
        return a.second < b.second;
    });

    const int top = mat.rank();
    nbc_.assign(top + 1, {});
    const int n = arr_.size();
    std::function<void(Mask, int)> grow = [&](Mask s, int next) {
        nbc_[popcount(s)].push_back(s);
        for (int j = next; j < n; ++j) {
            const Mask t = s | (Mask{1} << j);
            bool ok = true;
            for (const auto& [bc, c] : broken_circuits_) {
                if ((bc >> j) & 1u && (bc & ~t) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) grow(t, j + 1);
        }
    };
    grow(0, 0);
    nbc_index_.resize(nbc_.size());
    for (std::size_t k = 0; k < nbc_.size(); ++k) {
        std::sort(nbc_[k].begin(), nbc_[k].end(), mask_lex_less);
        for (std::size_t i = 0; i < nbc_[k].size(); ++i) nbc_index_[k][nbc_[k][i]] = i;
    }
}

const std::vector<Mask>& OSAlgebra::nbc_basis(int k) const {
    static const std::vector<Mask> empty;
    if (k < 0 || k >= static_cast<int>(nbc_.size())) return empty;
    return nbc_[k];
}

std::size_t OSAlgebra::projective_dimension(int k) const {
    const auto& basis = nbc_basis(k);
    return static_cast<std::size_t>(std::count_if(basis.begin(), basis.end(), [](Mask m) { return (m & 1u) == 0; }));
}

const OSAlgebra::Expansion& OSAlgebra::reduce(Mask s) const {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;

    const std::pair<Mask, int>* chosen = nullptr;
    for (const auto& bc : broken_circuits_) {
        if ((bc.first & ~s) == 0) {
            chosen = &bc;
            break;
        }
    }
    Expansion out;
    if (!chosen) {
        out.emplace_back(s, 1);
        return memo_.emplace(s, std::move(out)).first->second;
    }

    // e_B = e_c ∂e_B for the broken circuit B of the circuit {c} ∪ B.
    const auto [bc, c] = *chosen;
    const Mask rest = s & ~bc;
    const int sign0 = shuffle_sign(bc, rest);
    std::map<Mask, mpz_class> acc;
    if (!((rest >> c) & 1u)) {
        int j = 0;
        for (Mask t = bc; t; t &= t - 1, ++j) {
            const Mask bj = t & (~t + 1);
            const Mask tail = bc ^ bj;
            int sign = sign0 * parity(j) * shuffle_sign(tail, rest);
            const Mask body = tail | rest;
            sign *= parity(popcount(body & ((Mask{1} << c) - 1)));
            for (const auto& [m, coef] : reduce(body | (Mask{1} << c))) acc[m] += sign * coef;
        }
    }
    for (auto& [m, coef] : acc)
        if (coef != 0) out.emplace_back(m, std::move(coef));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return mask_lex_less(a.first, b.first); });
    return memo_.emplace(s, std::move(out)).first->second;
}

OSElement OSAlgebra::normal_form(const IndexSet& monomial) const {
    Mask s = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < monomial.size(); ++a) {
        const int i = monomial[a];
        if (i < 0 || i >= arr_.size()) throw Error("hyperplane index " + std::to_string(i) + " out of range");
        if ((s >> i) & 1u) throw Error("repeated index " + std::to_string(i) + " in monomial");
        s |= Mask{1} << i;
        for (std::size_t b = 0; b < a; ++b)
            if (monomial[b] > i) ++inversions;
    }
    OSElement out;
    out.degree = static_cast<int>(monomial.size());
    const int sign = parity(inversions);
    for (const auto& [m, coef] : reduce(s)) out.add(m, Scalar(mpz_class(sign * coef)));
    return out;
}

OSElement OSAlgebra::wedge(const OSElement& u, const OSElement& v) const {
    OSElement out;
    out.degree = u.degree + v.degree;
    if (out.degree > top_degree()) return out;
    std::map<Mask, Scalar, MaskLexLess> acc;
    for (const auto& [a, ca] : u.coords) {
        for (const auto& [b, cb] : v.coords) {
            if (a & b) continue;
            const Scalar prod = ca * cb * Scalar(shuffle_sign(a, b));
            for (const auto& [m, coef] : reduce(a | b)) out.add(m, prod * Scalar(coef));
        }
    }
    return out;
}

OSElement OSAlgebra::boundary(const OSElement& u) const {
    if (u.degree < 1) throw Error("boundary of a degree-0 element");
    OSElement out;
    out.degree = u.degree - 1;
    for (const auto& [m, c] : u.coords) {
        int j = 0;
        for (Mask t = m; t; t &= t - 1, ++j) {
            const Mask bit = t & (~t + 1);
            out.add(m ^ bit, c * Scalar(parity(j)));
        }
    }
    return out;
}

OneForm OSAlgebra::one_form(const std::vector<Scalar>& weights) const {
    if (static_cast<int>(weights.size()) != arr_.size()) throw Error("weight vector has the wrong length");
    OneForm f;
    f.weights = weights;
    f.element.degree = 1;
    Scalar sum(0);
    for (int i = 0; i < arr_.size(); ++i) {
        sum += weights[i];
        if (weights[i].is_zero()) continue;
        for (const auto& [m, coef] : reduce(Mask{1} << i)) f.element.add(m, weights[i] * Scalar(coef));
    }
    f.projective = sum.is_zero();
    return f;
}

OneForm OSAlgebra::one_form(const WeightVector& weights) const {
    std::vector<Scalar> w;
    for (long x : weights) w.emplace_back(x);
    return one_form(w);
}

std::vector<OSElement> OSAlgebra::projective_basis(int k) const {
    std::vector<OSElement> out;
    for (Mask s : nbc_basis(k)) {
        if (s & 1u) continue;
        OSElement e;
        e.degree = k + 1;
        e.add(s | 1u, Scalar(1));
        out.push_back(boundary(e));
    }
    return out;
}

std::vector<Scalar> OSAlgebra::to_vector(const OSElement& u) const {
    std::vector<Scalar> v(dimension(u.degree), Scalar(0));
    if (u.is_zero()) return v;
    const auto& index = nbc_index_.at(u.degree);
    for (const auto& [m, c] : u.coords) {
        auto it = index.find(m);
        if (it == index.end()) throw Error("element is not in NBC coordinates");
        v[it->second] = c;
    }
    return v;
}

Matrix<Scalar> OSAlgebra::multiplication_matrix(const OneForm& omega, int p) const {
    Matrix<Scalar> m(0, dimension(p + 1));
    for (const auto& e : projective_basis(p)) m.append_row(to_vector(wedge(omega.element, e)));
    return m;
}

CohomologyDims OSAlgebra::cohomology_dimension(const OneForm& omega, int p) const {
    if (std::all_of(omega.weights.begin(), omega.weights.end(), [](const Scalar& s) { return s.is_zero(); }))
        throw Error("one-form is zero");
    if (!omega.projective) throw Error("one-form weights do not sum to zero");
    if (p < 0 || p > top_degree() - 1) throw Error("degree " + std::to_string(p) + " out of range");
    CohomologyDims d;
    const std::size_t a = projective_dimension(p);
    const auto zp = multiplication_matrix(omega, p);
    d.z = a - (zp.rows() == 0 || zp.cols() == 0 ? 0 : rank(zp));
    if (p >= 1) {
        const auto bp = multiplication_matrix(omega, p - 1);
        d.b = bp.rows() == 0 || bp.cols() == 0 ? 0 : rank(bp);
    }
    d.h = d.z - d.b;
    return d;
}

bool OSAlgebra::is_trivial_cocycle(const OneForm& omega, const OSElement& psi) const {
    if (!omega.projective) throw Error("one-form weights do not sum to zero");
    if (psi.degree >= 1 && !boundary(psi).is_zero()) throw Error("cocycle is not projective");
    if (!wedge(omega.element, psi).is_zero()) throw Error("element is not a cocycle");
    if (psi.is_zero()) return true;
    if (psi.degree == 0) return false;
    auto m = multiplication_matrix(omega, psi.degree - 1);
    const std::size_t before = m.rows() == 0 ? 0 : rank(m);
    m.append_row(to_vector(psi));
    return rank(m) == before;
}

WedgeRank OSAlgebra::subspace_wedge_rank(const WeightBasis& lambda) const {
    if (lambda.size() != arr_.size()) throw Error("weight rows do not match the arrangement size");
    if (lambda.q() == 0) throw Error("empty weight basis");
    std::vector<OSElement> forms;
    for (const auto& r : lambda.rows()) forms.push_back(one_form(r).element);

    // Products over index subsets, extended in increasing order; zero products stay zero.
    struct Partial {
        int last;
        OSElement value;
    };
    std::vector<Partial> level;
    for (int i = 0; i < lambda.q(); ++i)
        if (!forms[i].is_zero()) level.push_back({i, forms[i]});
    WedgeRank out;
    int k = 1;
    while (!level.empty()) {
        out.rank = k;
        std::vector<Partial> next;
        for (const auto& p : level)
            for (int j = p.last + 1; j < lambda.q(); ++j) {
                auto w = wedge(p.value, forms[j]);
                if (!w.is_zero()) next.push_back({j, std::move(w)});
            }
        level = std::move(next);
        ++k;
    }
    out.is_singular = out.rank < lambda.q();
    return out;
}

OSElement normal_form(const Arrangement& arr, const IndexSet& monomial) { return OSAlgebra(arr).normal_form(monomial); }

CohomologyDims cohomology_dimension(const Arrangement& arr, const OneForm& omega, int p) {
    return OSAlgebra(arr).cohomology_dimension(omega, p);
}

WedgeRank subspace_wedge_rank(const Arrangement& arr, const WeightBasis& lambda) {
    return OSAlgebra(arr).subspace_wedge_rank(lambda);
}

} // namespace arrcrit
