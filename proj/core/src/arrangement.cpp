#include "arrcrit/arrangement.hpp"

#include "arrcrit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace arrcrit {

Mask to_mask(std::span<const int> indices) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 0 || i >= 32) throw Error("hyperplane index " + std::to_string(i) + " out of range");
        m |= Mask{1} << i;
    }
    return m;
}

IndexSet to_indices(Mask m) {
    IndexSet out;
    while (m) {
        out.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    return out;
}

bool mask_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    const Mask diff = a ^ b;
    const Mask low = diff & (~diff + 1);
    const Mask above = ~((low << 1) - 1);
    // The list holding `low` is smaller unless the other one ends before it.
    if (a & low) return (b & above) != 0;
    return (a & above) == 0;
}

namespace {

bool flat_less(const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.members < b.members;
}

// Echelon basis of a span together with its pivot columns.
struct SpanBasis {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivots;

    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Scalar f = v[pivots[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows[k][j].is_zero()) v[j] -= f * rows[k][j];
        }
        return v;
    }

    bool contains(const std::vector<Scalar>& v) const {
        const auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    SpanBasis with(const std::vector<Scalar>& v) const {
        std::vector<std::vector<Scalar>> all = rows;
        all.push_back(v);
        Matrix<Scalar> m(all);
        auto [red, piv] = rref(std::move(m));
        return SpanBasis{red.to_rows(), piv};
    }
};

} // namespace

// ---------------------------------------------------------------- Arrangement

Arrangement::Arrangement(Field field, std::vector<std::vector<Scalar>> forms) : field_(field), forms_(std::move(forms)) {
    if (forms_.empty()) throw Error("arrangement has no hyperplanes");
    if (static_cast<int>(forms_.size()) > kMaxHyperplanes)
        throw Error("at most " + std::to_string(kMaxHyperplanes) + " hyperplanes are supported");
    coords_ = static_cast<int>(forms_[0].size());
    if (coords_ == 0) throw Error("forms have no coordinates");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        const auto& f = forms_[i];
        if (static_cast<int>(f.size()) != coords_) throw Error("ragged form rows");
        bool nonzero = false;
        for (const auto& c : f) {
            if (c.field() != field_ && !c.field().is_rational()) throw Error("form coefficient over a foreign field");
            nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) throw Error("form " + std::to_string(i) + " is zero");
    }
    matroid_ = std::make_shared<const Matroid>(*this);
}

const Matroid& Arrangement::matroid() const { return *matroid_; }

bool Arrangement::essential() const { return matroid_->rank() == coords_; }

Arrangement Arrangement::restrict_to(std::span<const int> keep) const {
    std::vector<std::vector<Scalar>> sub;
    for (int i : keep) sub.push_back(form(i));
    return Arrangement(field_, std::move(sub));
}

// ---------------------------------------------------------------- Matroid

Matroid::Matroid(const Arrangement& arr) : size_(arr.size()), ground_(arr.ground()) {
    struct Pending {
        Mask mask;
        SpanBasis span;
    };
    std::vector<Pending> layer{{0, {}}};
    std::vector<Flat> all{{{}, 0, 0}};
    int r = 0;
    while (!(layer.size() == 1 && layer[0].mask == ground_)) {
        std::vector<Pending> next;
        std::vector<Mask> seen;
        for (const auto& f : layer) {
            Mask covered = f.mask;
            for (int j = 0; j < size_; ++j) {
                if (covered & (Mask{1} << j)) continue;
                SpanBasis span = f.span.with(arr.form(j));
                Mask g = 0;
                for (int i = 0; i < size_; ++i)
                    if ((f.mask >> i) & 1u || span.contains(arr.form(i))) g |= Mask{1} << i;
                covered |= g;
                if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
                seen.push_back(g);
                next.push_back({g, std::move(span)});
            }
        }
        ++r;
        for (const auto& p : next) all.push_back({to_indices(p.mask), r, p.mask});
        layer = std::move(next);
    }
    rank_ = r;
    std::sort(all.begin(), all.end(), flat_less);
    flats_ = std::move(all);

    rank_table_.assign(std::size_t{1} << size_, 0);
    for (Mask s = 1; s <= ground_ && s != 0; ++s) {
        for (const auto& f : flats_) {
            if ((s & ~f.mask) == 0) {
                rank_table_[s] = static_cast<std::uint8_t>(f.rank);
                break;
            }
        }
        if (s == ground_) break;
    }

    for (Mask s = 1;; ++s) {
        const int k = popcount(s);
        if (rank(s) == k - 1) {
            bool minimal = true;
            for (Mask t = s; t && minimal; t &= t - 1) {
                const Mask bit = t & (~t + 1);
                minimal = rank(s ^ bit) == k - 1;
            }
            if (minimal) circuit_masks_.push_back(s);
        }
        if (s == ground_) break;
    }
    std::sort(circuit_masks_.begin(), circuit_masks_.end(), mask_lex_less);
    for (Mask c : circuit_masks_) circuits_.push_back(to_indices(c));

    for (const auto& f : flats_)
        if (f.rank > 0 && f.rank < rank_ && is_connected(f.mask)) connected_.push_back(f);
}

Mask Matroid::closure(Mask subset) const {
    if (subset & ~ground_) throw Error("hyperplane index out of range");
    for (const auto& f : flats_)
        if ((subset & ~f.mask) == 0) return f.mask;
    return ground_;
}

Flat Matroid::flat(Mask closed) const { return Flat{to_indices(closed), rank(closed), closed}; }

std::vector<Flat> Matroid::flats_of_rank(int r) const {
    std::vector<Flat> out;
    for (const auto& f : flats_)
        if (f.rank == r) out.push_back(f);
    return out;
}

bool Matroid::is_connected(Mask x) const {
    if (popcount(x) <= 1) return true;
    const Mask low = x & (~x + 1);
    const Mask rest = x ^ low;
    const int rx = rank(x);
    // Parts always hold the lowest element; enumerate the submasks of the rest for the remainder.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask part = low | sub;
        if (part != x && rank(part) + rank(x ^ part) == rx) return false;
        if (sub == 0) break;
    }
    return true;
}

std::vector<Flag> Matroid::maximal_flags() const {
    if (rank_ < 1) return {};
    std::vector<std::vector<Flat>> by_rank(rank_ + 1);
    for (const auto& f : flats_) by_rank[f.rank].push_back(f);

    std::vector<Flag> out;
    std::vector<Flat> chain;
    std::function<void(int)> extend = [&](int k) {
        if (k == rank_) {
            out.push_back(Flag{chain});
            return;
        }
        for (const auto& f : by_rank[k]) {
            if (!chain.empty() && (chain.back().mask & ~f.mask) != 0) continue;
            chain.push_back(f);
            extend(k + 1);
            chain.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end(), [](const Flag& a, const Flag& b) {
        return std::lexicographical_compare(a.chain.begin(), a.chain.end(), b.chain.begin(), b.chain.end(),
                                            [](const Flat& x, const Flat& y) { return x.members < y.members; });
    });
    return out;
}

bool Matroid::is_nested(std::span<const Mask> family) const {
    const std::size_t k = family.size();
    if (k > 16) throw Error("nested-set test limited to 16 members");
    std::vector<Mask> connected_masks;
    for (const auto& f : connected_) connected_masks.push_back(f.mask);
    auto in_building_set = [&](Mask m) {
        return m == ground_ || std::find(connected_masks.begin(), connected_masks.end(), m) != connected_masks.end();
    };
    for (unsigned sel = 1; sel < (1u << k); ++sel) {
        if (popcount(sel) < 2) continue;
        bool antichain = true;
        Mask join = 0;
        for (std::size_t a = 0; a < k && antichain; ++a) {
            if (!((sel >> a) & 1u)) continue;
            join |= family[a];
            for (std::size_t b = a + 1; b < k; ++b) {
                if (!((sel >> b) & 1u)) continue;
                const Mask x = family[a], y = family[b];
                if ((x & ~y) == 0 || (y & ~x) == 0) {
                    antichain = false;
                    break;
                }
            }
        }
        if (antichain && in_building_set(closure(join))) return false;
    }
    return true;
}

namespace {

bool nested_less(const NestedSet& a, const NestedSet& b) {
    return std::lexicographical_compare(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                                        [](const Flat& x, const Flat& y) { return x.members < y.members; });
}

} // namespace

std::vector<NestedSet> Matroid::inclusion_maximal_nested_sets() const {
    const auto& g = connected_;
    std::vector<std::vector<std::size_t>> families;
    std::vector<std::size_t> current;
    std::vector<Mask> masks;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        families.push_back(current);
        for (std::size_t i = start; i < g.size(); ++i) {
            masks.push_back(g[i].mask);
            if (is_nested(masks)) {
                current.push_back(i);
                grow(i + 1);
                current.pop_back();
            }
            masks.pop_back();
        }
    };
    grow(0);

    std::vector<NestedSet> out;
    for (const auto& fam : families) {
        std::vector<Mask> m;
        for (auto i : fam) m.push_back(g[i].mask);
        bool maximal = true;
        for (std::size_t i = 0; i < g.size() && maximal; ++i) {
            if (std::find(fam.begin(), fam.end(), i) != fam.end()) continue;
            m.push_back(g[i].mask);
            maximal = !is_nested(m);
            m.pop_back();
        }
        if (!maximal) continue;
        NestedSet s;
        for (auto i : fam) s.elements.push_back(g[i]);
        std::sort(s.elements.begin(), s.elements.end(), flat_less);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), nested_less);
    return out;
}

std::vector<NestedSet> Matroid::maximal_nested_sets() const {
    const auto& g = connected_;
    const std::size_t target = rank_ > 0 ? static_cast<std::size_t>(rank_ - 1) : 0;
    std::vector<NestedSet> out;
    std::vector<std::size_t> current;
    std::vector<Mask> masks;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        if (current.size() == target) {
            NestedSet s;
            for (auto i : current) s.elements.push_back(g[i]);
            std::sort(s.elements.begin(), s.elements.end(), flat_less);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) {
            masks.push_back(g[i].mask);
            if (is_nested(masks)) {
                current.push_back(i);
                grow(i + 1);
                current.pop_back();
            }
            masks.pop_back();
        }
    };
    grow(0);
    std::sort(out.begin(), out.end(), nested_less);
    return out;
}

CharacteristicData Matroid::characteristic_data() const {
    CharacteristicData out;
    std::vector<long> mu(flats_.size(), 0);
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        if (flats_[i].rank == 0) {
            mu[i] = 1;
            continue;
        }
        long s = 0;
        for (std::size_t j = 0; j < flats_.size(); ++j) {
            if (flats_[j].rank >= flats_[i].rank) break;
            if ((flats_[j].mask & ~flats_[i].mask) == 0) s += mu[j];
        }
        mu[i] = -s;
    }
    out.poincare.assign(rank_ + 1, 0);
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        out.mobius.emplace_back(flats_[i], mu[i]);
        out.poincare[flats_[i].rank] += mu[i] < 0 ? -mu[i] : mu[i];
    }
    // π(t) is divisible by (1 + t); evaluate the quotient at t = -1.
    if (rank_ >= 1) {
        std::vector<long> quot(rank_, 0);
        long carry = 0;
        for (int k = 0; k < rank_; ++k) {
            quot[k] = out.poincare[k] - carry;
            carry = quot[k];
        }
        long value = 0, sign = 1;
        for (int k = 0; k < rank_; ++k) {
            value += sign * quot[k];
            sign = -sign;
        }
        out.euler_characteristic = value;
    }
    return out;
}

// ---------------------------------------------------------------- free functions

int rank_of(const Arrangement& arr, const IndexSet& subset) {
    Matrix<Scalar> m(0, arr.coords());
    for (int i : subset) {
        if (i < 0 || i >= arr.size()) throw Error("hyperplane index " + std::to_string(i) + " out of range");
        m.append_row(arr.form(i));
    }
    if (m.rows() == 0) return 0;
    return static_cast<int>(bareiss_rank(std::move(m)));
}

std::vector<IndexSet> circuits(const Arrangement& arr) { return arr.matroid().circuits(); }

Flat closure(const Arrangement& arr, const IndexSet& subset) {
    for (int i : subset)
        if (i < 0 || i >= arr.size()) throw Error("hyperplane index " + std::to_string(i) + " out of range");
    const auto& m = arr.matroid();
    return m.flat(m.closure(to_mask(subset)));
}

std::vector<Flat> connected_flats(const Arrangement& arr) { return arr.matroid().connected_flats(); }

std::vector<Flag> maximal_flags(const Arrangement& arr) {
    if (!arr.essential()) throw Error("maximal flags require an essential arrangement");
    return arr.matroid().maximal_flags();
}

std::vector<NestedSet> maximal_nested_sets(const Arrangement& arr) {
    if (!arr.essential()) throw Error("maximal nested sets require an essential arrangement");
    return arr.matroid().maximal_nested_sets();
}

CharacteristicData characteristic_data(const Arrangement& arr) { return arr.matroid().characteristic_data(); }

} // namespace arrcrit
