#include "arrcrit/singular_rank.hpp"

#include "arrcrit/error.hpp"
#include "arrcrit/linalg.hpp"

#include <string>

namespace arrcrit {

std::vector<long> flat_column_sum(const WeightBasis& lambda, const Flat& flat) {
    std::vector<long> sum(lambda.q(), 0);
    for (int j : flat.members) {
        if (j < 0 || j >= lambda.size()) throw Error("flat index " + std::to_string(j) + " out of range");
        for (int i = 0; i < lambda.q(); ++i) sum[i] += lambda.rows()[i][j];
    }
    return sum;
}

FlatColumnMatrix flat_column_matrix(const WeightBasis& lambda, const std::vector<Flat>& flats) {
    FlatColumnMatrix m;
    for (const auto& f : flats) m.columns.push_back(flat_column_sum(lambda, f));
    m.source = flats;
    return m;
}

int column_rank(const FlatColumnMatrix& m) {
    if (m.columns.empty() || m.columns[0].empty()) return 0;
    Matrix<mpz_class> a(m.columns.size(), m.columns[0].size());
    for (std::size_t i = 0; i < m.columns.size(); ++i)
        for (std::size_t j = 0; j < m.columns[i].size(); ++j) a(i, j) = m.columns[i][j];
    return static_cast<int>(bareiss_rank(std::move(a)));
}

namespace {

void check_inputs(const Arrangement& arr, const WeightBasis& lambda) {
    if (!arr.essential()) throw Error("rank condition requires an essential arrangement");
    if (lambda.size() != arr.size()) throw Error("weight rows do not match the arrangement size");
    if (lambda.q() == 0) throw Error("empty weight basis");
}

RankCondition best_of(const WeightBasis& lambda, const std::vector<std::vector<Flat>>& families) {
    RankCondition out;
    out.rank = -1;
    for (const auto& fam : families) {
        const int r = column_rank(flat_column_matrix(lambda, fam));
        if (r > out.rank) {
            out.rank = r;
            out.witness = fam;
            if (r == lambda.q()) break;
        }
    }
    if (out.rank < 0) out.rank = 0;
    out.is_singular = out.rank < lambda.q();
    return out;
}

} // namespace

RankCondition flag_rank_condition(const Arrangement& arr, const WeightBasis& lambda) {
    check_inputs(arr, lambda);
    std::vector<std::vector<Flat>> fams;
    for (auto& f : arr.matroid().maximal_flags()) fams.push_back(std::move(f.chain));
    return best_of(lambda, fams);
}

RankCondition nested_rank_condition(const Arrangement& arr, const WeightBasis& lambda) {
    check_inputs(arr, lambda);
    std::vector<std::vector<Flat>> fams;
    for (auto& s : arr.matroid().maximal_nested_sets()) fams.push_back(std::move(s.elements));
    return best_of(lambda, fams);
}

int coordinate_projection_dimension(const Arrangement& arr, const IndexSet& subset) {
    const Mask s = to_mask(subset);
    if (s & ~arr.ground()) throw Error("subset index out of range");
    if (subset.empty()) return -1;
    const auto flags = arr.matroid().maximal_flags();
    const IndexSet idx = to_indices(s);
    std::size_t best = 0;
    auto column_of = [&](Mask f) {
        std::vector<mpz_class> c;
        for (int i : idx) c.emplace_back(static_cast<int>((f >> i) & 1u));
        return c;
    };
    std::vector<mpz_class> ones(idx.size(), 1);
    if (flags.empty()) best = 1;
    for (const auto& flag : flags) {
        Matrix<mpz_class> m(0, idx.size());
        for (const auto& x : flag.chain) m.append_row(column_of(x.mask));
        m.append_row(ones);
        best = std::max(best, bareiss_rank(std::move(m)));
        if (best == idx.size()) break;
    }
    return static_cast<int>(best) - 1;
}

bool coordinate_projection_drops(const Arrangement& arr, const IndexSet& subset) {
    const int k = static_cast<int>(to_indices(to_mask(subset)).size());
    return coordinate_projection_dimension(arr, subset) < k - 1;
}

} // namespace arrcrit
