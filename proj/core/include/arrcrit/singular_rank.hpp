#pragma once

#include "arrcrit/arrangement.hpp"
#include "arrcrit/weights.hpp"

#include <optional>
#include <vector>

namespace arrcrit {

/// Λ_S, the sum of the weight-matrix columns indexed by the flat.
std::vector<long> flat_column_sum(const WeightBasis& lambda, const Flat& flat);

struct FlatColumnMatrix {
    std::vector<std::vector<long>> columns;  // one Λ_S per flat
    std::vector<Flat> source;
};

FlatColumnMatrix flat_column_matrix(const WeightBasis& lambda, const std::vector<Flat>& flats);
int column_rank(const FlatColumnMatrix& m);

struct RankCondition {
    bool is_singular = false;
    int rank = 0;
    std::vector<Flat> witness;  // lexicographically least chain or nested set attaining the rank
};

/// Maximum rank of Λ over the flags of flats. Throws on non-essential arrangements.
RankCondition flag_rank_condition(const Arrangement& arr, const WeightBasis& lambda);
/// Same quantity over maximal nested sets of the minimal building set.
RankCondition nested_rank_condition(const Arrangement& arr, const WeightBasis& lambda);

/*
 * Dimension of the image of the Bergman fan under projection to the
 * coordinates in S, taken modulo the all-ones direction:
 * max over flags of rank[P_S e_{X_1} | ... | P_S e_{X_{r-1}} | 1_S] - 1.
 */
int coordinate_projection_dimension(const Arrangement& arr, const IndexSet& subset);
/// The projected fan drops dimension, i.e. the coordinate subspace is singular.
bool coordinate_projection_drops(const Arrangement& arr, const IndexSet& subset);

} // namespace arrcrit
