#pragma once

#include <vector>

#include "mikado/linear_space.hpp"

namespace mikado {

/// delta(A) = |A| - sum of nullities of the non-trivial lines of A.
int delta(const LinearSpace& space);

/// delta of the substructure induced on `subset`. Lines of the substructure
/// are the traces of lines of `space` with at least three points there.
int delta(const LinearSpace& space, PointSet subset);

/// delta(A) - delta(B) with B taken as an induced substructure.
int delta_rel(const LinearSpace& space, PointSet base);

/// Change in delta when adding p to `subset` (p not in subset):
/// 1 - #{lines through p meeting subset in at least two points}.
int delta_gain(const LinearSpace& space, PointSet subset, int p);

struct NullityTerm {
    PointSet members;
    int nullity;
};

struct PredimensionReport {
    int value = 0;
    PointSet witness;
    std::vector<NullityTerm> breakdown;
};

enum class MinStrategy {
    /// Exact s-t minimum cut; polynomial.
    MinCut,
    /// Word-encoded subset enumeration with submodular branch-and-bound.
    BranchAndBound,
};

/// Minimum of delta(X) over lower <= X <= upper. The witness is the least
/// minimiser by inclusion (minimisers are closed under intersection since
/// delta is submodular); it is also the numerically least bit mask.
PredimensionReport min_delta_between(const LinearSpace& space, PointSet lower, PointSet upper,
                                     MinStrategy strategy = MinStrategy::MinCut);

/// d_N(A): the minimum of delta over supersets of A inside N.
PredimensionReport dim(const LinearSpace& space, PointSet subset,
                       MinStrategy strategy = MinStrategy::MinCut);

/// The least strong superset of `subset` (the dim witness).
PointSet closure(const LinearSpace& space, PointSet subset);

/// B <= N: no superset of B inside N has smaller delta than B.
bool is_strong(const LinearSpace& space, PointSet base);

/// Every substructure has non-negative delta.
bool in_K0(const LinearSpace& space);

}  // namespace mikado
