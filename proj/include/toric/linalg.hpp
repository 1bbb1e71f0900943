#pragma once

#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Reduced row echelon form in the given column order.  Pivot columns are the
// earliest columns (in `col_order`) that carry an independent row; returns the
// pivot column indices.  `rows` is modified in place to fully reduced form.
std::vector<int> rref(RatMat& rows, const std::vector<int>& col_order);

// Expresses `v` modulo the row space of a reduced `rows`: subtracts multiples
// of the pivot rows so the result is supported on non-pivot columns only.
RatVec reduce_against(const RatMat& rows, const std::vector<int>& pivots,
                      const std::vector<int>& col_order, RatVec v);

// Exact inverse; throws std::runtime_error on a singular matrix.
RatMat mat_inverse(const RatMat& m);

RatVec mat_apply(const RatMat& m, const RatVec& v);

// Solves a square system a*x = b exactly; throws on singular a.
RatVec solve_linear(RatMat a, RatVec b);

// Integer kernel basis of a (rows x cols) integer matrix, deterministic.
// Vectors are primitive and reduced against each other.
std::vector<std::vector<long long>> integer_kernel(
    const std::vector<std::vector<long long>>& m);

}  // namespace toric
