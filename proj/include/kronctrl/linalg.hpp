#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kronctrl/matrix.hpp"
#include "kronctrl/poly.hpp"

namespace kronctrl {

/// Exact rank over the rationals.
std::size_t rank(const Mat& m);

/// Basis of {x : m·xᵀ = 0}, one RowVec (length m.cols()) per free column.
/// Each vector is scaled so its first nonzero entry is 1.
std::vector<RowVec> null_space(const Mat& m);

/// Basis of {x : x·m = 0}; count is m.rows() - rank(m).
std::vector<RowVec> left_null_space(const Mat& m);

/// det(sI - m), monic of degree m.rows(). Throws DimensionMismatch for
/// non-square input.
Poly charpoly(const Mat& m);

/// p(m) for square m.
Mat evaluate(const Poly& p, const Mat& m);

/// Rank of the matrix whose rows are `vectors` (0 for an empty list).
std::size_t span_rank(std::span<const RowVec> vectors);
bool linearly_independent(std::span<const RowVec> vectors);
bool in_span(std::span<const RowVec> basis, const RowVec& v);
/// True iff both lists span the same subspace.
bool same_span(std::span<const RowVec> a, std::span<const RowVec> b);

}  // namespace kronctrl
