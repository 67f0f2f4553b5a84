#pragma once

#include <vector>

#include "hopfdiff/rational.hpp"

namespace hopfdiff {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot columns in order.
// The forward phase runs fraction-free (Bareiss) on a denominator-cleared
// integer copy; back-substitution restores rational RREF.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Exact basis of { x : sum_i x_i * rows[i] = 0 }, i.e. the left null space of
// the matrix whose i-th row is the image of the i-th domain basis vector.
// Rows of the result are themselves in RREF, so equal subspaces yield equal
// matrices.
RatMat kernel_of_images(const RatMat& rows, int ncols);

// Solve sum_i x_i * rows[i] = target exactly; returns false when inconsistent.
bool solve_in_span(const RatMat& rows, int ncols, const RatVec& target, RatVec& x);

// RREF of the span; rows must share the length ncols.
RatMat row_space_echelon(const RatMat& rows, int ncols);

// (Eᵀ)⁻¹ for a square invertible matrix given by rows; throws if singular.
RatMat inverse(const RatMat& m);

}  // namespace hopfdiff
