#pragma once

#include "ezd/algebra.hpp"

namespace ezd {

// Ambient presentations of the worked examples that ship with the tool.
// Each returns the polynomial data only; callers run build_algebra (possibly
// after a linear reduction) to get the graded structure.

// Q-style presentation in five variables x, y, z, w, t with four quartic
// powers, three mixed quartics, and the t-annihilating quadrics.  Hilbert
// function 1, 5, 11, 21, 29, 28, 22, 12, 3.
AlgebraSpec example_may4(const FieldSpec& field);

// k[x]/(x^4).
AlgebraSpec example_x4(const FieldSpec& field);

// k[x, y]/(x^3, y^2).
AlgebraSpec example_x3y2(const FieldSpec& field);

// k[x, y, z]/(x^2, y^2, z^2), the Gorenstein cube with socle degree 3.
AlgebraSpec example_e3gor(const FieldSpec& field);

// k[x, y, z]/(x^2 y, x^2 z, y^3, z^3, x^4 + y^2 z^2), a Gorenstein algebra
// with Hilbert function 1, 3, 6, 6, 3, 1.
AlgebraSpec example_rem75(const FieldSpec& field);

// The coordinate ring of r x c generic matrices modulo their size x size
// minors: variables m11 .. m<r><c>, one generator per minor.  Requires
// 2 <= size <= r <= 9 and size <= c <= 9 so the variable names stay
// two-digit.  The result is not Artinian; reduce by generic linear forms
// before building.
AlgebraSpec generic_minors(std::size_t rows, std::size_t cols, int size,
                           const FieldSpec& field);

// The threefold Segre embedding of P^1 x P^1 x P^1: eight variables
// w000 .. w111 indexed by binary triples, cut out by the nine independent
// 2 x 2 minors of the flattenings (six face minors plus three diagonal
// ones).  Not Artinian; reduce by four generic linear forms to reach
// Hilbert function 1, 4, 1.
AlgebraSpec example_segre_cube(const FieldSpec& field);

// Determinant of a square matrix of polynomials by Laplace expansion along
// the first row.  All entries must share one ring; the matrix is given in
// row-major order.
Poly poly_determinant(const std::vector<std::vector<Poly>>& entries);

}  // namespace ezd
