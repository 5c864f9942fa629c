#pragma once

#include <vector>

#include "crn/matrix.hpp"

namespace crn {

struct RrefResult {
  RatMat reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form (unique); exact Gauss-Jordan.
RrefResult rref(const RatMat& m);

int rank_of(const RatMat& m);
int rank_of(const IntMat& m);

/// Canonical kernel basis from the RREF: one vector per free column, in
/// ascending free-column order. Each vector v satisfies m·v = 0.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

/// Fraction-free determinant (Bareiss). The rational overload scales each row
/// to integers first and divides the integer determinant back out.
Int det_bareiss(const IntMat& m);
Rat det_bareiss(const RatMat& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Zero rows are dropped; pivots are positive and entries above a pivot are
/// reduced into [0, pivot). The result is the canonical basis of the row
/// lattice.
IntMat hnf_rows(const IntMat& m);

/// Same reduction but keeping the full row count (zero rows sink to the
/// bottom) and recording the row operations: u is unimodular with u*m == h.
/// Returns the row rank.
int hnf_rows_transform(const IntMat& m, IntMat& h, IntMat& u);

/// Columns form the canonical basis of {x in Z^n : m·x = 0}. The lattice is
/// saturated (any rational kernel vector is a rational combination of the
/// columns) and every column is primitive.
IntMat integer_kernel(const IntMat& m);
IntMat integer_kernel(const RatMat& m);

/// Rows form a primitive integer basis of the orthogonal complement of the
/// column span of v.
IntMat integer_complement(const IntMat& v);

/// Smallest integer vector on the ray of a rational vector: clears
/// denominators and divides by the gcd. Zero maps to zero.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

}  // namespace crn
