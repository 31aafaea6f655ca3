#pragma once

// Exact integer linear algebra: Smith normal form, saturated kernels, image
// membership, and column echelon forms of lattices. Everything is over
// arbitrary-precision integers; these routines back every torsion and
// exactness claim in the library.

#include <optional>
#include <vector>

#include "surfalg/numeric.hpp"

namespace surfalg {

struct SmithForm {
  // Nonzero divisor chain d1 | d2 | ... | dr (all positive); the rank of the
  // input is diag.size().
  std::vector<Int> diag;
  IntMat left;   // unimodular, rows x rows
  IntMat right;  // unimodular, cols x cols
};

// left * a * right is diagonal with SmithForm::diag on the diagonal (padded
// with zeros). Pivot rule: smallest nonzero absolute value, ties broken by
// row then column index, so the result is reproducible.
SmithForm smith_normal_form(const IntMat& a);

// Divisor chain only; no transform bookkeeping. Much cheaper on large inputs.
std::vector<Int> snf_divisors(const IntMat& a);

inline Index snf_rank(const IntMat& a) {
  return static_cast<Index>(snf_divisors(a).size());
}

// Basis of the integer kernel {x : a x = 0}. The kernel of an integer matrix
// is automatically saturated; the returned columns are a lattice basis.
std::vector<IntVec> kernel_basis(const IntMat& a);

// Some x with a x = b over the integers, if any exists.
std::optional<IntVec> solve_in_image(const IntMat& a, const IntVec& b);

// Column echelon form of the lattice spanned by the columns of a. Column
// operations only, so the column span is unchanged. Pivot rows are strictly
// increasing; when all pivots are +-1 the form is fully reduced (each pivot
// row is zero in every other column) and the quotient Z^rows / span is free
// with the non-pivot coordinates as a basis.
struct ColumnEchelon {
  IntMat cols;                  // rows x rank, echelon basis of the span
  std::vector<Index> pivot_rows;  // one per column, strictly increasing
  bool unit_pivots = false;
  // Column operations applied, for callers that track side data:
  //   {kSwap, j, k, 0}  swap columns j,k
  //   {kAddMul, j, k, c} col_j += c * col_k
  //   {kNegate, j, 0, 0} col_j = -col_j
  // recorded against the original column indexing after prior ops.
};

ColumnEchelon column_echelon(IntMat a);

// Reduce v against a fully reduced unit-pivot echelon; returns the residue
// (zero iff v lies in the lattice) and the coefficients used at each pivot.
IntVec echelon_reduce(const ColumnEchelon& e, IntVec v,
                      std::vector<Int>* coeffs = nullptr);

inline bool in_lattice(const ColumnEchelon& e, const IntVec& v) {
  return is_zero(echelon_reduce(e, v));
}

// gcd of all k x k minors for the test oracle; k up to 6 is intended.
Int minors_gcd(const IntMat& a, int k);

}  // namespace surfalg
