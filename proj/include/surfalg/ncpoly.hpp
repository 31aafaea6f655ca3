#pragma once

// Degree-truncated noncommutative polynomials over Z in `rank` indeterminates.
// Monomials are byte strings of 0-based generator indices; the map comparator
// is graded lexicographic, so each homogeneous part is a contiguous range and
// iteration order is deterministic.

#include <map>
#include <string>

#include "surfalg/numeric.hpp"

namespace surfalg {

struct GradedLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Monomial = std::string;

struct NcPoly {
  int rank = 0;
  int truncation_degree = 0;
  std::map<Monomial, Int, GradedLexLess> terms;  // no zero coefficients stored

  static NcPoly zero(int rank, int trunc) { return NcPoly{rank, trunc, {}}; }
  static NcPoly one(int rank, int trunc);
  static NcPoly generator(int rank, int trunc, int index);

  bool is_zero() const { return terms.empty(); }
  // Degrees with a nonzero term; -1 if zero. Constant term has degree 0.
  int lowest_degree() const;

  void add_term(const Monomial& m, const Int& c);
  NcPoly homogeneous_part(int degree) const;
};

NcPoly operator+(const NcPoly& p, const NcPoly& q);
NcPoly operator-(const NcPoly& p, const NcPoly& q);
NcPoly operator*(const NcPoly& p, const NcPoly& q);  // truncates past the cap
NcPoly operator*(const Int& c, const NcPoly& p);
bool operator==(const NcPoly& p, const NcPoly& q);

std::string monomial_to_string(const Monomial& m);  // "a1.b1.a2"

}  // namespace surfalg
