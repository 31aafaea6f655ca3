#pragma once

// Lyndon bases of the free Lie algebra over Z. A Lyndon word is strictly
// smaller than all of its proper cyclic rotations; the standard bracketings
// of the Lyndon words of length n form a Z-basis of the degree-n part, and
// the expansion of such a bracketing is unitriangular against the
// lexicographic order. Coordinate extraction is therefore pure integer
// back-substitution.

#include <map>
#include <string>
#include <vector>

#include "surfalg/ncpoly.hpp"
#include "surfalg/numeric.hpp"

namespace surfalg {

// (1/n) sum_{d|n} mu(d) rank^{n/d}
Int witt_dimension(int rank, int degree);

// All Lyndon words of the given length, lexicographically increasing.
// Memoized; the returned reference stays valid for the process lifetime.
const std::vector<Monomial>& lyndon_words(int rank, int degree);

bool is_lyndon(const Monomial& w);

// Standard factorization w = u v with v the longest proper Lyndon suffix
// (equivalently the lexicographically least proper suffix).
std::pair<Monomial, Monomial> standard_factorization(const Monomial& w);

// Graded element of the free Lie algebra in Lyndon coordinates.
struct LieElement {
  int rank = 0;
  // degree -> (Lyndon word -> coefficient), no zeros stored
  std::map<int, std::map<Monomial, Int>> coords;

  bool is_zero() const { return coords.empty(); }
  void add(int degree, const Monomial& w, const Int& c);
  static LieElement generator(int rank, int index);
};

bool operator==(const LieElement& u, const LieElement& v);
LieElement operator+(const LieElement& u, const LieElement& v);
LieElement operator-(const LieElement& u, const LieElement& v);
LieElement operator*(const Int& c, const LieElement& u);

// Expansion of the standard bracketing of a Lyndon word as a tensor.
NcPoly lyndon_bracket_poly(int rank, const Monomial& w, int trunc);

NcPoly lie_to_poly(const LieElement& u, int trunc);

// Lyndon coordinates of a homogeneous Lie tensor. The input is certified by
// the Dynkin criterion (left-to-right bracketing delta with delta(p) = n p);
// failure throws not_lie_error.
LieElement assoc_coords(const NcPoly& p);

// Left-to-right bracketing map on a homogeneous polynomial.
NcPoly dynkin_map(const NcPoly& p);

// Bracket via expansion and re-extraction. max_degree caps the result;
// exceeding it throws degree_cap_error.
LieElement lie_bracket(const LieElement& u, const LieElement& v, int max_degree);

// Coordinates of the degree-n part over lyndon_words(rank, n).
IntVec lie_coords_vector(const LieElement& u, int degree);
LieElement lie_from_vector(int rank, int degree, const IntVec& v);

// "degree:word:coefficient" lines, ascending degree then word.
std::string lie_to_string(const LieElement& u);

}  // namespace surfalg
