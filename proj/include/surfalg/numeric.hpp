#pragma once

// Exact integer scalars and dense matrix types. All linear algebra in this
// library runs over GMP integers inside Eigen matrices; there is no
// floating-point path anywhere.

#include <Eigen/Core>
#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace surfalg {

using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline IntMat int_identity(Index n) { return IntMat::Identity(n, n); }
inline IntMat int_zero(Index r, Index c) { return IntMat::Zero(r, c); }

// Quotient rounded to nearest (ties toward the floor side); the remainder
// a - b*q then satisfies |a - b q| <= |b|/2. Used to keep elimination
// entries small.
Int rounded_div(const Int& a, const Int& b);

bool is_zero(const IntMat& m);
bool is_zero(const IntVec& v);

// Text format shared with the CLI: first line "rows cols", then row-major
// whitespace-separated integers.
IntMat read_matrix(std::istream& in);
IntMat parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const IntMat& m);
std::string matrix_to_string(const IntMat& m);

IntVec parse_vector(const std::string& text);  // whitespace-separated entries

std::string vec_to_string(const IntVec& v);

}  // namespace surfalg
