#include "surfalg/numeric.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "surfalg/errors.hpp"

namespace surfalg {

Int rounded_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // r has the sign of b; move to the nearest multiple.
  Int babs = abs(b);
  if (2 * abs(r) > babs) q += sgn(b) > 0 ? 1 : -1;
  return q;
}

bool is_zero(const IntMat& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

IntMat read_matrix(std::istream& in) {
  long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw parse_error("matrix header must be 'rows cols'");
  IntMat m(rows, cols);
  std::string tok;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      if (!(in >> tok)) throw parse_error("matrix ended early");
      try {
        m(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw parse_error("bad integer '" + tok + "' in matrix");
      }
    }
  return m;
}

IntMat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMat& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m(i, j).get_str();
    }
    out << "\n";
  }
}

std::string matrix_to_string(const IntMat& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

IntVec parse_vector(const std::string& text) {
  std::istringstream in(text);
  std::vector<Int> vals;
  std::string tok;
  while (in >> tok) {
    try {
      vals.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad integer '" + tok + "' in vector");
    }
  }
  IntVec v(static_cast<Index>(vals.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = vals[static_cast<size_t>(i)];
  return v;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << v(i).get_str();
  }
  return out.str();
}

}  // namespace surfalg
