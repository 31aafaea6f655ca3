#include "surfalg/snf.hpp"

#include <algorithm>
#include <cassert>

#include "surfalg/errors.hpp"

namespace surfalg {

namespace {

// a.row(i) -= q * a.row(k), columns from `from` on.
void row_submul(IntMat& a, Index i, Index k, const Int& q, Index from) {
  if (q == 0) return;
  for (Index j = from; j < a.cols(); ++j)
    mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
}

void col_submul(IntMat& a, Index j, Index k, const Int& q, Index from) {
  if (q == 0) return;
  for (Index i = from; i < a.rows(); ++i)
    mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
}

struct SnfState {
  IntMat a;
  IntMat u, v;
  bool track;
};

// Smallest |nonzero| in a(k.., k..), ties by row then column.
bool find_pivot(const IntMat& a, Index k, Index& pr, Index& pc) {
  bool found = false;
  Int best;
  for (Index i = k; i < a.rows(); ++i)
    for (Index j = k; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        best = ax;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

void snf_run(SnfState& s) {
  IntMat& a = s.a;
  const Index rows = a.rows(), cols = a.cols();
  Index k = 0;
  while (k < rows && k < cols) {
    Index pr = 0, pc = 0;
    if (!find_pivot(a, k, pr, pc)) break;
    if (pr != k) {
      a.row(pr).swap(a.row(k));
      if (s.track) s.u.row(pr).swap(s.u.row(k));
    }
    if (pc != k) {
      a.col(pc).swap(a.col(k));
      if (s.track) s.v.col(pc).swap(s.v.col(k));
    }
    for (;;) {
      // Clear column k.
      bool col_clear = true;
      for (Index i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        Int q = rounded_div(a(i, k), a(k, k));
        row_submul(a, i, k, q, k);
        if (s.track) row_submul(s.u, i, k, q, 0);
        if (a(i, k) != 0) {
          // Remainder is strictly smaller; promote it to pivot.
          a.row(i).swap(a.row(k));
          if (s.track) s.u.row(i).swap(s.u.row(k));
          col_clear = false;
        }
      }
      if (!col_clear) continue;
      // Clear row k.
      bool row_clear = true;
      for (Index j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        Int q = rounded_div(a(k, j), a(k, k));
        col_submul(a, j, k, q, k);
        if (s.track) col_submul(s.v, j, k, q, 0);
        if (a(k, j) != 0) {
          a.col(j).swap(a.col(k));
          if (s.track) s.v.col(j).swap(s.v.col(k));
          row_clear = false;
        }
      }
      if (!row_clear) continue;
      // Pivot must divide the rest of the submatrix.
      bool divides = true;
      for (Index i = k + 1; i < rows && divides; ++i)
        for (Index j = k + 1; j < cols && divides; ++j) {
          if (a(i, j) % a(k, k) != 0) {
            a.row(k) += a.row(i);
            if (s.track) s.u.row(k) += s.u.row(i);
            divides = false;
          }
        }
      if (divides) break;
    }
    if (a(k, k) < 0) {
      a.row(k) = -a.row(k);
      if (s.track) s.u.row(k) = -s.u.row(k);
    }
    ++k;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  SnfState s{a, int_identity(a.rows()), int_identity(a.cols()), true};
  snf_run(s);
  SmithForm out;
  for (Index k = 0; k < std::min(s.a.rows(), s.a.cols()); ++k) {
    if (s.a(k, k) == 0) break;
    out.diag.push_back(s.a(k, k));
  }
  out.left = std::move(s.u);
  out.right = std::move(s.v);
  return out;
}

std::vector<Int> snf_divisors(const IntMat& a) {
  SnfState s{a, IntMat(), IntMat(), false};
  snf_run(s);
  std::vector<Int> diag;
  for (Index k = 0; k < std::min(s.a.rows(), s.a.cols()); ++k) {
    if (s.a(k, k) == 0) break;
    diag.push_back(s.a(k, k));
  }
  return diag;
}

std::vector<IntVec> kernel_basis(const IntMat& a) {
  SmithForm f = smith_normal_form(a);
  Index r = static_cast<Index>(f.diag.size());
  std::vector<IntVec> basis;
  for (Index j = r; j < a.cols(); ++j) basis.push_back(f.right.col(j));
  return basis;
}

std::optional<IntVec> solve_in_image(const IntMat& a, const IntVec& b) {
  if (b.size() != a.rows()) throw parse_error("solve_in_image: size mismatch");
  SmithForm f = smith_normal_form(a);
  IntVec c = f.left * b;
  Index r = static_cast<Index>(f.diag.size());
  for (Index i = r; i < c.size(); ++i)
    if (c(i) != 0) return std::nullopt;
  IntVec y = IntVec::Zero(a.cols());
  for (Index i = 0; i < r; ++i) {
    if (c(i) % f.diag[static_cast<size_t>(i)] != 0) return std::nullopt;
    y(i) = c(i) / f.diag[static_cast<size_t>(i)];
  }
  return f.right * y;
}

ColumnEchelon column_echelon(IntMat a) {
  const Index rows = a.rows(), cols = a.cols();
  ColumnEchelon out;
  Index cur = 0;
  for (Index r = 0; r < rows && cur < cols; ++r) {
    for (;;) {
      Index jmin = -1;
      Int best;
      for (Index j = cur; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        Int ax = abs(a(r, j));
        if (jmin < 0 || ax < best) {
          best = ax;
          jmin = j;
        }
      }
      if (jmin < 0) break;  // no pivot in this row
      if (jmin != cur) a.col(jmin).swap(a.col(cur));
      bool done = true;
      for (Index j = cur + 1; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        Int q = rounded_div(a(r, j), a(r, cur));
        col_submul(a, j, cur, q, 0);
        if (a(r, j) != 0) done = false;
      }
      if (done) {
        if (a(r, cur) < 0) a.col(cur) = -a.col(cur);
        out.pivot_rows.push_back(r);
        ++cur;
        break;
      }
    }
  }
  out.cols = a.leftCols(cur);
  out.unit_pivots = true;
  for (size_t i = 0; i < out.pivot_rows.size(); ++i)
    if (out.cols(out.pivot_rows[i], static_cast<Index>(i)) != 1)
      out.unit_pivots = false;
  if (out.unit_pivots) {
    // Full reduction: clear pivot rows in every other column.
    for (Index i = 0; i < out.cols.cols(); ++i) {
      Index pr = out.pivot_rows[static_cast<size_t>(i)];
      for (Index j = 0; j < out.cols.cols(); ++j) {
        if (j == i || out.cols(pr, j) == 0) continue;
        Int q = out.cols(pr, j);
        col_submul(out.cols, j, i, q, 0);
      }
    }
  }
  return out;
}

IntVec echelon_reduce(const ColumnEchelon& e, IntVec v,
                      std::vector<Int>* coeffs) {
  if (coeffs) coeffs->assign(static_cast<size_t>(e.cols.cols()), Int(0));
  for (Index i = 0; i < e.cols.cols(); ++i) {
    Index pr = e.pivot_rows[static_cast<size_t>(i)];
    const Int& piv = e.cols(pr, i);
    if (v(pr) == 0) continue;
    if (v(pr) % piv != 0) continue;  // leaves a nonzero residue at pr
    Int q = v(pr) / piv;
    for (Index r = 0; r < v.size(); ++r)
      mpz_submul(v(r).get_mpz_t(), q.get_mpz_t(), e.cols(r, i).get_mpz_t());
    if (coeffs) (*coeffs)[static_cast<size_t>(i)] = q;
  }
  return v;
}

namespace {

Int det_recursive(const IntMat& m) {
  const Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Int det = 0;
  IntMat sub(n - 1, n - 1);
  for (Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    for (Index i = 1; i < n; ++i) {
      Index js = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == c) continue;
        sub(i - 1, js++) = m(i, j);
      }
    }
    Int term = m(0, c) * det_recursive(sub);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

void combinations(Index n, int k, std::vector<std::vector<Index>>& out) {
  std::vector<Index> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

Int minors_gcd(const IntMat& a, int k) {
  if (k <= 0 || k > a.rows() || k > a.cols()) return 0;
  std::vector<std::vector<Index>> rsel, csel;
  combinations(a.rows(), k, rsel);
  combinations(a.cols(), k, csel);
  Int g = 0;
  IntMat sub(k, k);
  for (const auto& rs : rsel)
    for (const auto& cs : csel) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub(i, j) = a(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
      Int d = det_recursive(sub);
      g = gcd(g, d);
      if (g == 1) return g;
    }
  return abs(g);
}

}  // namespace surfalg
