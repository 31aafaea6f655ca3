#include "surfalg/finite_coh.hpp"

#include <istream>
#include <set>

#include "surfalg/errors.hpp"
#include "surfalg/snf.hpp"

namespace surfalg {

namespace {

long mod_pos(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

long inv_mod_p(long a, long p) {
  long t = 0, newt = 1, r = p, newr = mod_pos(a, p);
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw parse_error("inv_mod_p: not invertible");
  return mod_pos(t, p);
}

std::vector<std::vector<long>> to_modp(const IntMat& m, long p) {
  std::vector<std::vector<long>> a(static_cast<size_t>(m.rows()),
                                   std::vector<long>(static_cast<size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      Int r = m(i, j) % p;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          mod_pos(r.get_si(), p);
    }
  return a;
}

// Row echelon over F_p; returns pivot columns.
std::vector<Index> eliminate_mod_p(std::vector<std::vector<long>>& a, long p) {
  std::vector<Index> pivots;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    long inv = inv_mod_p(a[r][c], p);
    for (size_t j = c; j < cols; ++j) a[r][j] = mod_pos(a[r][j] * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        a[i][j] = mod_pos(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back(static_cast<Index>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<IntVec> invariants_mod_p(const std::vector<IntMat>& generators,
                                     Index rank, long p) {
  if (p < 2) throw parse_error("invariants_mod_p: p must be prime >= 2");
  IntMat stacked(static_cast<Index>(generators.size()) * rank, rank);
  for (size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].rows() != rank || generators[k].cols() != rank)
      throw parse_error("invariants_mod_p: matrix size mismatch");
    stacked.middleRows(static_cast<Index>(k) * rank, rank) =
        generators[k] - int_identity(rank);
  }
  auto a = to_modp(stacked, p);
  auto pivots = eliminate_mod_p(a, p);
  // Free columns give the kernel basis by back-substitution.
  std::vector<bool> is_pivot(static_cast<size_t>(rank), false);
  for (Index c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<IntVec> basis;
  for (Index free_c = 0; free_c < rank; ++free_c) {
    if (is_pivot[static_cast<size_t>(free_c)]) continue;
    IntVec v = IntVec::Zero(rank);
    v(free_c) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      long coeff = a[r][static_cast<size_t>(free_c)];
      if (coeff != 0) v(pivots[r]) = mod_pos(-coeff, p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Index rank_mod_p(const IntMat& m, long p) {
  auto a = to_modp(m, p);
  return static_cast<Index>(eliminate_mod_p(a, p).size());
}

void FiniteGroupTable::validate() const {
  if (order <= 0) throw parse_error("group table: empty");
  if (static_cast<Index>(mult.size()) != order)
    throw parse_error("group table: bad multiplication table");
  for (const auto& row : mult) {
    if (static_cast<Index>(row.size()) != order)
      throw parse_error("group table: ragged multiplication table");
    for (Index x : row)
      if (x < 0 || x >= order) throw parse_error("group table: index range");
  }
  for (Index g = 0; g < order; ++g) {
    if (mult[static_cast<size_t>(identity)][static_cast<size_t>(g)] != g ||
        mult[static_cast<size_t>(g)][static_cast<size_t>(identity)] != g)
      throw parse_error("group table: identity law fails");
    Index gi = inverse[static_cast<size_t>(g)];
    if (mult[static_cast<size_t>(g)][static_cast<size_t>(gi)] != identity)
      throw parse_error("group table: inverse law fails");
  }
  if (order <= 512) {
    for (Index g = 0; g < order; ++g)
      for (Index h = 0; h < order; ++h)
        for (Index k = 0; k < order; ++k) {
          Index gh = mult[static_cast<size_t>(g)][static_cast<size_t>(h)];
          Index hk = mult[static_cast<size_t>(h)][static_cast<size_t>(k)];
          if (mult[static_cast<size_t>(gh)][static_cast<size_t>(k)] !=
              mult[static_cast<size_t>(g)][static_cast<size_t>(hk)])
            throw parse_error("group table: associativity fails");
        }
  }
}

namespace {

void finish_table(FiniteGroupTable& t) {
  t.identity = -1;
  for (Index e = 0; e < t.order; ++e) {
    bool ok = true;
    for (Index g = 0; g < t.order && ok; ++g)
      ok = t.mult[static_cast<size_t>(e)][static_cast<size_t>(g)] == g &&
           t.mult[static_cast<size_t>(g)][static_cast<size_t>(e)] == g;
    if (ok) {
      t.identity = e;
      break;
    }
  }
  if (t.identity < 0) throw parse_error("group table: no identity");
  t.inverse.assign(static_cast<size_t>(t.order), -1);
  for (Index g = 0; g < t.order; ++g)
    for (Index h = 0; h < t.order; ++h)
      if (t.mult[static_cast<size_t>(g)][static_cast<size_t>(h)] == t.identity)
        t.inverse[static_cast<size_t>(g)] = h;
  t.validate();
}

}  // namespace

FiniteGroupTable cyclic_group(Index n) {
  FiniteGroupTable t;
  t.order = n;
  t.mult.assign(static_cast<size_t>(n), std::vector<Index>(static_cast<size_t>(n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      t.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  finish_table(t);
  return t;
}

FiniteGroupTable parse_group_table(std::istream& in) {
  std::string tag;
  long order = 0;
  if (!(in >> tag >> order) || tag != "order" || order < 1)
    throw parse_error("group file must start with 'order n'");
  FiniteGroupTable t;
  t.order = order;
  t.mult.assign(static_cast<size_t>(order),
                std::vector<Index>(static_cast<size_t>(order)));
  for (long i = 0; i < order; ++i)
    for (long j = 0; j < order; ++j) {
      long x;
      if (!(in >> x)) throw parse_error("group table ended early");
      t.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
    }
  finish_table(t);
  return t;
}

void FiniteModule::validate(const FiniteGroupTable& group) const {
  if (!per_element) throw parse_error("module validate: needs per-element mode");
  if (static_cast<Index>(action.size()) != group.order)
    throw parse_error("module: one matrix per group element required");
  for (const auto& m : action)
    if (m.rows() != rank || m.cols() != rank)
      throw parse_error("module: matrix size mismatch");
  auto reduce_eq = [&](const IntMat& x, const IntMat& y) {
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < x.cols(); ++j)
        if ((x(i, j) - y(i, j)) % modulus != 0) return false;
    return true;
  };
  if (!reduce_eq(action[static_cast<size_t>(group.identity)],
                 int_identity(rank)))
    throw parse_error("module: identity must act trivially");
  for (Index g = 0; g < group.order; ++g)
    for (Index h = 0; h < group.order; ++h) {
      Index gh = group.mult[static_cast<size_t>(g)][static_cast<size_t>(h)];
      IntMat prod = action[static_cast<size_t>(g)] * action[static_cast<size_t>(h)];
      if (!reduce_eq(prod, action[static_cast<size_t>(gh)]))
        throw parse_error("module: action does not respect the table");
    }
}

FiniteModule parse_module(std::istream& in) {
  std::string tag;
  FiniteModule m;
  long modulus = 0, rank = 0, count = 0;
  if (!(in >> tag >> modulus) || tag != "modulus" || modulus < 2)
    throw parse_error("module file must start with 'modulus n'");
  if (!(in >> tag >> rank) || tag != "rank" || rank < 1)
    throw parse_error("module file needs 'rank r'");
  if (!(in >> tag >> count) || tag != "matrices" || count < 1)
    throw parse_error("module file needs 'matrices k'");
  m.modulus = modulus;
  m.rank = rank;
  for (long k = 0; k < count; ++k) {
    IntMat a(rank, rank);
    for (long i = 0; i < rank; ++i)
      for (long j = 0; j < rank; ++j) {
        std::string x;
        if (!(in >> x)) throw parse_error("module matrices ended early");
        Int v(x);
        v %= m.modulus;
        if (v < 0) v += m.modulus;
        a(i, j) = v;
      }
    m.action.push_back(std::move(a));
  }
  return m;
}

namespace {

struct SnfSolver {
  SmithForm form;
  Index rows, cols;
  explicit SnfSolver(const IntMat& a)
      : form(smith_normal_form(a)), rows(a.rows()), cols(a.cols()) {}
  std::optional<IntVec> solve(const IntVec& b) const {
    IntVec c = form.left * b;
    Index r = static_cast<Index>(form.diag.size());
    for (Index i = r; i < c.size(); ++i)
      if (c(i) != 0) return std::nullopt;
    IntVec y = IntVec::Zero(cols);
    for (Index i = 0; i < r; ++i) {
      const Int& d = form.diag[static_cast<size_t>(i)];
      if (c(i) % d != 0) return std::nullopt;
      y(i) = c(i) / d;
    }
    return IntVec(form.right * y);
  }
};

struct H1Context {
  Index order = 0, rank = 0, dim = 0;
  Int modulus;
  IntMat q_basis;                   // basis of the cocycle lattice Z
  std::unique_ptr<SnfSolver> qs;    // solves Q y = cocycle
  IntMat x;                         // relation matrix on Q-coordinates
  SmithForm xs;                     // Smith form of x
  std::vector<Int> divisors;        // all divisors of x (length dim)

  // Canonical residues identifying the class of an integral cocycle.
  std::vector<Int> class_of(const IntVec& cocycle) const {
    auto y = qs->solve(cocycle);
    if (!y) throw parse_error("h1: vector is not a cocycle");
    IntVec z = xs.left * *y;
    std::vector<Int> out;
    for (Index i = 0; i < dim; ++i) {
      const Int& d = divisors[static_cast<size_t>(i)];
      if (d == 1) {
        out.push_back(0);
        continue;
      }
      Int v = z(i) % d;
      if (v < 0) v += d;
      out.push_back(v);
    }
    return out;
  }
};

H1Context h1_context(const FiniteGroupTable& group, const FiniteModule& module) {
  module.validate(group);
  const Index order = group.order, rank = module.rank;
  if (order * rank > 4096)
    throw too_large_error("h1: order * rank exceeds 4096");
  const Int n = module.modulus;
  const Index dim = order * rank;
  // Cocycle equations f(gh) - f(g) - g f(h) = 0 mod n.
  IntMat a = int_zero(order * order * rank, dim);
  Index row = 0;
  for (Index g = 0; g < order; ++g)
    for (Index h = 0; h < order; ++h) {
      Index gh = group.mult[static_cast<size_t>(g)][static_cast<size_t>(h)];
      const IntMat& rho_g = module.action[static_cast<size_t>(g)];
      for (Index i = 0; i < rank; ++i) {
        a(row + i, gh * rank + i) += 1;
        a(row + i, g * rank + i) -= 1;
        for (Index j = 0; j < rank; ++j)
          a(row + i, h * rank + j) -= rho_g(i, j);
      }
      row += rank;
    }
  // Solutions mod n: x = V y with d_i y_i = 0 mod n.
  SmithForm fa = smith_normal_form(a);
  Index r = static_cast<Index>(fa.diag.size());
  IntMat zgen(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    Int scale = 1;
    if (j < r) {
      Int d = fa.diag[static_cast<size_t>(j)];
      scale = n / gcd(d, n);
    }
    zgen.col(j) = scale * fa.right.col(j);
  }
  IntMat zfull(dim, 2 * dim);
  zfull.leftCols(dim) = zgen;
  zfull.rightCols(dim) = n * int_identity(dim);
  H1Context ctx;
  ctx.order = order;
  ctx.rank = rank;
  ctx.dim = dim;
  ctx.modulus = n;
  ctx.q_basis = column_echelon(zfull).cols;
  if (ctx.q_basis.cols() != dim)
    throw parse_error("h1: cocycle lattice not full rank");
  ctx.qs = std::make_unique<SnfSolver>(ctx.q_basis);
  // Coboundaries (g v - v) plus n Z^dim, in Q-coordinates.
  IntMat b(dim, rank + dim);
  for (Index j = 0; j < rank; ++j) {
    IntVec v = IntVec::Zero(rank);
    v(j) = 1;
    for (Index g = 0; g < order; ++g)
      b.col(j).segment(g * rank, rank) =
          module.action[static_cast<size_t>(g)] * v - v;
  }
  b.rightCols(dim) = n * int_identity(dim);
  IntMat x(dim, b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto sol = ctx.qs->solve(b.col(j));
    if (!sol) throw parse_error("h1: coboundary outside cocycle lattice");
    x.col(j) = *sol;
  }
  ctx.x = std::move(x);
  ctx.xs = smith_normal_form(ctx.x);
  ctx.divisors.assign(static_cast<size_t>(dim), Int(0));
  for (Index i = 0; i < dim; ++i)
    ctx.divisors[static_cast<size_t>(i)] =
        i < static_cast<Index>(ctx.xs.diag.size())
            ? ctx.xs.diag[static_cast<size_t>(i)]
            : Int(0);
  for (const Int& d : ctx.divisors)
    if (d == 0) throw parse_error("h1: quotient not finite");
  return ctx;
}

}  // namespace

std::vector<Int> h1_bruteforce(const FiniteGroupTable& group,
                               const FiniteModule& module) {
  H1Context ctx = h1_context(group, module);
  std::vector<Int> out;
  for (const Int& d : ctx.divisors)
    if (d > 1) out.push_back(d);
  return out;
}

BocksteinReport bockstein_check(const FiniteGroupTable& group,
                                const std::vector<IntMat>& integral_action,
                                int k) {
  if (k < 1) throw parse_error("bockstein_check: k >= 1 required");
  if (integral_action.size() != static_cast<size_t>(group.order))
    throw parse_error("bockstein_check: one matrix per group element");
  const Index rank = integral_action.empty() ? 0 : integral_action[0].rows();
  Int two_k = 1;
  for (int i = 0; i < k; ++i) two_k *= 2;

  BocksteinReport rep;
  // H^0 of the mod-2 reduction.
  auto inv = invariants_mod_p(integral_action, rank, 2);
  rep.h0_dim = static_cast<Index>(inv.size());
  if (rep.h0_dim > 12)
    throw too_large_error("bockstein_check: H^0 too large to enumerate");

  FiniteModule mod;
  mod.modulus = two_k;
  mod.rank = rank;
  mod.per_element = true;
  for (const auto& m : integral_action) {
    IntMat r(rank, rank);
    for (Index i = 0; i < rank; ++i)
      for (Index j = 0; j < rank; ++j) {
        Int v = m(i, j) % two_k;
        if (v < 0) v += two_k;
        r(i, j) = v;
      }
    mod.action.push_back(std::move(r));
  }
  H1Context ctx = h1_context(group, mod);
  for (const Int& d : ctx.divisors)
    if (d > 1) rep.h1_divisors.push_back(d);

  // Enumerate H^0(V/2) and push each element through beta.
  Index count = Index(1) << rep.h0_dim;
  std::set<std::vector<Int>> classes;
  std::vector<std::pair<IntVec, std::vector<Int>>> images;
  bool injective = true;
  for (Index mask = 0; mask < count; ++mask) {
    IntVec v = IntVec::Zero(rank);
    for (Index b = 0; b < rep.h0_dim; ++b)
      if (mask & (Index(1) << b)) v += inv[static_cast<size_t>(b)];
    for (Index i = 0; i < rank; ++i) v(i) %= 2;  // 0/1 lift
    // beta(v): g |-> (rho(g) v - v) / 2 over Z, reduced mod 2^k.
    IntVec cocycle = IntVec::Zero(ctx.dim);
    for (Index g = 0; g < group.order; ++g) {
      IntVec diff = integral_action[static_cast<size_t>(g)] * v - v;
      for (Index i = 0; i < rank; ++i) {
        if (diff(i) % 2 != 0)
          throw parse_error("bockstein_check: differential not divisible by 2");
        Int w = (diff(i) / 2) % two_k;
        if (w < 0) w += two_k;
        cocycle(g * rank + i) = w;
      }
    }
    auto cls = ctx.class_of(cocycle);
    if (!classes.insert(cls).second) injective = false;
    images.emplace_back(v, cls);
  }
  rep.beta_injective = injective;
  Int h1_size = 1;
  for (const Int& d : rep.h1_divisors) h1_size *= d;
  rep.beta_surjective = Int(static_cast<long>(classes.size())) == h1_size;
  // Additivity on all pairs of enumerated elements.
  bool additive = true;
  for (const auto& [v1, c1] : images)
    for (const auto& [v2, c2] : images) {
      IntVec sum = v1 + v2;
      for (Index i = 0; i < rank; ++i) sum(i) %= 2;
      std::vector<Int> expect;
      for (Index i = 0; i < ctx.dim; ++i) {
        const Int& d = ctx.divisors[static_cast<size_t>(i)];
        if (d == 1) {
          expect.push_back(0);
          continue;
        }
        Int s = (c1[static_cast<size_t>(i)] + c2[static_cast<size_t>(i)]) % d;
        expect.push_back(s);
      }
      // find beta(sum)
      for (const auto& [vv, cc] : images)
        if (vv == sum && cc != expect) additive = false;
    }
  rep.beta_additive = additive;
  return rep;
}

}  // namespace surfalg
