#include "surfalg/lyndon.hpp"

#include <mutex>
#include <sstream>

#include "surfalg/errors.hpp"

namespace surfalg {

namespace {

std::vector<int> moebius_table(int n) {
  std::vector<int> mu(static_cast<size_t>(n) + 1, 1);
  std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
  std::vector<int> primes;
  for (int i = 2; i <= n; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<size_t>(i)] = -1;
    }
    for (int p : primes) {
      long ip = static_cast<long>(i) * p;
      if (ip > n) break;
      composite[static_cast<size_t>(ip)] = true;
      if (i % p == 0) {
        mu[static_cast<size_t>(ip)] = 0;
        break;
      }
      mu[static_cast<size_t>(ip)] = -mu[static_cast<size_t>(i)];
    }
  }
  return mu;
}

}  // namespace

Int witt_dimension(int rank, int degree) {
  if (rank < 1 || degree < 1) throw parse_error("witt_dimension: bad args");
  auto mu = moebius_table(degree);
  Int sum = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0 || mu[static_cast<size_t>(d)] == 0) continue;
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(rank),
                  static_cast<unsigned long>(degree / d));
    sum += mu[static_cast<size_t>(d)] * pw;
  }
  return sum / degree;
}

const std::vector<Monomial>& lyndon_words(int rank, int degree) {
  if (rank < 1 || degree < 1) throw parse_error("lyndon_words: bad args");
  static std::mutex mtx;
  static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(rank, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Duval's generation of Lyndon words of length exactly `degree`.
  std::vector<Monomial> out;
  std::string w(1, '\0');
  for (;;) {
    if (w.size() == static_cast<size_t>(degree)) out.push_back(w);
    // extend periodically to full length
    size_t n = w.size();
    while (w.size() < static_cast<size_t>(degree))
      w.push_back(w[w.size() - n]);
    // increment the last incrementable position
    while (!w.empty() && w.back() == static_cast<char>(rank - 1)) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return cache.emplace(key, std::move(out)).first->second;
}

bool is_lyndon(const Monomial& w) {
  if (w.empty()) return false;
  const size_t n = w.size();
  for (size_t r = 1; r < n; ++r) {
    // compare w with its rotation by r
    for (size_t i = 0; i < n; ++i) {
      char a = w[i], b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a proper rotation
    }
  }
  return true;
}

std::pair<Monomial, Monomial> standard_factorization(const Monomial& w) {
  if (w.size() < 2) throw parse_error("standard_factorization: length >= 2");
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.compare(i, std::string::npos, w, best, std::string::npos) < 0)
      best = i;
  return {w.substr(0, best), w.substr(best)};
}

void LieElement::add(int degree, const Monomial& w, const Int& c) {
  if (c == 0) return;
  auto& layer = coords[degree];
  auto it = layer.find(w);
  if (it == layer.end()) {
    layer.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) layer.erase(it);
  }
  if (layer.empty()) coords.erase(degree);
}

LieElement LieElement::generator(int rank, int index) {
  LieElement u{rank, {}};
  u.add(1, Monomial(1, static_cast<char>(index)), 1);
  return u;
}

bool operator==(const LieElement& u, const LieElement& v) {
  return u.coords == v.coords;
}

LieElement operator+(const LieElement& u, const LieElement& v) {
  LieElement r = u;
  for (const auto& [d, layer] : v.coords)
    for (const auto& [w, c] : layer) r.add(d, w, c);
  return r;
}

LieElement operator-(const LieElement& u, const LieElement& v) {
  LieElement r = u;
  for (const auto& [d, layer] : v.coords)
    for (const auto& [w, c] : layer) r.add(d, w, -c);
  return r;
}

LieElement operator*(const Int& c, const LieElement& u) {
  LieElement r{u.rank, {}};
  for (const auto& [d, layer] : u.coords)
    for (const auto& [w, cw] : layer) r.add(d, w, c * cw);
  return r;
}

NcPoly lyndon_bracket_poly(int rank, const Monomial& w, int trunc) {
  if (w.size() == 1) return NcPoly::generator(rank, trunc, w[0]);
  auto [u, v] = standard_factorization(w);
  NcPoly pu = lyndon_bracket_poly(rank, u, trunc);
  NcPoly pv = lyndon_bracket_poly(rank, v, trunc);
  return pu * pv - pv * pu;
}

NcPoly lie_to_poly(const LieElement& u, int trunc) {
  NcPoly p = NcPoly::zero(u.rank, trunc);
  for (const auto& [d, layer] : u.coords) {
    if (d > trunc)
      throw degree_cap_error("lie_to_poly: degree exceeds truncation");
    for (const auto& [w, c] : layer)
      p = p + c * lyndon_bracket_poly(u.rank, w, trunc);
  }
  return p;
}

NcPoly dynkin_map(const NcPoly& p) {
  NcPoly r = NcPoly::zero(p.rank, p.truncation_degree);
  for (const auto& [m, c] : p.terms) {
    if (m.empty()) throw not_lie_error("dynkin_map: constant term");
    // left-normed bracketing [[...[x1,x2],...],xn] as a tensor
    NcPoly acc = NcPoly::generator(p.rank, p.truncation_degree, m[0]);
    for (size_t i = 1; i < m.size(); ++i) {
      NcPoly xi = NcPoly::generator(p.rank, p.truncation_degree, m[i]);
      acc = acc * xi - xi * acc;
    }
    r = r + c * acc;
  }
  return r;
}

LieElement assoc_coords(const NcPoly& p) {
  LieElement out{p.rank, {}};
  if (p.is_zero()) return out;
  int n = p.lowest_degree();
  for (const auto& [m, c] : p.terms)
    if (static_cast<int>(m.size()) != n)
      throw not_lie_error("assoc_coords: input not homogeneous");
  if (n == 0) throw not_lie_error("assoc_coords: constant term");
  // Dynkin-Specht-Wever certification.
  if (!(dynkin_map(p) == Int(n) * p))
    throw not_lie_error("assoc_coords: Dynkin test failed");
  // Triangular back-substitution: the expansion of a Lyndon bracketing has
  // coefficient 1 on its own word and all other monomials lexicographically
  // larger.
  NcPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms.begin();
    if (!is_lyndon(m))
      throw not_lie_error("assoc_coords: leading monomial not Lyndon");
    Int coeff = c;
    out.add(n, m, coeff);
    rem = rem - coeff * lyndon_bracket_poly(p.rank, m, p.truncation_degree);
  }
  return out;
}

LieElement lie_bracket(const LieElement& u, const LieElement& v,
                       int max_degree) {
  if (u.rank != v.rank) throw parse_error("lie_bracket: rank mismatch");
  LieElement out{u.rank, {}};
  for (const auto& [du, lu] : u.coords)
    for (const auto& [dv, lv] : v.coords) {
      int d = du + dv;
      if (d > max_degree)
        throw degree_cap_error("lie_bracket: result exceeds degree cap " +
                               std::to_string(max_degree));
      LieElement uu{u.rank, {{du, lu}}};
      LieElement vv{v.rank, {{dv, lv}}};
      NcPoly pu = lie_to_poly(uu, d);
      NcPoly pv = lie_to_poly(vv, d);
      NcPoly pr = pu * pv - pv * pu;
      if (pr.is_zero()) continue;
      out = out + assoc_coords(pr.homogeneous_part(d));
    }
  return out;
}

IntVec lie_coords_vector(const LieElement& u, int degree) {
  const auto& words = lyndon_words(u.rank, degree);
  IntVec v = IntVec::Zero(static_cast<Index>(words.size()));
  auto it = u.coords.find(degree);
  if (it == u.coords.end()) return v;
  for (size_t i = 0; i < words.size(); ++i) {
    auto jt = it->second.find(words[i]);
    if (jt != it->second.end()) v(static_cast<Index>(i)) = jt->second;
  }
  // every stored word must be accounted for
  size_t stored = it->second.size();
  size_t found = 0;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) ++found;
  if (found != stored)
    throw parse_error("lie_coords_vector: non-Lyndon coordinate present");
  return v;
}

LieElement lie_from_vector(int rank, int degree, const IntVec& v) {
  const auto& words = lyndon_words(rank, degree);
  if (static_cast<size_t>(v.size()) != words.size())
    throw parse_error("lie_from_vector: size mismatch");
  LieElement u{rank, {}};
  for (size_t i = 0; i < words.size(); ++i)
    u.add(degree, words[i], v(static_cast<Index>(i)));
  return u;
}

std::string lie_to_string(const LieElement& u) {
  std::ostringstream out;
  for (const auto& [d, layer] : u.coords)
    for (const auto& [w, c] : layer)
      out << d << ":" << monomial_to_string(w) << ":" << c.get_str() << "\n";
  return out.str();
}

}  // namespace surfalg
