#include "surfalg/ncpoly.hpp"

#include <sstream>

#include "surfalg/errors.hpp"
#include "surfalg/words.hpp"

namespace surfalg {

NcPoly NcPoly::one(int rank, int trunc) {
  NcPoly p{rank, trunc, {}};
  p.terms.emplace(Monomial(), Int(1));
  return p;
}

NcPoly NcPoly::generator(int rank, int trunc, int index) {
  NcPoly p{rank, trunc, {}};
  if (index < 0 || index >= rank) throw parse_error("generator out of range");
  if (trunc >= 1) p.terms.emplace(Monomial(1, static_cast<char>(index)), Int(1));
  return p;
}

int NcPoly::lowest_degree() const {
  if (terms.empty()) return -1;
  return static_cast<int>(terms.begin()->first.size());
}

void NcPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NcPoly NcPoly::homogeneous_part(int degree) const {
  NcPoly p{rank, truncation_degree, {}};
  auto lo = terms.lower_bound(Monomial(static_cast<size_t>(degree), '\0'));
  // GradedLexLess sorts by size first, so scan the contiguous size range.
  for (auto it = lo; it != terms.end() &&
                     it->first.size() == static_cast<size_t>(degree);
       ++it)
    p.terms.insert(*it);
  return p;
}

NcPoly operator+(const NcPoly& p, const NcPoly& q) {
  NcPoly r = p;
  for (const auto& [m, c] : q.terms) r.add_term(m, c);
  return r;
}

NcPoly operator-(const NcPoly& p, const NcPoly& q) {
  NcPoly r = p;
  for (const auto& [m, c] : q.terms) r.add_term(m, -c);
  return r;
}

NcPoly operator*(const NcPoly& p, const NcPoly& q) {
  NcPoly r{p.rank, p.truncation_degree, {}};
  const size_t cap = static_cast<size_t>(p.truncation_degree);
  for (const auto& [mp, cp] : p.terms) {
    if (mp.size() > cap) continue;
    for (const auto& [mq, cq] : q.terms) {
      if (mp.size() + mq.size() > cap) break;  // graded order: rest is longer
      r.add_term(mp + mq, cp * cq);
    }
  }
  return r;
}

NcPoly operator*(const Int& c, const NcPoly& p) {
  NcPoly r{p.rank, p.truncation_degree, {}};
  if (c == 0) return r;
  for (const auto& [m, cp] : p.terms) r.terms.emplace(m, c * cp);
  return r;
}

bool operator==(const NcPoly& p, const NcPoly& q) { return p.terms == q.terms; }

std::string monomial_to_string(const Monomial& m) {
  std::ostringstream out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out << ".";
    out << gen_name(static_cast<int>(static_cast<unsigned char>(m[i])));
  }
  return out.str();
}

}  // namespace surfalg
