#include "surfalg/magnus.hpp"

#include "surfalg/errors.hpp"

namespace surfalg {

NcPoly magnus_expand(const Word& w, int cap) {
  const int rank = 2 * w.genus;
  NcPoly p = NcPoly::one(rank, cap);
  for (int l : w.letters) {
    int idx = std::abs(l) - 1;
    NcPoly factor = NcPoly::one(rank, cap);
    if (l > 0) {
      factor.add_term(Monomial(1, static_cast<char>(idx)), 1);
    } else {
      Int sign = -1;
      for (int d = 1; d <= cap; ++d) {
        factor.add_term(Monomial(static_cast<size_t>(d), static_cast<char>(idx)),
                        sign);
        sign = -sign;
      }
    }
    p = p * factor;
  }
  return p;
}

std::optional<int> filtration_degree(const Word& w, int cap) {
  NcPoly p = magnus_expand(w, cap);
  p.add_term(Monomial(), -1);
  int d = p.lowest_degree();
  if (d < 0) return std::nullopt;
  return d;
}

LieElement gr_class(const Word& w, int cap) {
  NcPoly p = magnus_expand(w, cap);
  p.add_term(Monomial(), -1);
  int d = p.lowest_degree();
  if (d < 0)
    throw degree_cap_error("gr_class: word is trivial through degree " +
                           std::to_string(cap));
  return assoc_coords(p.homogeneous_part(d));
}

}  // namespace surfalg
