#pragma once

// Magnus expansion of free-group words: x |-> 1 + X, x^-1 |-> 1 - X + X^2 -
// ... truncated at the configured degree. The lowest-degree part of
// expand(w) - 1 is the class of w in the graded Lie algebra of the free
// group's lower central series.

#include <optional>

#include "surfalg/lyndon.hpp"
#include "surfalg/ncpoly.hpp"
#include "surfalg/words.hpp"

namespace surfalg {

inline constexpr int kDefaultMaxDegree = 5;

NcPoly magnus_expand(const Word& w, int cap);

// Smallest n <= cap with a nonzero degree-n part of expand(w) - 1; nullopt
// means ">= cap+1".
std::optional<int> filtration_degree(const Word& w, int cap);

// Free-group graded class: the lowest nonzero part, certified Lie. Throws
// degree_cap_error when the word is trivial through the cap.
LieElement gr_class(const Word& w, int cap);

}  // namespace surfalg
