#pragma once

// The graded Lie algebra of a surface group: Gr^n = Lib_n(H) / (q)_n where q
// is the symplectic element, the class of the surface relator. The ideal is
// built degree by degree as (q)_2 = <q>, (q)_n = [H, (q)_{n-1}]; Labute's
// theorem says every quotient is torsion free, which the construction checks
// rather than assumes. The quotient basis in each degree is a subset of the
// Lyndon words (the non-pivot coordinates of the unit-pivot echelon of the
// ideal lattice), so every basis element lifts canonically to a commutator
// word in the group.

#include <optional>
#include <vector>

#include "surfalg/magnus.hpp"
#include "surfalg/snf.hpp"
#include "surfalg/words.hpp"

namespace surfalg {

struct SurfaceLevel {
  int genus = 0;
  int degree = 0;
  Index ambient_rank = 0;  // Witt dimension of Lib_n on 2g generators
  Index rank = 0;          // quotient rank
  std::vector<Monomial> basis_words;   // non-pivot Lyndon words
  std::vector<Index> pivot_rows;       // eliminated coordinates
  ColumnEchelon ech;                   // fully reduced ideal echelon
  IntMat ideal_raw;                    // nested-bracket spanning columns
  std::vector<Word> ideal_raw_words;   // group words realizing those columns
  std::vector<Int> ideal_divisors;     // Smith divisors of ideal_raw

  IntVec project(const IntVec& ambient) const;
  IntVec project(const LieElement& u) const;  // the degree-n layer of u
  IntMat projection_matrix() const;
  // Lyndon word of basis index k back into ambient coordinates.
  IntVec section(Index k) const;
};

// Memoized per (genus, degree); construction verifies unit pivots and Smith
// divisors and throws torsion_found_error otherwise. degree must be within
// max_degree.
const SurfaceLevel& surface_level(int genus, int degree,
                                  int max_degree = kDefaultMaxDegree);

// q as a LieElement / in Lyndon-degree-2 coordinates.
LieElement symplectic_element(int genus);

// Canonical group-word lift of a Lyndon word: the commutator word of its
// standard bracketing.
Word canonical_lift(int genus, const Monomial& lyndon_word);

// A word of the normal closure of the relator, inside the n-th lower central
// term, whose free class has the given ambient coordinates; nullopt when the
// coordinates are not in the ideal lattice.
std::optional<Word> realize_ideal_class(int genus, int degree,
                                        const IntVec& ambient);

// Lowest degree d <= cap with nonzero class in Gr^d of the surface group,
// with the class in quotient coordinates. Free classes that land in the
// ideal are divided out by relator words and the scan continues, so this is
// the genuine surface filtration, not the free one.
struct SurfaceClass {
  int degree;
  IntVec coords;
};
std::optional<SurfaceClass> surface_class(const Word& w, int cap);

// Cache directory override for memoized levels (set via SURFALG_CACHE_DIR);
// levels are stored as text keyed by genus, degree and format version.
std::optional<std::string> cache_dir();

}  // namespace surfalg
