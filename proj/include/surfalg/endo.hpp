#pragma once

// Endomorphisms of the free group given by generator images, Torelli
// validation against the surface relator, and the maps
// eps_n : Gr^n -> Gr^{n+1} induced by phi(w) w^-1.

#include <iosfwd>
#include <string>
#include <vector>

#include "surfalg/surface.hpp"
#include "surfalg/words.hpp"

namespace surfalg {

struct GroupEndo {
  int genus = 0;
  std::vector<Word> images;  // one per generator, index order
  IntMat ab;                 // 2g x 2g, column j = abelianization of images[j]
};

GroupEndo make_endo(int genus, std::vector<Word> images);
GroupEndo identity_endo(int genus);
GroupEndo inner_endo(const Word& w);  // u |-> w u w^-1

Word apply_endo(const GroupEndo& phi, const Word& w);
// compose(f, g) applies g first: compose(f,g)(w) = f(g(w)).
GroupEndo compose(const GroupEndo& f, const GroupEndo& g);

bool ab_is_identity(const GroupEndo& phi);
// S^T J S = J for the standard symplectic form.
bool ab_is_symplectic(const GroupEndo& phi);
IntMat symplectic_form_matrix(int genus);

// File format: "genus g" header, then lines "a1 -> a1 [a2, b2]" in word
// syntax; unspecified generators stay fixed. '#' starts a comment.
GroupEndo parse_endo(std::istream& in);
GroupEndo parse_endo_text(const std::string& text);
std::string endo_to_string(const GroupEndo& phi);

enum class TorelliMode { strict, mod_degree };

struct TorelliEndo {
  GroupEndo endo;
  TorelliMode mode = TorelliMode::strict;
  int validated_to_degree = 0;
};

// strict: abelianization is the identity and phi(r) is conjugate to r in the
// free group (decided exactly by cyclic reduction). mod_degree: the surface
// class of phi(r) r^-1 vanishes through degree m. Throws not_torelli_error
// with the failing condition.
TorelliEndo validate_endo(const GroupEndo& phi, TorelliMode mode, int m,
                          int max_degree = kDefaultMaxDegree);

// Class of phi(W) W^-1 in Gr^{n+1} of the surface group, for W of surface
// degree n. Requires trivial abelianization (which already forces phi to act
// trivially on every graded piece, since they are generated in degree 1).
// Throws lift_degree_error if a nonzero surface class shows up in degree <= n.
IntVec epsilon_on_word(const GroupEndo& phi, const Word& lift, int n,
                       int max_degree = kDefaultMaxDegree);

// Matrix of eps_n(phi) : Gr^n -> Gr^{n+1} over the canonical bases, columns
// indexed by surface_level(g, n).basis_words via their commutator-word lifts.
IntMat epsilon_matrix(const GroupEndo& phi, int n,
                      int max_degree = kDefaultMaxDegree);

}  // namespace surfalg
