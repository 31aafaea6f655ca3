#pragma once

// Brute-force group cohomology on finite modules. H^0 needs only generator
// matrices (fixed vectors of the generators), which keeps Sp(2g, F_2)
// computations tractable. H^1 enumerates the cocycle linear system for small
// full-table groups; the Bockstein bridge H^1(R, V) = H^0(R, V/2) is modeled
// on towers Z/2^k.

#include <iosfwd>
#include <string>
#include <vector>

#include "surfalg/numeric.hpp"

namespace surfalg {

// Basis of the intersection of ker(M - I) over F_p for the given generator
// matrices (rank x rank each, entries reduced mod p).
std::vector<IntVec> invariants_mod_p(const std::vector<IntMat>& generators,
                                     Index rank, long p);

// Rank over F_p, for saturation/injectivity checks of reduced maps.
Index rank_mod_p(const IntMat& m, long p);

struct FiniteGroupTable {
  Index order = 0;
  std::vector<std::vector<Index>> mult;  // mult[g][h] = g*h
  std::vector<Index> inverse;
  Index identity = 0;

  // Validates identity, inverses, and (for order <= 512) associativity.
  void validate() const;
};

FiniteGroupTable cyclic_group(Index n);
// Text format: "order n" then n rows of n indices.
FiniteGroupTable parse_group_table(std::istream& in);

struct FiniteModule {
  Int modulus = 2;
  Index rank = 0;
  // One matrix per group element (full-group mode for H^1) or per generator
  // (generator mode for H^0), entries reduced mod modulus.
  std::vector<IntMat> action;
  bool per_element = true;

  void validate(const FiniteGroupTable& group) const;  // per-element mode
};

// "modulus n", "rank r", "matrices k", then k rank x rank integer blocks.
FiniteModule parse_module(std::istream& in);

// Elementary divisors (> 1) of Z^1/B^1 for the full-group module action.
// Guard: order * rank <= 4096, else too_large_error.
std::vector<Int> h1_bruteforce(const FiniteGroupTable& group,
                               const FiniteModule& module);

struct BocksteinReport {
  Index h0_dim = 0;                 // dim_F2 H^0(G, V/2)
  std::vector<Int> h1_divisors;     // elementary divisors of H^1(G, V)
  bool beta_injective = false;
  bool beta_surjective = false;
  bool beta_additive = false;
  bool bijective() const { return beta_injective && beta_surjective; }
};

// V = (Z/2^k)^r with an integral action (matrices multiply exactly over Z,
// reduced as needed). beta lifts an invariant of V/2 to 0/1 integers, applies
// the cocycle differential and divides by 2.
BocksteinReport bockstein_check(const FiniteGroupTable& group,
                                const std::vector<IntMat>& integral_action,
                                int k);

}  // namespace surfalg
