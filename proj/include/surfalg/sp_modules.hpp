#pragma once

// The based GSp(H)-modules of low degree and the equivariant integer maps
// between them: i (wedging with q), the contraction c, the cokernel
// projection p, Johnson's embedding f, the brackets into Gr^2 and Gr^3, and
// a generating set of symplectic transvections with their induced actions.
//
// Weight tags follow the similitude convention: a module of weight w has the
// scalar matrix aI acting by a^{-w}. H and L = Lambda^3 H(-1) have weight -1,
// Gr^2 has weight -2; the (-1)-twists are absorbed into the module
// declarations so every standard map has weight shift 0.

#include <cstdint>
#include <string>
#include <vector>

#include "surfalg/snf.hpp"
#include "surfalg/surface.hpp"

namespace surfalg {

struct BasedModule {
  std::string name;
  int genus = 0;
  Index rank = 0;
  int weight = 0;
  std::vector<std::string> labels;
};

struct ModuleMap {
  std::string name;
  BasedModule source;
  BasedModule target;
  IntMat matrix;
  int weight_shift = 0;
};

ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f after g
IntVec apply(const ModuleMap& m, const IntVec& x);

// Index helpers for the exterior-power bases (pairs/triples in lex order).
std::vector<std::pair<int, int>> wedge2_pairs(int g);
std::vector<std::array<int, 3>> wedge3_triples(int g);
Index wedge2_index(int g, int p, int q);        // unordered, sign-free lookup
int wedge2_sign(int p, int q);                  // +1 if p<q, -1 if p>q, 0 if =

// omega(e_p, e_q) for the standard interleaved basis.
int omega(int p, int q);

// q = sum a_j ^ b_j in Lambda^2 coordinates.
IntVec q_in_wedge2(int g);

struct StandardMaps {
  BasedModule H, Wedge2, Gr2, Lambda3, LmodH, HxGr2, Gr3;
  ModuleMap i;            // H -> Lambda3, x |-> q ^ x
  ModuleMap c;            // Lambda3 -> H, contraction
  ModuleMap p;            // Lambda3 -> LmodH, cokernel projection of i
  ModuleMap f;            // Lambda3 -> HxGr2, Johnson's embedding
  ModuleMap embed_LmodH;  // LmodH -> Lambda3, (g-1)x - q ^ c(x)
  ModuleMap bracket2;     // Wedge2 -> Gr2
  ModuleMap bracket3;     // HxGr2 -> Gr3
  IntMat lmodh_section;   // Lambda3 x LmodH, p * section = id
};

// Memoized per genus.
const StandardMaps& build_standard_maps(int g, int max_degree = kDefaultMaxDegree);

struct SpGenerator {
  std::string name;
  IntMat on_H;
};

// The 2g^2 elementary symplectic transvections: the single-entry upper and
// lower symmetric translations and the GL-part elementaries, written in the
// interleaved basis. Every matrix satisfies S^T J S = J.
const std::vector<SpGenerator>& sp_generators(int g);

IntMat wedge2_action(int g, const IntMat& m);
IntMat wedge3_action(int g, const IntMat& m);
// Induced action on Gr^2 = Lambda^2/q; checks that m fixes q.
IntMat gr2_action(int g, const IntMat& m);
// Induced action on Gr^3 via Lie substitution in Lyndon coordinates.
IntMat gr3_action(int g, const IntMat& m);
IntMat lmodh_action(int g, const IntMat& m);
// Action on H tensor Gr^2 (H-major flattening, index h * rank2 + k).
IntMat hxgr2_action(int g, const IntMat& m);

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<CheckLine> lines;
  void add(const std::string& label, bool ok, const std::string& detail = "");
};

// c o i = (g-1) id, exact matrix identity.
CheckReport check_ci_identity(int g);

// Exactness of 0 -> Lambda^3 H -> H tensor Gr^2 -> Gr^3 -> 0 over Z:
// f injective with unit divisors, bracket3 surjective with unit divisors,
// ker(bracket3) = im(f) as saturated lattices.
CheckReport check_jacobi_exactness(int g);

// (c, p) decomposition: (g-1) x = i(c x) + E(p x) on random vectors, and the
// embedding round trip p o E = (g-1) id.
CheckReport check_decomposition(int g, int trials, uint64_t seed);

// Every standard map commutes with every generator action; generators fix q.
CheckReport check_equivariance(int g);

// Weight bookkeeping: declared weights and zero shifts on all standard maps.
CheckReport check_weights(int g);

struct DecomposeResult {
  IntVec h_component;     // c(x)
  IntVec lmodh_component; // p(x)
};

// Components of x in Lambda^3 coordinates; reconstruction holds with
// denominator g-1: (g-1) x = i(h) + E(l). Throws for g < 2.
DecomposeResult decompose(int g, const IntVec& x);

// Same over Z/modulus; needs gcd(g-1, modulus) = 1, else not_a_unit_error.
// Returns x reconstructed mod modulus as a self-check.
IntVec decompose_mod(int g, const IntVec& x, const Int& modulus);

}  // namespace surfalg
