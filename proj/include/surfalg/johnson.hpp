#pragma once

// The Johnson homomorphism at word level: tau~(phi) = sum_j (a_j (x)
// eps_1(phi)(b_j) - b_j (x) eps_1(phi)(a_j)) in H (x) Gr^2, which factors
// through the embedding f of Lambda^3 H; tau(phi) is the unique preimage.

#include "surfalg/endo.hpp"
#include "surfalg/sp_modules.hpp"

namespace surfalg {

// Coordinates over H (x) Gr2 with the H-major flattening of sp_modules.
IntVec tau_tilde(const TorelliEndo& phi, int max_degree = kDefaultMaxDegree);

// The matrix of f : Lambda^3 H -> H (x) Gr^2 (shared with build_standard_maps).
const IntMat& f_map(int g);

// Solves f x = tau~(phi); throws not_in_image_error when tau~ is not in the
// image, which happens exactly when phi violates the relator constraint in
// degree 3 (mod-degree validation below 3 does not rule this out).
IntVec johnson_tau(const TorelliEndo& phi, int max_degree = kDefaultMaxDegree);

// y with i(y) = x if tau lies in the standard copy q ^ H, else nullopt.
std::optional<IntVec> in_q_wedge_H(int g, const IntVec& tau);

// L/H component p(tau).
IntVec tau_mod_H(int g, const IntVec& tau);

std::string tau_to_string(int g, const IntVec& tau);  // labeled coordinates

}  // namespace surfalg
