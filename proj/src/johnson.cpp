#include "surfalg/johnson.hpp"

#include <sstream>

#include "surfalg/errors.hpp"

namespace surfalg {

IntVec tau_tilde(const TorelliEndo& phi, int max_degree) {
  const int g = phi.endo.genus;
  const SurfaceLevel& lv2 = surface_level(g, 2, max_degree);
  const Index rank2 = lv2.rank;
  IntVec tt = IntVec::Zero(2 * g * rank2);
  for (int j = 0; j < g; ++j) {
    int aj = 2 * j, bj = 2 * j + 1;
    IntVec eb = epsilon_on_word(phi.endo, word_generator(g, bj), 1, max_degree);
    IntVec ea = epsilon_on_word(phi.endo, word_generator(g, aj), 1, max_degree);
    tt.segment(aj * rank2, rank2) += eb;
    tt.segment(bj * rank2, rank2) -= ea;
  }
  return tt;
}

const IntMat& f_map(int g) { return build_standard_maps(g).f.matrix; }

IntVec johnson_tau(const TorelliEndo& phi, int max_degree) {
  const int g = phi.endo.genus;
  IntVec tt = tau_tilde(phi, max_degree);
  auto x = solve_in_image(f_map(g), tt);
  if (!x)
    throw not_in_image_error(
        "tau~ is not in the image of f; the endomorphism does not satisfy "
        "the relator constraint through degree 3");
  return *x;
}

std::optional<IntVec> in_q_wedge_H(int g, const IntVec& tau) {
  return solve_in_image(build_standard_maps(g).i.matrix, tau);
}

IntVec tau_mod_H(int g, const IntVec& tau) {
  return build_standard_maps(g).p.matrix * tau;
}

std::string tau_to_string(int g, const IntVec& tau) {
  const StandardMaps& sm = build_standard_maps(g);
  std::ostringstream out;
  for (Index k = 0; k < tau.size(); ++k) {
    if (tau(k) == 0) continue;
    out << sm.Lambda3.labels[static_cast<size_t>(k)] << ": "
        << tau(k).get_str() << "\n";
  }
  if (out.str().empty()) out << "0\n";
  return out.str();
}

}  // namespace surfalg
