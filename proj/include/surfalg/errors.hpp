#pragma once

#include <stdexcept>
#include <string>

namespace surfalg {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree-truncated data was asked to exceed its configured cap.
struct degree_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A homogeneous tensor element failed the Dynkin test, i.e. it is not a Lie
// element and has no Lyndon coordinates.
struct not_lie_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The surface quotient turned out non-free in some degree. Labute's theorem
// says this cannot happen, so seeing it means the relation lattice was built
// wrong.
struct torsion_found_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_torelli_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// phi(w)w^-1 had a nonzero surface class in too low a degree.
struct lift_degree_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tau_tilde landed outside the image of f.
struct not_in_image_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct identity_failed_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct exactness_failed_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_a_unit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace surfalg
