#pragma once

#include <cstdint>

#include "center_kit/half_braiding.hpp"

namespace ck {

struct CenterSimple {
  HalfBraiding hb;
  IndObject support;  // fiber dims of the carrier
  double qdim = 0;
  cd twist = 1.0;
  int end_dim = 0;
  int multiplicity = 0;  // copies inside the free half-braiding on the sum of all simples
  double unitary_residual = 0;
  double braid_residual = 0;
  double module_residual = 0;
};

struct CenterReport {
  std::vector<CenterSimple> simples;
  int algebra_dim = 0;      // End of the free half-braiding
  int tube_dim = 0;
  int tube_center_dim = 0;
  bool tube_blocks_match = false;
  double tube_associativity = 0;
  double dim_sum = 0;       // sum of qdim^2
  double global_dim_sq = 0;
  double orthogonality = 0; // max |Hom(X_i, X_j)| for i != j, as a dimension
  int attempts = 0;
};

// Twist of a simple half-braiding: Tr(c_{M,M}) / d_M.
cd twist(const HalfBraiding& hb);

// Simple objects of the center, by decomposing End of the free half-braiding on the sum of
// all simples with a seeded random element. Sorted by (qdim, support, arg twist).
CenterReport solve_center(const FusionCategory& C, Mode mode = Mode::Unitary, std::uint64_t seed = 1,
                          bool cross_check = true);

}  // namespace ck
