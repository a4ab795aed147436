#pragma once

#include "center_kit/fusion_category.hpp"

namespace ck {

struct ValidationReport {
  double pentagon = 0;
  double f_unitarity = 0;
  double conjugate = 0;   // both zig-zag identities
  double cup_norm = 0;    // |R^*R - d| and |Rbar^*Rbar - d|
  double dimension = 0;   // |d_a d_b - sum_c N d_c|
  bool pass(double tol) const {
    return pentagon < tol && f_unitarity < tol && conjugate < tol && cup_norm < tol && dimension < tol;
  }
};

ValidationReport validate(const FusionCategory& C);
double pentagon_residual(const FusionCategory& C);

}  // namespace ck
