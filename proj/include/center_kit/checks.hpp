#pragma once

#include <cstdint>

#include "center_kit/canonical_algebra.hpp"
#include "center_kit/report.hpp"
#include "center_kit/rng.hpp"

namespace ck {

// Shared check suites. Thresholds are written for the base tolerance 1e-9 and scale
// linearly with Options::tol.
struct Options {
  std::uint64_t seed = 1;
  int trials = 50;
  Mode mode = Mode::Unitary;
  double tol = 1e-9;
  double scaled(double t) const { return t * (tol / 1e-9); }
};

IndObject random_ind_object(const FusionCategory& C, Rng& rng, int max_total = 3);
IndMorphism random_ind_morphism(const IndObject& x, const IndObject& y, Rng& rng);
// Random invertible endomorphism with its inverse; unitary when requested.
std::pair<IndMorphism, IndMorphism> random_automorphism(const IndObject& x, Rng& rng, bool unitary);

// Copies of C with one F-block multiplied by a phase, one per block not involving the unit.
std::vector<FusionCategory> mutated_categories(const FusionCategory& C);

void check_validation(const FusionCategory& C, Report& r, const Options& o);
void check_mutations(const FusionCategory& C, Report& r, const Options& o);
void check_monad(const FusionCategory& C, Report& r, const Options& o);
void check_bimonad(const FusionCategory& C, Report& r, const Options& o);
void check_rho(const FusionCategory& C, Report& r, const Options& o);
void check_free_half_braidings(const FusionCategory& C, Report& r, const Options& o);
void check_phi_psi(const FusionCategory& C, Report& r, const Options& o);
void check_canonical_algebra(const FusionCategory& C, Report& r, const Options& o);
void check_bimodule_roundtrip(const FusionCategory& C, Report& r, const Options& o);
void check_count_equivalence(const FusionCategory& C, Report& r, const Options& o);
// Center table and checks; expected_count < 0 skips the count check.
CenterReport check_center(const FusionCategory& C, Report& r, const Options& o, bool emit_braidings = false);

// Known simple counts of the center for the built-in categories, or -1.
int expected_center_count(const FusionCategory& C);

}  // namespace ck
