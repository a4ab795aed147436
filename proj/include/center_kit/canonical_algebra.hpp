#pragma once

#include <string>

#include "center_kit/deligne.hpp"
#include "center_kit/solve_center.hpp"

namespace ck {

// S = (+)_c cbar [x] c in C^mp [x] C, one generator iota_c per simple c.
struct CanonicalAlgebra {
  const FusionCategory* C = nullptr;
  FusionCategory ambient;
  std::vector<Label> support;  // support[c]: ambient label of cbar [x] c

  explicit CanonicalAlgebra(const FusionCategory& cat);
  int fiber_dim(Label ambient_label) const;
};

// mu^S(iota_a1 . iota_a2), one matrix per a3: rows index the ONB of C(a3bar, a2bar a1bar),
// columns the ONB of C(a3, a1 a2); entry (p, q) is the scalar p^dual o q.
std::vector<Mat> mult_S(const FusionCategory& C, Label a1, Label a2);
double mult_S_associativity(const FusionCategory& C);
double mult_S_unit(const FusionCategory& C);

// j^S maps iota_a to iota_abar; monoidality compares conj mu(a, b) with mu(bbar, abar)
// after exchanging the two factors through dual-of-adjoint.
Label star_S(const FusionCategory& C, Label a);
double star_S_monoidality(const FusionCategory& C);

// Free module S_H: fiber at b [x] c is the sum over a of C(bc, a) (x) H(a), basis (a, vertex, i).
struct SModule {
  const FusionCategory* C = nullptr;
  IndObject base;
  int fiber_dim(Label b, Label c) const;
  // The same dimension through (+)_d C(b, dbar) (x) C(c abar, d), as an independent count.
  int fiber_dim_direct(Label b, Label c) const;
};
SModule s_module(const FusionCategory& C, const IndObject& H);

// Gamma_{a1,a2}(iota_a) as a 1 x (n1 n2) matrix on ONB pairs (u, v), u in C(a1bar, a2bar abar),
// v in C(a1, a a2), entry <u^dual*, v>. Empty when either space is zero.
Mat gamma(const FusionCategory& C, Label a, Label a1, Label a2);
double gamma_norm(const FusionCategory& C, Label a, Label a1, Label a2);
// conj Gamma_{a1,a2}(iota_a)(u, v) against Gamma_{a2,a1}(iota_abar) on the rotated pair.
double gamma_star_residual(const FusionCategory& C);
// Gamma agrees with the structure constants of mu^S.
double gamma_vs_mult(const FusionCategory& C);

// Norm ||(tr_a . id_a2)(u u^*)||^{1/2} of u: a1 -> a a2.
double bl_fiber_norm(const Morphism& u, Label a);

struct SBimodule {
  SModule left;
  Expansion carrier;                // H
  std::vector<IndMorphism> right;   // right[a] = alpha(iota_a): abar H a -> H, on sandwich(abar, H, a)
  Mode mode = Mode::Unitary;
  bool unitary = false;
  double star_residual = 0;         // |beta_a^{-1} (bending of beta_abar) - beta_a^*|
};

SBimodule hb_to_bimodule(const HalfBraiding& hb, double tol = 1e-9);
HalfBraiding bimodule_to_hb(const SBimodule& bm, double tol = 1e-9);
// Right action associativity through mu^S and unit law.
double bimodule_associativity(const SBimodule& bm);
double bimodule_unit(const SBimodule& bm);
// max over a and b [x] c of ||alpha(iota_a)_{b [x] c}|| - d_a^{1/2} ||beta_a|| (positive means violated).
double bimodule_norm_excess(const SBimodule& bm, const HalfBraiding& hb);
double max_diff(const SBimodule& x, const SBimodule& y);
// Maps H -> K commuting with both actions.
int bimodule_hom_dim(const SBimodule& x, const SBimodule& y, double tol = 1e-8);
SBimodule tensor_bimodule(const SBimodule& x, const SBimodule& y);

// Free left S-module S . (y [x] z) at b [x] c, basis (d, i, j) over C(b, y dbar) (x) C(c, d z).
struct FreeModule {
  const FusionCategory* C = nullptr;
  Label y, z;
  struct Slot {
    Label d;
    Morphism s, t;  // s: b -> y dbar, t: c -> d z
  };
  std::vector<Slot> basis(Label b, Label c) const;
  int dim(Label b, Label c) const { return static_cast<int>(basis(b, c).size()); }
  // iota_x acting through u: b1 -> b2 xbar, v: c1 -> x c2, on slot r of (b2, c2).
  Vec act(Label x, const Morphism& u, const Morphism& v, Label b2, Label c2, int r, Label b1, Label c1) const;
};

// S . (1 [x] a) -> S . (a [x] 1) at b [x] c, in FreeModule bases.
Mat mirror_iso(const FusionCategory& C, Label a, Label b, Label c);
double mirror_linearity(const FusionCategory& C, Label a);
double mirror_invertibility(const FusionCategory& C, Label a);

struct EquivalenceReport {
  int hb_count = 0, bm_count = 0;
  std::vector<double> hb_qdims, bm_qdims;
  std::vector<std::vector<int>> hb_hom, bm_hom;
  double roundtrip = 0;
  bool unitary_flags_match = true;
  bool ok() const;
  std::string diff() const;
};
EquivalenceReport count_equivalence(const FusionCategory& C, std::uint64_t seed = 1);

}  // namespace ck
