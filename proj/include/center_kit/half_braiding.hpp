#pragma once

#include <functional>
#include <optional>

#include "center_kit/center_monad.hpp"

namespace ck {

// e[u]: carrier . u -> u . carrier for each simple u, between sandwich_expand(M, {u}) and
// sandwich_expand({u}, M). Values on words follow from the braid relation.
struct HalfBraiding {
  Expansion carrier;
  std::vector<IndMorphism> e;
  Mode mode = Mode::Unitary;
  bool unitary = false;

  const FusionCategory& category() const { return *carrier.cat; }
  Components components(Label u) const;
  // e_U for a word U from the simple components.
  Components on_word(const Word& u) const;
};

struct ZModuleAction {
  Expansion carrier;
  IndMorphism tau;  // z_expand(carrier) -> carrier
  Mode mode = Mode::Unitary;
};

struct HalfBraidingCheck {
  double unit = 0;        // |e_1 - id|
  double braid = 0;       // braid relation and naturality against all vertices c -> a b
  double unitarity = 0;   // max_u |e_u^* e_u - id|
  double min_singular = 0;
  bool ok(double tol) const { return unit < tol && braid < tol && min_singular > tol; }
};

HalfBraiding make_half_braiding(const Expansion& carrier, const std::function<Components(Label)>& comp, Mode mode,
                                double tol = 1e-9);
HalfBraidingCheck check_half_braiding(const HalfBraiding& hb);
double unitarity_residual(const HalfBraiding& hb);

HalfBraiding trivial_half_braiding(const FusionCategory& C, Mode mode);
HalfBraiding free_half_braiding(const Expansion& X, Mode mode);
inline HalfBraiding free_half_braiding_alg(const Expansion& X) { return free_half_braiding(X, Mode::Algebraic); }
inline HalfBraiding free_half_braiding_unitary(const Expansion& X) { return free_half_braiding(X, Mode::Unitary); }

// epsilon_{(M, gamma)} = sum_a (R_a^* . id_M)(id_abar . gamma_a): Z(M) -> M.
IndMorphism epsilon(const HalfBraiding& hb);

ZModuleAction phi(const HalfBraiding& hb);
HalfBraiding psi(const ZModuleAction& zm, double tol = 1e-9);
// Inverse of psi(zm)_u by the bending formula through the value at ubar.
IndMorphism psi_inverse(const HalfBraiding& hb, Label u);

struct ModuleCheck {
  double unit = 0;   // |tau eta - id|
  double assoc = 0;  // |tau mu - tau Z(tau)|
};
ModuleCheck check_module(const ZModuleAction& zm);

HalfBraiding tensor_hb(const HalfBraiding& h1, const HalfBraiding& h2);
// (tau . upsilon) Z_2 route, compared against tensor_hb by the caller.
HalfBraiding tensor_hb_via_modules(const HalfBraiding& h1, const HalfBraiding& h2);

double qdim(const HalfBraiding& hb);

// Transport along an invertible g: M -> M, e'_u = (id_u . g) e_u (g^{-1} . id_u).
HalfBraiding conjugate(const HalfBraiding& hb, const IndMorphism& g, const IndMorphism& g_inv, double tol = 1e-9);

// Morphisms of half-braidings: solutions f of (id_u . f) e1_u = e2_u (f . id_u) for all simple u.
struct Intertwiners {
  std::vector<IndMorphism> basis;  // orthonormal in the Hilbert-Schmidt sense
  double residual = 0;
};
Intertwiners intertwiners(const HalfBraiding& h1, const HalfBraiding& h2, double tol = 1e-8);
std::optional<IndMorphism> is_isomorphic(const HalfBraiding& h1, const HalfBraiding& h2, double tol = 1e-8);

// Unique r: Z(X) -> Y with xi_U = (id_U . r) d_{X,U}; xi is a family on words U, with
// components X_k U -> U Y_k'. Naturality is checked on all vertices c -> a b and the result
// is certified against an independent least-squares solve.
struct Factorization {
  IndMorphism r;
  double reconstruction = 0;
  double uniqueness = 0;  // deviation from the least-squares solution
};
Factorization factor_through_Z(const Expansion& X, const Expansion& Y, const std::function<Components(const Word&)>& xi,
                               double tol = 1e-9);

}  // namespace ck
