#pragma once

#include "center_kit/ind.hpp"

namespace ck {

enum class Mode { Algebraic, Unitary };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct Context {
  const FusionCategory* C;
  Mode mode = Mode::Unitary;
  double tol = 1e-9;
};

// Z(X) with its slots: key (a, k) of the expansion is the summand abar . X_k . a.
struct CentralizerDecomposition {
  Expansion base;
  Expansion total;
  IndObject object() const { return total.object(); }
  int slot(Label a, int base_key) const { return a * base.keys() + base_key; }
};

CentralizerDecomposition Z_object(const Expansion& X);
// Z(f) for f: dom -> cod, as a map z_expand(dom) -> z_expand(cod).
IndMorphism Z_morphism(const Expansion& dom, const Expansion& cod, const IndMorphism& f);

// rho_{X,U}: Ubar . X . U -> Z(X); domain sandwich_expand(bar U, X, U).
IndMorphism rho(const Expansion& X, const Word& u);
IndMorphism eta(const Expansion& X);
// mu_X: Z(Z(X)) -> Z(X).
IndMorphism mu(const Expansion& X);

// d_{X,U}: X . U -> U . Z(X) between sandwich_expand(X, U) and sandwich_expand(U, Z(X)).
Components partial_components(const Expansion& X, const Word& u);
IndMorphism partial(const Expansion& X, const Word& u);
// d_{X,Y} for an ind-object Y: tensor_expand(X, Y) -> tensor_expand(Y, Z(X)).
IndMorphism partial(const Expansion& X, const IndObject& Y);

// Free half-braiding on Z(X) at a word U: sandwich_expand(Z X, U) -> sandwich_expand(U, Z X).
// Algebraic mode gives beta^X, unitary mode sigma^X with weights (d_a / d_b)^{1/2}.
Components free_braiding_components(const Expansion& X, const Word& u, Mode mode);

// Z_2: Z(X1 . X2) -> Z(X1) . Z(X2) and Z_0: Z(1) -> 1.
IndMorphism Z2(const Expansion& X1, const Expansion& X2);
IndMorphism Z0(const FusionCategory& C);

// Reassociation (E1 E2) E3 -> E1 (E2 E3), identity on keys.
IndMorphism associator(const Expansion& E1, const Expansion& E2, const Expansion& E3);
// 1 . E -> E and E . 1 -> E.
IndMorphism left_unitor(const Expansion& E);
IndMorphism right_unitor(const Expansion& E);

double max_diff(const Components& a, const Components& b);

}  // namespace ck
