#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "center_kit/morphism.hpp"

namespace ck {

// Finitely supported ind-object: mult[a] = dim V(a).
struct IndObject {
  std::vector<int> mult;
  static IndObject zero(const FusionCategory& C) { return {std::vector<int>(C.rank(), 0)}; }
  static IndObject simple(const FusionCategory& C, Label a, int m = 1) {
    IndObject x = zero(C);
    x.mult[a] = m;
    return x;
  }
  int operator()(Label a) const { return mult[a]; }
  int total() const;
  bool operator==(const IndObject&) const = default;
};

struct IndMorphism {
  IndObject dom, cod;
  std::vector<Mat> blocks;  // blocks[a]: cod(a) x dom(a)

  static IndMorphism zero(const IndObject& dom, const IndObject& cod);
  static IndMorphism identity(const IndObject& x);
  IndMorphism dagger() const;
  IndMorphism operator+(const IndMorphism& o) const;
  IndMorphism operator-(const IndMorphism& o) const;
  IndMorphism operator*(cd z) const;
};

IndMorphism compose(const IndMorphism& g, const IndMorphism& f);
IndMorphism dagger_ind(const IndMorphism& f);
IndObject direct_sum(const IndObject& a, const IndObject& b);
IndMorphism direct_sum(const IndMorphism& f, const IndMorphism& g);
double ind_norm(const IndMorphism& f);
double max_diff(const IndMorphism& f, const IndMorphism& g);
double max_abs(const IndMorphism& f);
// Fiber dims sum_{b,c} N[b][c][a] V1(b) V2(c).
IndObject tensor_ind(const FusionCategory& C, const IndObject& v1, const IndObject& v2);

// Inner product on the (b, c) summand of (V1 . V2)(a) in the Hilb convention. The slot
// vectors are coordinates in the orthonormal vertex basis; each summand carries the weight
// d_a / (d_b d_c), the trace norm of a normalized vertex rescaled by (d_b d_c)^{-1}.
cd hilb_inner_product(const FusionCategory& C, Label a, Label b, Label c, const Vec& xi, const Vec& eta);

// An ind-object given as a sum of formal summands ("keys"), each a word W_k of simples.
// The fiber at s embeds isometrically into (+)_k C(s, W_k); V[s] holds the fiber basis in
// tree coordinates, keys stacked in order. All constructions here span the full sum, so
// V[s] is unitary and morphisms are determined by their per-key components.
struct Expansion {
  const FusionCategory* cat = nullptr;
  std::vector<Word> words;
  std::vector<std::vector<int>> tags;
  std::vector<std::vector<int>> offset;  // offset[s][k]: first tree row of key k at s
  std::vector<Mat> V;

  int keys() const { return static_cast<int>(words.size()); }
  int dim(Label s) const { return static_cast<int>(V[s].cols()); }
  int rows(Label s, int k) const;
  IndObject object() const;
  int find(const std::vector<int>& tag) const;
  // The fiber-basis vector r at s as a morphism s -> W_k, for each key.
  Morphism basis_vector(Label s, int r, int k) const;
};

Expansion plain_expand(const FusionCategory& C, const IndObject& X);
Expansion word_expand(const FusionCategory& C, const Word& w);
// Z(E) = (+)_a abar . E . a; keys (a, k), basis ordered (a, y, fiber index of E(y), tree).
Expansion z_expand(const Expansion& E);
// E1 . E2; keys (k1, k2), basis ordered (b, c, i, j, vertex).
Expansion tensor_expand(const Expansion& E1, const Expansion& E2);
// W1 . E . W2 in tree coordinates; keys as in E.
Expansion sandwich_expand(const Word& w1, const Expansion& E, const Word& w2);
Expansion direct_sum(const Expansion& A, const Expansion& B);

using Components = std::map<std::pair<int, int>, Morphism>;  // (dom key, cod key) -> C-morphism

IndMorphism realize(const Expansion& dom, const Expansion& cod, const Components& comp);
IndMorphism realize(const Expansion& dom, const Expansion& cod,
                    const std::function<std::vector<std::pair<int, Morphism>>(int)>& fn);
Components components(const Expansion& dom, const Expansion& cod, const IndMorphism& f, double drop = 0.0);
// Same underlying keys, different basis: the identity in the two bases.
IndMorphism rebase(const Expansion& from, const Expansion& to);

IndMorphism tensor_ind_morphism(const Expansion& d1, const Expansion& c1, const IndMorphism& f,
                                const Expansion& d2, const Expansion& c2, const IndMorphism& g);

}  // namespace ck
