#pragma once

#include "center_kit/morphism.hpp"

namespace ck {

FusionCategory monoidal_opposite(const FusionCategory& C);

// Labels are the pairs (l, r) in lexicographic order, named "l|r".
FusionCategory deligne_product(const FusionCategory& A, const FusionCategory& B);

struct ProductLabel {
  Label left, right;
};
inline Label product_label(const FusionCategory& B, Label l, Label r) { return l * B.rank() + r; }
inline ProductLabel split_label(const FusionCategory& B, Label p) { return {p / B.rank(), p % B.rank()}; }

// The tensor product functor C^mp [x] C -> C. P must be deligne_product(monoidal_opposite(C), C).
class MultiplicationFunctor {
 public:
  MultiplicationFunctor(const FusionCategory& C, const FusionCategory& P);
  Word on_object(const Word& w) const;
  Morphism on_morphism(const Morphism& f) const;

 private:
  // Image of a product tree: a morphism s1 s2 -> on_object(w).
  Morphism tree_image(const Word& w, int s, int t) const;
  const FusionCategory& C_;
  const FusionCategory& P_;
};

}  // namespace ck
