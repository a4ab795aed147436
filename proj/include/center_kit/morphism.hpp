#pragma once

#include <vector>

#include "center_kit/fusion_category.hpp"

namespace ck {

// f = sum_s sum_{i,j} blocks[s](i,j) t_i o t_j^*, with t_i, t_j the left-comb trees of
// codomain and domain rooted at s. The trees are isometries s -> W, so the blocks are
// the operator matrices of f in an orthonormal basis of each isotypic component.
class Morphism {
 public:
  Morphism() = default;
  Morphism(const FusionCategory& C, Word dom, Word cod);  // zero morphism

  static Morphism identity(const FusionCategory& C, const Word& w);
  // Inclusion s -> W along tree t of W with root s.
  static Morphism tree(const FusionCategory& C, const Word& w, int s, int t);
  // Normalized vertex c -> a (x) b with multiplicity index mu.
  static Morphism vertex(const FusionCategory& C, Label a, Label b, Label c, int mu = 0);
  static Morphism scalar(const FusionCategory& C, cd z);

  const FusionCategory& category() const { return *cat_; }
  const FusionCategory* category_ptr() const { return cat_; }
  const Word& dom() const { return dom_; }
  const Word& cod() const { return cod_; }
  const Mat& block(int s) const { return blocks_[s]; }
  Mat& block(int s) { return blocks_[s]; }
  const std::vector<Mat>& blocks() const { return blocks_; }

  int size() const;
  Vec coefficients() const;
  void set_coefficients(const Vec& v);
  // Single scalar of a morphism between words whose only common root is the unit.
  cd scalar_value() const;

  Morphism dagger() const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator*(cd z) const;
  Morphism& operator+=(const Morphism& o);

 private:
  void check_same(const Morphism& o) const;
  const FusionCategory* cat_ = nullptr;
  Word dom_, cod_;
  std::vector<Mat> blocks_;
};

Morphism compose(const Morphism& g, const Morphism& f);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h);
Morphism dagger(const Morphism& f);
Morphism id(const FusionCategory& C, const Word& w);

// R_a : 1 -> abar a and Rbar_a : 1 -> a abar, standard solutions of the conjugate equations.
Morphism cup(const FusionCategory& C, Label a);
Morphism cap(const FusionCategory& C, Label a);
Morphism cup(const FusionCategory& C, const Word& u);
Morphism cap(const FusionCategory& C, const Word& u);

// f: U U1 -> U2  gives  U1 -> Ubar U2.
Morphism frobenius_left(const Morphism& f, const Word& u);
Morphism frobenius_left_inverse(const Morphism& g, const Word& u);
// f: U1 U -> U2  gives  U1 -> U2 Ubar.
Morphism frobenius_right(const Morphism& f, const Word& u);
Morphism frobenius_right_inverse(const Morphism& g, const Word& u);

Morphism dual_morphism(const Morphism& f);

std::vector<Morphism> onb(const FusionCategory& C, Label b, const Word& w);

// <f, g> = Tr(g^* f) with the categorical trace.
cd trace_inner(const Morphism& f, const Morphism& g);
cd trace(const Morphism& f);
double norm(const Morphism& f);
double max_diff(const Morphism& f, const Morphism& g);
double max_abs(const Morphism& f);

}  // namespace ck
