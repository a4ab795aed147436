#pragma once

#include <cstdint>

#include "center_kit/morphism.hpp"

namespace ck {

// The tube algebra, the direct sum over (a, x, y) of C(a x, y a), in the basis of tree-matrix
// units of each summand.
class TubeAlgebra {
 public:
  struct Element {
    Label a, x, y;
    Morphism m;  // a x -> y a
  };

  explicit TubeAlgebra(const FusionCategory& C);
  int dim() const { return static_cast<int>(basis_.size()); }
  const Element& basis(int i) const { return basis_[i]; }
  Vec coordinates(const Element& e) const;
  Element element(const Vec& v, int sector) const;

  // zeta * xi; zero when the y of xi differs from the x of zeta.
  std::vector<Element> multiply(const Element& zeta, const Element& xi) const;
  Element star(const Element& xi) const;

  // structure(i, j) = coordinates of basis(i) * basis(j).
  const std::vector<std::vector<Vec>>& structure() const;
  Mat left_multiplication(const Vec& z) const;
  // Basis of the center (columns).
  Mat center(double tol = 1e-9) const;
  // Block sizes n_i (sorted), from eigenspace dimensions n_i^2 of left multiplication by a
  // random central element.
  std::vector<int> block_sizes(std::uint64_t seed, double gap = 1e-6) const;

  double associativity_residual() const;
  double star_residual() const;  // involution and anti-multiplicativity

 private:
  const FusionCategory& C_;
  std::vector<Element> basis_;
  struct Sector {
    Label a, x, y;
    int offset, size;
  };
  std::vector<Sector> sectors_;
  int sector_of(Label a, Label x, Label y) const;
  mutable std::vector<std::vector<Vec>> structure_;
};

}  // namespace ck
