#include "center_kit/tube.hpp"

#include <algorithm>

#include "center_kit/parallel.hpp"
#include "center_kit/rng.hpp"

namespace ck {

TubeAlgebra::TubeAlgebra(const FusionCategory& C) : C_(C) {
  const int n = C.rank();
  int off = 0;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Morphism z(C, {a, x}, {y, a});
        const int sz = z.size();
        if (sz == 0) continue;
        sectors_.push_back({a, x, y, off, sz});
        for (int k = 0; k < sz; ++k) {
          Vec v = Vec::Zero(sz);
          v(k) = 1.0;
          Morphism m = z;
          m.set_coefficients(v);
          basis_.push_back({a, x, y, m});
        }
        off += sz;
      }
}

int TubeAlgebra::sector_of(Label a, Label x, Label y) const {
  for (size_t i = 0; i < sectors_.size(); ++i)
    if (sectors_[i].a == a && sectors_[i].x == x && sectors_[i].y == y) return static_cast<int>(i);
  return -1;
}

Vec TubeAlgebra::coordinates(const Element& e) const {
  Vec v = Vec::Zero(dim());
  const int s = sector_of(e.a, e.x, e.y);
  if (s < 0) return v;
  v.segment(sectors_[s].offset, sectors_[s].size) = e.m.coefficients();
  return v;
}

TubeAlgebra::Element TubeAlgebra::element(const Vec& v, int sector) const {
  const Sector& s = sectors_[sector];
  Morphism m(C_, {s.a, s.x}, {s.y, s.a});
  m.set_coefficients(v.segment(s.offset, s.size));
  return {s.a, s.x, s.y, m};
}

std::vector<TubeAlgebra::Element> TubeAlgebra::multiply(const Element& zeta, const Element& xi) const {
  std::vector<Element> out;
  if (zeta.x != xi.y) return out;
  const Label b = zeta.a, a = xi.a, x = xi.x, z = zeta.y;
  const Morphism mid = compose(tensor(zeta.m, id(C_, {a})), tensor(id(C_, {b}), xi.m));
  for (int c = 0; c < C_.rank(); ++c) {
    const auto basis = onb(C_, c, {b, a});
    if (basis.empty()) continue;
    Morphism acc(C_, {c, x}, {z, c});
    for (const auto& om : basis)
      acc += compose(compose(tensor(id(C_, {z}), om.dagger()), mid), tensor(om, id(C_, {x})));
    out.push_back({c, x, z, acc});
  }
  return out;
}

TubeAlgebra::Element TubeAlgebra::star(const Element& xi) const {
  const Label a = xi.a, ab = C_.dual(a);
  const Morphism m = compose(compose(tensor(cup(C_, a).dagger(), id(C_, {xi.x}), id(C_, {ab})),
                                     tensor(id(C_, {ab}), xi.m.dagger(), id(C_, {ab}))),
                             tensor(id(C_, {ab, xi.y}), cap(C_, a)));
  return {ab, xi.y, xi.x, m};
}

const std::vector<std::vector<Vec>>& TubeAlgebra::structure() const {
  if (!structure_.empty()) return structure_;
  const int d = dim();
  std::vector<std::vector<Vec>> S(d, std::vector<Vec>(d));
  parallel_for(d, [&](int i) {
    for (int j = 0; j < d; ++j) {
      Vec v = Vec::Zero(d);
      for (const auto& e : multiply(basis_[i], basis_[j])) v += coordinates(e);
      S[i][j] = v;
    }
  });
  structure_ = std::move(S);
  return structure_;
}

Mat TubeAlgebra::left_multiplication(const Vec& z) const {
  const auto& S = structure();
  const int d = dim();
  Mat L = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    if (z(i) != cd(0.0))
      for (int j = 0; j < d; ++j) L.col(j) += z(i) * S[i][j];
  return L;
}

Mat TubeAlgebra::center(double tol) const {
  const auto& S = structure();
  const int d = dim();
  Mat M = Mat::Zero(static_cast<Eigen::Index>(d) * d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) M.block(static_cast<Eigen::Index>(j) * d, i, d, 1) = S[i][j] - S[j][i];
  return null_space(M, tol);
}

std::vector<int> TubeAlgebra::block_sizes(std::uint64_t seed, double gap) const {
  const Mat Z = center();
  Rng rng(seed, 17);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec c(Z.cols());
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = rng.complex_normal();
    const Mat L = left_multiplication(Z * c);
    Eigen::ComplexEigenSolver<Mat> es(L, false);
    std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::vector<int> counts;
    std::vector<cd> reps;
    for (const cd& l : ev) {
      bool found = false;
      for (size_t r = 0; r < reps.size(); ++r)
        if (std::abs(reps[r] - l) < gap) {
          ++counts[r];
          found = true;
          break;
        }
      if (!found) {
        reps.push_back(l);
        counts.push_back(1);
      }
    }
    if (static_cast<Eigen::Index>(reps.size()) != Z.cols()) continue;
    std::vector<int> sizes;
    bool square = true;
    for (int c2 : counts) {
      int r = 0;
      while (r * r < c2) ++r;
      if (r * r != c2) square = false;
      sizes.push_back(r);
    }
    if (!square) continue;
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }
  throw Error(codes::kDecomposition, "tube algebra center did not separate into blocks");
}

double TubeAlgebra::associativity_residual() const {
  const auto& S = structure();
  const int d = dim();
  double r = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        // (b_i b_j) b_k vs b_i (b_j b_k)
        Vec l = Vec::Zero(d), rr = Vec::Zero(d);
        for (int m = 0; m < d; ++m) {
          if (S[i][j](m) != cd(0.0)) l += S[i][j](m) * S[m][k];
          if (S[j][k](m) != cd(0.0)) rr += S[j][k](m) * S[i][m];
        }
        r = std::max(r, (l - rr).cwiseAbs().maxCoeff());
      }
  return r;
}

double TubeAlgebra::star_residual() const {
  const int d = dim();
  double r = 0;
  std::vector<Vec> st(d);
  for (int i = 0; i < d; ++i) {
    st[i] = coordinates(star(basis_[i]));
    Vec back = coordinates(star(star(basis_[i])));
    r = std::max(r, (back - coordinates(basis_[i])).cwiseAbs().maxCoeff());
  }
  const auto& S = structure();
  // The star is antilinear: coordinates of (sum c_m b_m)^# are sum conj(c_m) st[m].
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = Vec::Zero(d);
      for (int m = 0; m < d; ++m)
        if (S[i][j](m) != cd(0.0)) lhs += std::conj(S[i][j](m)) * st[m];
      Vec rhs = Vec::Zero(d);
      for (int p = 0; p < d; ++p)
        if (st[j](p) != cd(0.0))
          for (int q = 0; q < d; ++q)
            if (st[i](q) != cd(0.0)) rhs += st[j](p) * st[i](q) * S[p][q];
      r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return r;
}

}  // namespace ck
