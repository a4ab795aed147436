#include "center_kit/validate.hpp"

#include <cmath>
#include <map>

#include "center_kit/morphism.hpp"

namespace ck {

namespace {

// F-block entries addressed by channel tuples.
struct FIndex {
  std::map<std::array<int, 10>, cd> entries;
  explicit FIndex(const FusionCategory& C) {
    for (const auto& [k, F] : C.F_blocks()) {
      const auto L = C.left_basis(k[0], k[1], k[2], k[3]);
      const auto R = C.right_basis(k[0], k[1], k[2], k[3]);
      for (size_t i = 0; i < L.size(); ++i)
        for (size_t j = 0; j < R.size(); ++j)
          entries[{k[0], k[1], k[2], k[3], L[i].mid, L[i].i, L[i].j, R[j].mid, R[j].i, R[j].j}] = F(i, j);
    }
  }
  cd operator()(int a, int b, int c, int d, FChannel l, FChannel r) const {
    auto it = entries.find({a, b, c, d, l.mid, l.i, l.j, r.mid, r.i, r.j});
    return it == entries.end() ? cd(0.0) : it->second;
  }
};

}  // namespace

double pentagon_residual(const FusionCategory& C) {
  const int n = C.rank();
  const FIndex F(C);
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            // inputs (f, g, alpha, beta, gamma): alpha f->ab, beta g->fc, gamma e->gd
            // outputs (h, k, mu, kappa, lambda): mu h->cd, kappa k->bh, lambda e->ak
            for (int f = 0; f < n; ++f)
              for (int g = 0; g < n; ++g)
                for (int al = 0; al < C.N(a, b, f); ++al)
                  for (int be = 0; be < C.N(f, c, g); ++be)
                    for (int ga = 0; ga < C.N(g, d, e); ++ga)
                      for (int h = 0; h < n; ++h)
                        for (int k = 0; k < n; ++k)
                          for (int mu = 0; mu < C.N(c, d, h); ++mu)
                            for (int ka = 0; ka < C.N(b, h, k); ++ka)
                              for (int la = 0; la < C.N(a, k, e); ++la) {
                                cd p1 = 0;
                                for (int nu = 0; nu < C.N(f, h, e); ++nu)
                                  p1 += F(f, c, d, e, {g, be, ga}, {h, mu, nu}) *
                                        F(a, b, h, e, {f, al, nu}, {k, ka, la});
                                cd p2 = 0;
                                for (int l = 0; l < n; ++l)
                                  for (int p = 0; p < C.N(b, c, l); ++p)
                                    for (int q = 0; q < C.N(a, l, g); ++q)
                                      for (int r = 0; r < C.N(l, d, k); ++r)
                                        p2 += F(a, b, c, g, {f, al, be}, {l, p, q}) *
                                              F(a, l, d, e, {g, q, ga}, {k, r, la}) *
                                              F(b, c, d, k, {l, p, r}, {h, mu, ka});
                                worst = std::max(worst, std::abs(p1 - p2));
                              }
          }
  return worst;
}

ValidationReport validate(const FusionCategory& C) {
  ValidationReport r;
  r.pentagon = pentagon_residual(C);
  for (const auto& [key, F] : C.F_blocks())
    r.f_unitarity = std::max(r.f_unitarity, max_abs(Mat(F * F.adjoint() - Mat::Identity(F.rows(), F.rows()))));
  const int n = C.rank();
  for (int a = 0; a < n; ++a) {
    const Word wa{a}, wb{C.dual(a)};
    const Morphism R = cup(C, a), Rb = cap(C, a);
    const Morphism z1 = compose(tensor(Rb.dagger(), id(C, wa)), tensor(id(C, wa), R));
    const Morphism z2 = compose(tensor(R.dagger(), id(C, wb)), tensor(id(C, wb), Rb));
    r.conjugate = std::max({r.conjugate, max_diff(z1, id(C, wa)), max_diff(z2, id(C, wb))});
    r.cup_norm = std::max({r.cup_norm, std::abs(compose(R.dagger(), R).scalar_value() - C.dim(a)),
                           std::abs(compose(Rb.dagger(), Rb).scalar_value() - C.dim(a))});
    for (int b = 0; b < n; ++b) {
      double s = 0;
      for (int c = 0; c < n; ++c) s += C.N(a, b, c) * C.dim(c);
      r.dimension = std::max(r.dimension, std::abs(C.dim(a) * C.dim(b) - s));
    }
  }
  return r;
}

}  // namespace ck
