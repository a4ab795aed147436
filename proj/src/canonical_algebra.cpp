#include "center_kit/canonical_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "center_kit/parallel.hpp"

namespace ck {

namespace {

// The scalar of an endomorphism of a simple (or of the unit).
cd endo_scalar(const Morphism& m) {
  const FusionCategory& C = m.category();
  const Label s = m.dom().empty() ? C.unit() : m.dom()[0];
  const Mat& b = m.block(s);
  if (m.dom().size() > 1 || b.rows() != 1 || b.cols() != 1) throw Error(codes::kShape, "not an endomorphism of a simple");
  return b(0, 0);
}

Word w1(const FusionCategory& C, Label a) { return C.normalize({a}); }

// Coordinates of f: b -> w in the tree ONB of C(b, w).
Vec onb_coordinates(const std::vector<Morphism>& basis, const Morphism& f) {
  Vec v(static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) v(static_cast<Eigen::Index>(i)) = endo_scalar(compose(basis[i].dagger(), f));
  return v;
}

Components compose_components(const Components& g, const Components& f) {
  Components out;
  for (const auto& [kf, mf] : f)
    for (auto it = g.lower_bound({kf.second, -1}); it != g.end() && it->first.first == kf.second; ++it) {
      const auto key = std::make_pair(kf.first, it->first.second);
      Morphism m = compose(it->second, mf);
      auto o = out.find(key);
      if (o == out.end())
        out.emplace(key, std::move(m));
      else
        o->second += m;
    }
  return out;
}

}  // namespace

CanonicalAlgebra::CanonicalAlgebra(const FusionCategory& cat)
    : C(&cat), ambient(deligne_product(monoidal_opposite(cat), cat)) {
  for (int c = 0; c < cat.rank(); ++c) support.push_back(product_label(cat, cat.dual(c), c));
}

int CanonicalAlgebra::fiber_dim(Label p) const {
  return std::find(support.begin(), support.end(), p) != support.end() ? 1 : 0;
}

std::vector<Mat> mult_S(const FusionCategory& C, Label a1, Label a2) {
  std::vector<Mat> out;
  for (int a3 = 0; a3 < C.rank(); ++a3) {
    const auto P = onb(C, C.dual(a3), {C.dual(a2), C.dual(a1)});
    const auto Q = onb(C, a3, {a1, a2});
    Mat M(static_cast<Eigen::Index>(P.size()), static_cast<Eigen::Index>(Q.size()));
    for (size_t i = 0; i < P.size(); ++i) {
      const Morphism pd = dual_morphism(P[i]);
      for (size_t j = 0; j < Q.size(); ++j)
        M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = endo_scalar(compose(pd, Q[j]));
    }
    out.push_back(M);
  }
  return out;
}

double mult_S_associativity(const FusionCategory& C) {
  const int n = C.rank();
  std::vector<std::vector<std::vector<Mat>>> M(n, std::vector<std::vector<Mat>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) M[a][b] = mult_S(C, a, b);
  std::vector<double> res(static_cast<size_t>(n) * n * n, 0.0);
  parallel_for(n * n * n, [&](int idx) {
    const int a = idx / (n * n), b = (idx / n) % n, c = idx % n;
    const Label ab = C.dual(a), bb = C.dual(b), cb = C.dual(c);
    double r = 0;
    for (int a4 = 0; a4 < n; ++a4) {
      const auto T1 = onb(C, C.dual(a4), {cb, bb, ab});
      const auto T2 = onb(C, a4, {a, b, c});
      if (T1.empty() || T2.empty()) continue;
      Mat L = Mat::Zero(static_cast<Eigen::Index>(T1.size()), static_cast<Eigen::Index>(T2.size()));
      Mat R = L;
      for (int x = 0; x < n; ++x) {
        // (iota_a iota_b) iota_c through x
        const auto U = onb(C, C.dual(x), {bb, ab}), V = onb(C, x, {a, b});
        const auto U2 = onb(C, C.dual(a4), {cb, C.dual(x)}), V2 = onb(C, a4, {x, c});
        for (size_t i = 0; i < U.size(); ++i)
          for (size_t j = 0; j < V.size(); ++j)
            for (size_t i2 = 0; i2 < U2.size(); ++i2)
              for (size_t j2 = 0; j2 < V2.size(); ++j2) {
                const cd m = M[a][b][x](i, j) * M[x][c][a4](i2, j2);
                if (m == cd(0.0)) continue;
                const Vec e1 = onb_coordinates(T1, compose(tensor(id(C, w1(C, cb)), U[i]), U2[i2]));
                const Vec e2 = onb_coordinates(T2, compose(tensor(V[j], id(C, w1(C, c))), V2[j2]));
                L += m * e1 * e2.transpose();
              }
        // iota_a (iota_b iota_c) through x
        const auto P = onb(C, C.dual(x), {cb, bb}), Q = onb(C, x, {b, c});
        const auto P2 = onb(C, C.dual(a4), {C.dual(x), ab}), Q2 = onb(C, a4, {a, x});
        for (size_t i = 0; i < P.size(); ++i)
          for (size_t j = 0; j < Q.size(); ++j)
            for (size_t i2 = 0; i2 < P2.size(); ++i2)
              for (size_t j2 = 0; j2 < Q2.size(); ++j2) {
                const cd m = M[b][c][x](i, j) * M[a][x][a4](i2, j2);
                if (m == cd(0.0)) continue;
                const Vec e1 = onb_coordinates(T1, compose(tensor(P[i], id(C, w1(C, ab))), P2[i2]));
                const Vec e2 = onb_coordinates(T2, compose(tensor(id(C, w1(C, a)), Q[j]), Q2[j2]));
                R += m * e1 * e2.transpose();
              }
      }
      r = std::max(r, max_abs(L - R));
    }
    res[idx] = r;
  });
  return *std::max_element(res.begin(), res.end());
}

double mult_S_unit(const FusionCategory& C) {
  double r = 0;
  const Label one = C.unit();
  for (int a = 0; a < C.rank(); ++a) {
    const auto L = mult_S(C, one, a), R = mult_S(C, a, one);
    for (int c = 0; c < C.rank(); ++c) {
      const double want = c == a ? 1.0 : 0.0;
      for (const auto* M : {&L[c], &R[c]}) {
        if (c == a && M->size() != 1) return 1.0;
        if (M->size()) r = std::max(r, std::abs((*M)(0, 0) - want));
      }
    }
  }
  return r;
}

Label star_S(const FusionCategory& C, Label a) { return C.dual(a); }

double star_S_monoidality(const FusionCategory& C) {
  double r = 0;
  const int n = C.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto M = mult_S(C, a, b);
      const auto Mp = mult_S(C, C.dual(b), C.dual(a));
      for (int c = 0; c < n; ++c) {
        const auto P = onb(C, C.dual(c), {C.dual(b), C.dual(a)}), Q = onb(C, c, {a, b});
        const auto P2 = onb(C, c, {a, b}), Q2 = onb(C, C.dual(c), {C.dual(b), C.dual(a)});
        const Label cb = C.dual(c);
        for (size_t i = 0; i < P.size(); ++i)
          for (size_t j = 0; j < Q.size(); ++j) {
            const Vec x = onb_coordinates(P2, dual_morphism(P[i].dagger()));
            const Vec y = onb_coordinates(Q2, dual_morphism(Q[j].dagger()));
            const cd rhs = (x.transpose() * Mp[cb] * y)(0, 0);
            r = std::max(r, std::abs(std::conj(M[c](i, j)) - rhs));
          }
      }
    }
  return r;
}

int SModule::fiber_dim(Label b, Label c) const {
  int d = 0;
  for (int a = 0; a < C->rank(); ++a) d += C->N(b, c, a) * base(a);
  return d;
}

int SModule::fiber_dim_direct(Label b, Label c) const {
  int total = 0;
  for (int a = 0; a < C->rank(); ++a) {
    if (base(a) == 0) continue;
    const TreeBasis& T = C->trees(C->normalize({c, C->dual(a)}));
    int s = 0;
    for (int d = 0; d < C->rank(); ++d)
      if (C->dual(d) == b) s += T.size(d);
    total += s * base(a);
  }
  return total;
}

SModule s_module(const FusionCategory& C, const IndObject& H) { return {&C, H}; }

Mat gamma(const FusionCategory& C, Label a, Label a1, Label a2) {
  const auto U = onb(C, C.dual(a1), {C.dual(a2), C.dual(a)});
  const auto V = onb(C, a1, {a, a2});
  Mat G = Mat::Zero(1, static_cast<Eigen::Index>(U.size() * V.size()));
  for (size_t i = 0; i < U.size(); ++i) {
    const Morphism ud = dual_morphism(U[i]).dagger();
    for (size_t j = 0; j < V.size(); ++j)
      G(0, static_cast<Eigen::Index>(i * V.size() + j)) = trace_inner(V[j], ud) / C.dim(a1);
  }
  return G;
}

double gamma_norm(const FusionCategory& C, Label a, Label a1, Label a2) {
  const Mat G = gamma(C, a, a1, a2);
  return G.size() ? op_norm(G) : 0.0;
}

double gamma_star_residual(const FusionCategory& C) {
  double r = 0;
  const int n = C.rank();
  for (int a = 0; a < n; ++a)
    for (int a1 = 0; a1 < n; ++a1)
      for (int a2 = 0; a2 < n; ++a2) {
        const auto U = onb(C, C.dual(a1), {C.dual(a2), C.dual(a)});
        const auto V = onb(C, a1, {a, a2});
        if (U.empty() || V.empty()) continue;
        const Mat G = gamma(C, a, a1, a2);
        const Mat G2 = gamma(C, C.dual(a), a2, a1);
        const auto U2 = onb(C, C.dual(a2), {C.dual(a1), a});
        const auto V2 = onb(C, a2, {C.dual(a), a1});
        const double w = std::sqrt(C.dim(a2) / C.dim(a1));
        for (size_t i = 0; i < U.size(); ++i)
          for (size_t j = 0; j < V.size(); ++j) {
            // the adjoint pairs the rotated v with the first slot and the rotated u with the second
            const Vec x = onb_coordinates(U2, frobenius_right(U[i].dagger(), w1(C, C.dual(a))) * w);
            const Vec y = onb_coordinates(V2, frobenius_left(V[j].dagger(), w1(C, a)) * w);
            cd rhs = 0.0;
            for (Eigen::Index p = 0; p < x.size(); ++p)
              for (Eigen::Index q = 0; q < y.size(); ++q) rhs += x(p) * y(q) * G2(0, p * y.size() + q);
            r = std::max(r, std::abs(std::conj(G(0, static_cast<Eigen::Index>(i * V.size() + j))) - rhs));
          }
      }
  return r;
}

double gamma_vs_mult(const FusionCategory& C) {
  double r = 0;
  const int n = C.rank();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      const auto M = mult_S(C, a, a2);
      for (int a1 = 0; a1 < n; ++a1) {
        const Mat G = gamma(C, a, a1, a2);
        const Mat& m = M[a1];
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(G(0, i * m.cols() + j) - m(i, j)));
      }
    }
  return r;
}

double bl_fiber_norm(const Morphism& u, Label a) {
  const FusionCategory& C = u.category();
  if (u.dom().size() > 1) throw Error(codes::kShape, "bl_fiber_norm: domain must be simple");
  Word a2 = u.cod();
  if (a != C.unit()) {
    if (a2.empty() || a2.front() != a) throw Error(codes::kShape, "bl_fiber_norm: codomain must start with " + C.label_name(a));
    a2.erase(a2.begin());
  }
  if (a2.size() > 1) throw Error(codes::kShape, "bl_fiber_norm: codomain must be a tensor of two simples");
  const Morphism X = compose(u, u.dagger());
  const Morphism R = cup(C, a);
  const Morphism t = compose(compose(tensor(R.dagger(), id(C, a2)), tensor(id(C, w1(C, C.dual(a))), X)),
                             tensor(R, id(C, a2)));
  double m = 0;
  for (const auto& b : t.blocks())
    if (b.size()) m = std::max(m, op_norm(b));
  return std::sqrt(m);
}

namespace {

Expansion right_dom(const Expansion& M, Label a) {
  const FusionCategory& C = *M.cat;
  return sandwich_expand(w1(C, C.dual(a)), M, w1(C, a));
}

// Components of alpha(iota_a) indexed as (key of abar H a, key of H).
Components right_components(const SBimodule& bm, Label a) {
  return components(right_dom(bm.carrier, a), bm.carrier, bm.right[a]);
}

HalfBraiding braiding_from_right(const SBimodule& bm, double tol) {
  const FusionCategory& C = *bm.left.C;
  const Expansion& M = bm.carrier;
  const int K = M.keys();
  Components tau;
  for (int a = 0; a < C.rank(); ++a)
    for (const auto& [k, m] : right_components(bm, a)) tau.emplace(std::make_pair(a * K + k.first, k.second), m);
  return psi({M, realize(z_expand(M), M, tau), bm.mode}, tol);
}

double star_compatibility(const HalfBraiding& hb) {
  double r = 0;
  for (int a = 0; a < hb.category().rank(); ++a) r = std::max(r, max_diff(psi_inverse(hb, a), hb.e[a].dagger()));
  return r;
}

}  // namespace

SBimodule hb_to_bimodule(const HalfBraiding& hb, double tol) {
  const FusionCategory& C = hb.category();
  const Expansion& M = hb.carrier;
  SBimodule bm;
  bm.left = s_module(C, M.object());
  bm.carrier = M;
  bm.mode = hb.mode;
  for (int a = 0; a < C.rank(); ++a) {
    // (R_a^* . id_H)(id_abar . beta_a)
    const Morphism Rs = cup(C, a).dagger();
    const Morphism iab = id(C, w1(C, C.dual(a)));
    Components out;
    for (const auto& [k, g] : hb.components(a))
      out.emplace(k, compose(tensor(Rs, id(C, M.words[k.second])), tensor(iab, g)));
    bm.right.push_back(realize(right_dom(M, a), M, out));
  }
  bm.star_residual = star_compatibility(braiding_from_right(bm, tol));
  bm.unitary = bm.star_residual < tol;
  return bm;
}

HalfBraiding bimodule_to_hb(const SBimodule& bm, double tol) { return braiding_from_right(bm, tol); }

double bimodule_associativity(const SBimodule& bm) {
  const FusionCategory& C = *bm.left.C;
  const Expansion& M = bm.carrier;
  const int n = C.rank();
  std::vector<Components> rc;
  for (int a = 0; a < n; ++a) rc.push_back(right_components(bm, a));
  std::vector<double> res(static_cast<size_t>(n) * n, 0.0);
  parallel_for(n * n, [&](int idx) {
    const int a = idx / n, b = idx % n;
    const Morphism ia = id(C, w1(C, a)), iab = id(C, w1(C, C.dual(a)));
    // alpha_a (id_abar . alpha_b . id_a)
    Components inner;
    for (const auto& [k, m] : rc[b]) inner.emplace(k, tensor(iab, m, ia));
    const Components lhs = compose_components(rc[a], inner);
    // sum_c sum_{p,q} m_{b,a}^c(p, q) alpha_c (p^* . id_H . q^*)
    const auto mult = mult_S(C, b, a);
    Components rhs;
    for (int c = 0; c < n; ++c) {
      const auto P = onb(C, C.dual(c), {C.dual(a), C.dual(b)}), Q = onb(C, c, {b, a});
      for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < Q.size(); ++j) {
          const cd m = mult[c](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          if (m == cd(0.0)) continue;
          const Morphism pd = P[i].dagger(), qd = Q[j].dagger();
          for (const auto& [k, g] : rc[c]) {
            const Morphism term = compose(g, tensor(pd, id(C, M.words[k.first]), qd)) * m;
            auto it = rhs.find(k);
            if (it == rhs.end())
              rhs.emplace(k, term);
            else
              it->second += term;
          }
        }
    }
    res[idx] = max_diff(lhs, rhs);
  });
  return *std::max_element(res.begin(), res.end());
}

double bimodule_unit(const SBimodule& bm) {
  const Label one = bm.left.C->unit();
  return max_diff(bm.right[one], IndMorphism::identity(bm.carrier.object()));
}

double bimodule_norm_excess(const SBimodule& bm, const HalfBraiding& hb) {
  const FusionCategory& C = *bm.left.C;
  double worst = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < C.rank(); ++a) {
    double nb = 0, na = 0;
    for (const auto& b : hb.e[a].blocks)
      if (b.size()) nb = std::max(nb, op_norm(b));
    for (const auto& b : bm.right[a].blocks)
      if (b.size()) na = std::max(na, op_norm(b));
    worst = std::max(worst, na - std::sqrt(C.dim(a)) * nb);
  }
  return worst;
}

double max_diff(const SBimodule& x, const SBimodule& y) {
  if (x.right.size() != y.right.size()) return std::numeric_limits<double>::infinity();
  double r = 0;
  for (size_t a = 0; a < x.right.size(); ++a) {
    if (!(x.right[a].dom == y.right[a].dom) || !(x.right[a].cod == y.right[a].cod))
      return std::numeric_limits<double>::infinity();
    r = std::max(r, max_diff(x.right[a], y.right[a]));
  }
  return r;
}

int bimodule_hom_dim(const SBimodule& x, const SBimodule& y, double tol) {
  const FusionCategory& C = *x.left.C;
  const int n = C.rank();
  const IndObject A = x.carrier.object(), B = y.carrier.object();
  std::vector<Expansion> dx, dy;
  for (int a = 0; a < n; ++a) {
    dx.push_back(right_dom(x.carrier, a));
    dy.push_back(right_dom(y.carrier, a));
  }
  std::vector<std::array<int, 3>> unknowns;
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < A(s); ++j)
      for (int i = 0; i < B(s); ++i) unknowns.push_back({s, i, j});
  if (unknowns.empty()) return 0;
  // f alpha^x(iota_a) = alpha^y(iota_a) (id_abar . f . id_a) for every a; left linearity is built in
  // by taking f on the generating fibers 1 [x] c.
  std::vector<Vec> cols(unknowns.size());
  parallel_for(static_cast<int>(unknowns.size()), [&](int k) {
    IndMorphism f = IndMorphism::zero(A, B);
    f.blocks[unknowns[k][0]](unknowns[k][1], unknowns[k][2]) = 1.0;
    const Components cf = components(x.carrier, y.carrier, f);
    std::vector<cd> v;
    for (int a = 0; a < n; ++a) {
      Components lifted;
      const Morphism ia = id(C, w1(C, a)), iab = id(C, w1(C, C.dual(a)));
      for (const auto& [kk, m] : cf) lifted.emplace(kk, tensor(iab, m, ia));
      const IndMorphism d = compose(f, x.right[a]) - compose(y.right[a], realize(dx[a], dy[a], lifted));
      for (const auto& b : d.blocks)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
          for (Eigen::Index i = 0; i < b.rows(); ++i) v.push_back(b(i, j));
    }
    cols[k] = Eigen::Map<Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
  });
  Mat L(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) L.col(static_cast<Eigen::Index>(k)) = cols[k];
  return static_cast<int>(null_space(L, tol).cols());
}

SBimodule tensor_bimodule(const SBimodule& x, const SBimodule& y) {
  return hb_to_bimodule(tensor_hb(bimodule_to_hb(x), bimodule_to_hb(y)));
}

std::vector<FreeModule::Slot> FreeModule::basis(Label b, Label c) const {
  std::vector<Slot> out;
  for (int d = 0; d < C->rank(); ++d) {
    const auto S = onb(*C, b, {y, C->dual(d)});
    const auto T = onb(*C, c, {d, z});
    for (const auto& s : S)
      for (const auto& t : T) out.push_back({d, s, t});
  }
  return out;
}

Vec FreeModule::act(Label x, const Morphism& u, const Morphism& v, Label b2, Label c2, int r, Label b1,
                    Label c1) const {
  const auto src = basis(b2, c2);
  const auto dst = basis(b1, c1);
  const Slot& sl = src[r];
  const Label d2 = sl.d;
  const auto mult = mult_S(*C, x, d2);
  Vec out = Vec::Zero(static_cast<Eigen::Index>(dst.size()));
  const Morphism s_u = compose(tensor(sl.s, id(*C, w1(*C, C->dual(x)))), u);
  const Morphism t_v = compose(tensor(id(*C, w1(*C, x)), sl.t), v);
  for (int d1 = 0; d1 < C->rank(); ++d1) {
    const auto P = onb(*C, C->dual(d1), {C->dual(d2), C->dual(x)});
    const auto Q = onb(*C, d1, {x, d2});
    for (size_t i = 0; i < P.size(); ++i)
      for (size_t j = 0; j < Q.size(); ++j) {
        const cd m = mult[d1](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (m == cd(0.0)) continue;
        const Morphism first = compose(tensor(id(*C, w1(*C, y)), P[i].dagger()), s_u);
        const Morphism second = compose(tensor(Q[j].dagger(), id(*C, w1(*C, z))), t_v);
        for (size_t k = 0; k < dst.size(); ++k) {
          if (dst[k].d != d1) continue;
          out(static_cast<Eigen::Index>(k)) +=
              m * endo_scalar(compose(dst[k].s.dagger(), first)) * endo_scalar(compose(dst[k].t.dagger(), second));
        }
      }
  }
  return out;
}

Mat mirror_iso(const FusionCategory& C, Label a, Label b, Label c) {
  const FreeModule F1{&C, C.unit(), a}, F2{&C, a, C.unit()};
  const auto src = F1.basis(b, c), dst = F2.basis(b, c);
  Mat M = Mat::Zero(static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
  const Morphism ib = id(C, w1(C, b)), icb = id(C, w1(C, C.dual(c)));
  for (size_t r = 0; r < src.size(); ++r) {
    const Morphism& p = src[r].t;  // c -> bbar a
    const cd sc = endo_scalar(src[r].s);
    // (Rbar_b^* . id_a . id_cbar)(id_b . p . id_cbar)(id_b . Rbar_c)
    const Morphism m = compose(compose(tensor(cap(C, b).dagger(), id(C, w1(C, a)), icb), tensor(ib, p, icb)),
                               tensor(ib, cap(C, c)));
    for (size_t k = 0; k < dst.size(); ++k)
      M(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) =
          sc * endo_scalar(compose(dst[k].s.dagger(), m)) * endo_scalar(dst[k].t);
  }
  return M;
}

double mirror_linearity(const FusionCategory& C, Label a) {
  const FreeModule F1{&C, C.unit(), a}, F2{&C, a, C.unit()};
  const int n = C.rank();
  std::vector<std::vector<Mat>> iso(n, std::vector<Mat>(n));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) iso[b][c] = mirror_iso(C, a, b, c);
  double r = 0;
  for (int x = 0; x < n; ++x)
    for (int b1 = 0; b1 < n; ++b1)
      for (int c1 = 0; c1 < n; ++c1)
        for (int b2 = 0; b2 < n; ++b2)
          for (int c2 = 0; c2 < n; ++c2) {
            const int n1 = F1.dim(b2, c2);
            if (n1 == 0 || iso[b1][c1].size() == 0) continue;
            const auto U = onb(C, b1, {b2, C.dual(x)});
            const auto V = onb(C, c1, {x, c2});
            for (const auto& u : U)
              for (const auto& v : V)
                for (int s = 0; s < n1; ++s) {
                  const Vec lhs = iso[b1][c1] * F1.act(x, u, v, b2, c2, s, b1, c1);
                  Vec rhs = Vec::Zero(lhs.size());
                  const Vec img = iso[b2][c2].col(s);
                  for (Eigen::Index t = 0; t < img.size(); ++t)
                    if (img(t) != cd(0.0)) rhs += img(t) * F2.act(x, u, v, b2, c2, static_cast<int>(t), b1, c1);
                  r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
                }
          }
  return r;
}

double mirror_invertibility(const FusionCategory& C, Label a) {
  double m = std::numeric_limits<double>::infinity();
  for (int b = 0; b < C.rank(); ++b)
    for (int c = 0; c < C.rank(); ++c) {
      const Mat M = mirror_iso(C, a, b, c);
      if (M.rows() != M.cols()) return 0.0;
      if (M.size() == 0) continue;
      Eigen::JacobiSVD<Mat> svd(M);
      m = std::min(m, svd.singularValues()(svd.singularValues().size() - 1));
    }
  return m;
}

bool EquivalenceReport::ok() const {
  if (hb_count != bm_count || hb_qdims.size() != bm_qdims.size()) return false;
  for (size_t i = 0; i < hb_qdims.size(); ++i)
    if (std::abs(hb_qdims[i] - bm_qdims[i]) > 1e-9 * std::max(1.0, hb_qdims[i])) return false;
  return hb_hom == bm_hom && unitary_flags_match;
}

std::string EquivalenceReport::diff() const {
  std::ostringstream os;
  if (hb_count != bm_count) os << "count: " << hb_count << " half-braidings vs " << bm_count << " bimodules\n";
  for (size_t i = 0; i < std::min(hb_qdims.size(), bm_qdims.size()); ++i)
    if (std::abs(hb_qdims[i] - bm_qdims[i]) > 1e-9 * std::max(1.0, hb_qdims[i]))
      os << "qdim #" << i << ": " << hb_qdims[i] << " vs " << bm_qdims[i] << "\n";
  for (size_t i = 0; i < hb_hom.size() && i < bm_hom.size(); ++i)
    for (size_t j = 0; j < hb_hom[i].size() && j < bm_hom[i].size(); ++j)
      if (hb_hom[i][j] != bm_hom[i][j])
        os << "dim Hom(" << i << ", " << j << "): " << hb_hom[i][j] << " vs " << bm_hom[i][j] << "\n";
  if (!unitary_flags_match) os << "unitary flags differ\n";
  return os.str();
}

EquivalenceReport count_equivalence(const FusionCategory& C, std::uint64_t seed) {
  const CenterReport center = solve_center(C, Mode::Unitary, seed, false);
  const auto& simples = center.simples;
  const size_t m = simples.size();
  EquivalenceReport rep;

  auto hb_side = std::async(std::launch::async, [&] {
    std::vector<std::vector<int>> hom(m, std::vector<int>(m, 0));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        hom[i][j] = simples[i].support == simples[j].support
                        ? static_cast<int>(intertwiners(simples[i].hb, simples[j].hb).basis.size())
                        : 0;
    return hom;
  });
  auto bm_side = std::async(std::launch::async, [&] {
    std::vector<SBimodule> bms;
    for (const auto& s : simples) bms.push_back(hb_to_bimodule(s.hb));
    std::vector<std::vector<int>> hom(m, std::vector<int>(m, 0));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        hom[i][j] = bms[i].left.base == bms[j].left.base ? bimodule_hom_dim(bms[i], bms[j]) : 0;
    return std::make_pair(std::move(bms), std::move(hom));
  });
  rep.hb_hom = hb_side.get();
  auto [bms, bhom] = bm_side.get();
  rep.bm_hom = std::move(bhom);

  for (size_t i = 0; i < m; ++i) {
    if (rep.hb_hom[i][i] == 1) ++rep.hb_count;
    bool fresh = rep.bm_hom[i][i] == 1;
    for (size_t j = 0; j < i; ++j)
      if (rep.bm_hom[i][j] > 0) fresh = false;
    if (fresh) ++rep.bm_count;
    rep.hb_qdims.push_back(simples[i].qdim);
    double q = 0;
    for (int a = 0; a < C.rank(); ++a) q += bms[i].left.base(a) * C.dim(a);
    rep.bm_qdims.push_back(q);
    const HalfBraiding back = bimodule_to_hb(bms[i]);
    for (int a = 0; a < C.rank(); ++a) rep.roundtrip = std::max(rep.roundtrip, max_diff(back.e[a], simples[i].hb.e[a]));
    if (back.unitary != bms[i].unitary || bms[i].unitary != simples[i].hb.unitary) rep.unitary_flags_match = false;
  }
  std::sort(rep.hb_qdims.begin(), rep.hb_qdims.end());
  std::sort(rep.bm_qdims.begin(), rep.bm_qdims.end());
  return rep;
}

}  // namespace ck
