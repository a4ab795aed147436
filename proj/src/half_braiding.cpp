#include "center_kit/half_braiding.hpp"

#include <cmath>
#include <limits>

#include "center_kit/parallel.hpp"

namespace ck {

namespace {

Expansion left_side(const Expansion& M, const Word& u) { return sandwich_expand({}, M, u); }
Expansion right_side(const Expansion& M, const Word& u) { return sandwich_expand(u, M, {}); }

Components tensor_right(const FusionCategory& C, const Components& c, const Word& u) {
  Components out;
  const Morphism iu = id(C, u);
  for (const auto& [k, m] : c) out.emplace(k, tensor(m, iu));
  return out;
}

Components tensor_left(const FusionCategory& C, const Word& u, const Components& c) {
  Components out;
  const Morphism iu = id(C, u);
  for (const auto& [k, m] : c) out.emplace(k, tensor(iu, m));
  return out;
}

// g o f for component families, summing over the middle key.
Components compose(const Components& g, const Components& f) {
  Components out;
  for (const auto& [kf, mf] : f)
    for (auto it = g.lower_bound({kf.second, -1}); it != g.end() && it->first.first == kf.second; ++it) {
      auto key = std::make_pair(kf.first, it->first.second);
      Morphism m = ck::compose(it->second, mf);
      auto o = out.find(key);
      if (o == out.end())
        out.emplace(key, std::move(m));
      else
        o->second += m;
    }
  return out;
}

Components identity_components(const Expansion& M) {
  Components out;
  for (int k = 0; k < M.keys(); ++k) out.emplace(std::make_pair(k, k), id(*M.cat, M.words[k]));
  return out;
}

double min_singular(const IndMorphism& f) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& b : f.blocks) {
    if (b.size() == 0) continue;
    if (b.rows() != b.cols()) return 0.0;
    Eigen::JacobiSVD<Mat> svd(b);
    m = std::min(m, svd.singularValues()(svd.singularValues().size() - 1));
  }
  return m;
}

}  // namespace

Components HalfBraiding::components(Label u) const {
  const Word w = category().normalize({u});
  return ck::components(left_side(carrier, w), right_side(carrier, w), e[u]);
}

Components HalfBraiding::on_word(const Word& u0) const {
  const FusionCategory& C = category();
  const Word u = C.normalize(u0);
  if (u.empty()) return identity_components(carrier);
  Components acc = components(u[0]);
  Word pre{u[0]};
  for (size_t i = 1; i < u.size(); ++i) {
    // e_{U x} = (id_U . e_x)(e_U . id_x)
    acc = compose(tensor_left(C, pre, components(u[i])), tensor_right(C, acc, {u[i]}));
    pre.push_back(u[i]);
  }
  return acc;
}

HalfBraiding make_half_braiding(const Expansion& carrier, const std::function<Components(Label)>& comp, Mode mode,
                                double tol) {
  const FusionCategory& C = *carrier.cat;
  HalfBraiding hb;
  hb.carrier = carrier;
  hb.mode = mode;
  for (int u = 0; u < C.rank(); ++u) {
    const Word w = C.normalize({u});
    hb.e.push_back(realize(left_side(carrier, w), right_side(carrier, w), comp(u)));
  }
  hb.unitary = unitarity_residual(hb) < tol;
  return hb;
}

double unitarity_residual(const HalfBraiding& hb) {
  double r = 0;
  for (const auto& e : hb.e) r = std::max(r, max_diff(compose(e.dagger(), e), IndMorphism::identity(e.dom)));
  return r;
}

HalfBraidingCheck check_half_braiding(const HalfBraiding& hb) {
  const FusionCategory& C = hb.category();
  HalfBraidingCheck r;
  r.unit = max_diff(hb.e[C.unit()], IndMorphism::identity(hb.e[C.unit()].dom));
  r.unitarity = unitarity_residual(hb);
  r.min_singular = std::numeric_limits<double>::infinity();
  for (const auto& e : hb.e) r.min_singular = std::min(r.min_singular, min_singular(e));
  std::vector<Components> simple;
  for (int u = 0; u < C.rank(); ++u) simple.push_back(hb.components(u));
  for (int a = 0; a < C.rank(); ++a)
    for (int b = 0; b < C.rank(); ++b) {
      const Word ab = C.normalize({a, b});
      const Components eab = hb.on_word(ab);
      for (int c = 0; c < C.rank(); ++c)
        for (const auto& v : onb(C, c, ab)) {
          Components lhs, rhs;
          for (const auto& [k, m] : simple[c]) lhs.emplace(k, ck::compose(tensor(v, id(C, hb.carrier.words[k.second])), m));
          for (const auto& [k, m] : eab) rhs.emplace(k, ck::compose(m, tensor(id(C, hb.carrier.words[k.first]), v)));
          r.braid = std::max(r.braid, max_diff(lhs, rhs));
        }
    }
  return r;
}

HalfBraiding trivial_half_braiding(const FusionCategory& C, Mode mode) {
  const Expansion one = plain_expand(C, IndObject::simple(C, C.unit()));
  return make_half_braiding(
      one,
      [&](Label u) {
        Components c;
        c.emplace(std::make_pair(0, 0), id(C, {u}));
        return c;
      },
      mode);
}

HalfBraiding free_half_braiding(const Expansion& X, Mode mode) {
  return make_half_braiding(
      z_expand(X), [&](Label u) { return free_braiding_components(X, {u}, mode); }, mode);
}

IndMorphism epsilon(const HalfBraiding& hb) {
  const FusionCategory& C = hb.category();
  const Expansion& M = hb.carrier;
  const int K = M.keys();
  Components out;
  for (int a = 0; a < C.rank(); ++a) {
    const Morphism Rs = cup(C, a).dagger();
    const Morphism iab = id(C, {C.dual(a)});
    for (const auto& [k, g] : hb.components(a))
      out.emplace(std::make_pair(a * K + k.first, k.second),
                  ck::compose(tensor(Rs, id(C, M.words[k.second])), tensor(iab, g)));
  }
  return realize(z_expand(M), M, out);
}

ZModuleAction phi(const HalfBraiding& hb) { return {hb.carrier, epsilon(hb), hb.mode}; }

HalfBraiding psi(const ZModuleAction& zm, double tol) {
  const FusionCategory& C = *zm.carrier.cat;
  const Expansion& M = zm.carrier;
  const Components tau = components(z_expand(M), M, zm.tau);
  return make_half_braiding(
      M,
      [&](Label u) {
        const Word w = C.normalize({u});
        Components lifted;
        for (const auto& [k, t] : tau) lifted.emplace(k, tensor(id(C, w), t));
        return compose(lifted, partial_components(M, w));
      },
      zm.mode, tol);
}

IndMorphism psi_inverse(const HalfBraiding& hb, Label u) {
  const FusionCategory& C = hb.category();
  const Expansion& M = hb.carrier;
  const Word w = C.normalize({u});
  const Morphism iu = id(C, w);
  const Morphism Rs = cap(C, u).dagger();
  const Morphism R = cup(C, u);
  Components out;
  for (const auto& [k, g] : hb.components(C.dual(u))) {
    const Morphism m = ck::compose(
        ck::compose(tensor(Rs, id(C, M.words[k.second]), iu), tensor(iu, g, iu)),
        tensor(iu, id(C, M.words[k.first]), R));
    out.emplace(k, m);
  }
  return realize(right_side(M, w), left_side(M, w), out);
}

ModuleCheck check_module(const ZModuleAction& zm) {
  const Expansion& M = zm.carrier;
  const Expansion ZM = z_expand(M);
  ModuleCheck r;
  r.unit = max_diff(compose(zm.tau, eta(M)), IndMorphism::identity(M.object()));
  const IndMorphism Zt = Z_morphism(ZM, M, zm.tau);
  r.assoc = max_diff(compose(zm.tau, mu(M)), compose(zm.tau, Zt));
  return r;
}

HalfBraiding tensor_hb(const HalfBraiding& h1, const HalfBraiding& h2) {
  if (h1.mode != h2.mode) throw Error(codes::kMode, "tensor of half-braidings in different modes");
  const FusionCategory& C = h1.category();
  const Expansion T = tensor_expand(h1.carrier, h2.carrier);
  const int K2 = h2.carrier.keys();
  return make_half_braiding(
      T,
      [&](Label u) {
        const Components g = h1.components(u), t = h2.components(u);
        Components out;
        for (const auto& [k1, m1] : g)
          for (const auto& [k2, m2] : t) {
            // (gamma_u . id)(id . theta_u)
            const Morphism m = ck::compose(tensor(m1, id(C, h2.carrier.words[k2.second])),
                                           tensor(id(C, h1.carrier.words[k1.first]), m2));
            out.emplace(std::make_pair(k1.first * K2 + k2.first, k1.second * K2 + k2.second), m);
          }
        return out;
      },
      h1.mode);
}

HalfBraiding tensor_hb_via_modules(const HalfBraiding& h1, const HalfBraiding& h2) {
  if (h1.mode != h2.mode) throw Error(codes::kMode, "tensor of half-braidings in different modes");
  const Expansion& M1 = h1.carrier;
  const Expansion& M2 = h2.carrier;
  const IndMorphism e12 = tensor_ind_morphism(z_expand(M1), M1, epsilon(h1), z_expand(M2), M2, epsilon(h2));
  const IndMorphism tau = compose(e12, Z2(M1, M2));
  return psi({tensor_expand(M1, M2), tau, h1.mode});
}

double qdim(const HalfBraiding& hb) {
  const FusionCategory& C = hb.category();
  double d = 0;
  for (int s = 0; s < C.rank(); ++s) d += hb.carrier.dim(s) * C.dim(s);
  return d;
}

HalfBraiding conjugate(const HalfBraiding& hb, const IndMorphism& g, const IndMorphism& g_inv, double tol) {
  const FusionCategory& C = hb.category();
  const Expansion& M = hb.carrier;
  const Components cg = components(M, M, g), ci = components(M, M, g_inv);
  return make_half_braiding(
      M,
      [&](Label u) {
        const Word w = C.normalize({u});
        return compose(tensor_left(C, w, cg), compose(hb.components(u), tensor_right(C, ci, w)));
      },
      hb.mode, tol);
}

namespace {

// Residual map f -> {(id_u . f) e1_u - e2_u (f . id_u)}_u, flattened.
Vec intertwiner_residual(const HalfBraiding& h1, const HalfBraiding& h2, const IndMorphism& f,
                         const std::vector<Expansion>& l1, const std::vector<Expansion>& r1,
                         const std::vector<Expansion>& l2, const std::vector<Expansion>& r2) {
  const FusionCategory& C = h1.category();
  const Components cf = components(h1.carrier, h2.carrier, f);
  std::vector<Mat> parts;
  Eigen::Index total = 0;
  for (int u = 0; u < C.rank(); ++u) {
    const Word w = C.normalize({u});
    const IndMorphism L = realize(r1[u], r2[u], tensor_left(C, w, cf));
    const IndMorphism R = realize(l1[u], l2[u], tensor_right(C, cf, w));
    const IndMorphism d = compose(L, h1.e[u]) - compose(h2.e[u], R);
    for (const auto& b : d.blocks) {
      parts.push_back(b);
      total += b.size();
    }
  }
  Vec v(total);
  Eigen::Index k = 0;
  for (const auto& b : parts)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = 0; i < b.rows(); ++i) v(k++) = b(i, j);
  return v;
}

}  // namespace

Intertwiners intertwiners(const HalfBraiding& h1, const HalfBraiding& h2, double tol) {
  const FusionCategory& C = h1.category();
  const IndObject A = h1.carrier.object(), B = h2.carrier.object();
  std::vector<Expansion> l1, r1, l2, r2;
  for (int u = 0; u < C.rank(); ++u) {
    const Word w = C.normalize({u});
    l1.push_back(left_side(h1.carrier, w));
    r1.push_back(right_side(h1.carrier, w));
    l2.push_back(left_side(h2.carrier, w));
    r2.push_back(right_side(h2.carrier, w));
  }
  std::vector<std::array<int, 3>> unknowns;
  for (int s = 0; s < C.rank(); ++s)
    for (int j = 0; j < A(s); ++j)
      for (int i = 0; i < B(s); ++i) unknowns.push_back({s, i, j});
  Intertwiners out;
  if (unknowns.empty()) return out;
  std::vector<Vec> cols(unknowns.size());
  parallel_for(static_cast<int>(unknowns.size()), [&](int k) {
    IndMorphism f = IndMorphism::zero(A, B);
    f.blocks[unknowns[k][0]](unknowns[k][1], unknowns[k][2]) = 1.0;
    cols[k] = intertwiner_residual(h1, h2, f, l1, r1, l2, r2);
  });
  Mat L(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) L.col(static_cast<Eigen::Index>(k)) = cols[k];
  const Mat ns = null_space(L, tol);
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    IndMorphism f = IndMorphism::zero(A, B);
    for (size_t k = 0; k < unknowns.size(); ++k) f.blocks[unknowns[k][0]](unknowns[k][1], unknowns[k][2]) = ns(k, c);
    out.basis.push_back(f);
    out.residual = std::max(out.residual, (L * ns.col(c)).norm());
  }
  return out;
}

std::optional<IndMorphism> is_isomorphic(const HalfBraiding& h1, const HalfBraiding& h2, double tol) {
  if (!(h1.carrier.object() == h2.carrier.object())) return std::nullopt;
  const Intertwiners I = intertwiners(h1, h2, tol);
  if (I.basis.empty()) return std::nullopt;
  // A generic combination of intertwiners is invertible iff any is.
  IndMorphism f = IndMorphism::zero(h1.carrier.object(), h2.carrier.object());
  for (size_t k = 0; k < I.basis.size(); ++k)
    f = f + I.basis[k] * cd(std::cos(1.0 + 0.7 * static_cast<double>(k)), std::sin(0.3 + 1.3 * static_cast<double>(k)));
  if (min_singular(f) < 1e-6) return std::nullopt;
  return f;
}

Factorization factor_through_Z(const Expansion& X, const Expansion& Y, const std::function<Components(const Word&)>& xi,
                               double tol) {
  const FusionCategory& C = *X.cat;
  const int n = C.rank(), K = X.keys();
  std::vector<Components> xs;
  for (int u = 0; u < n; ++u) xs.push_back(xi(C.normalize({u})));

  // Naturality on words of length two, against every vertex.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Word ab = C.normalize({a, b});
      const Components xab = xi(ab);
      for (int c = 0; c < n; ++c)
        for (const auto& v : onb(C, c, ab)) {
          Components lhs, rhs;
          for (const auto& [k, m] : xs[c]) lhs.emplace(k, ck::compose(tensor(v, id(C, Y.words[k.second])), m));
          for (const auto& [k, m] : xab) rhs.emplace(k, ck::compose(m, tensor(id(C, X.words[k.first]), v)));
          const double d = max_diff(lhs, rhs);
          if (d > tol)
            throw Error(codes::kNotNatural, "family is not natural at (" + C.label_name(a) + ", " + C.label_name(b) +
                                                "), residual " + std::to_string(d));
        }
    }

  Components rc;
  for (int a = 0; a < n; ++a) {
    const Morphism Rs = cup(C, a).dagger();
    const Morphism iab = id(C, {C.dual(a)});
    for (const auto& [k, m] : xs[a])
      rc.emplace(std::make_pair(a * K + k.first, k.second),
                 ck::compose(tensor(Rs, id(C, Y.words[k.second])), tensor(iab, m)));
  }
  const Expansion ZX = z_expand(X);
  Factorization out;
  out.r = realize(ZX, Y, rc);

  // (id_u . r) d_{X,u} against xi_u, and the same linear map for the least-squares solve.
  std::vector<Expansion> dl, dr, yr;
  for (int u = 0; u < n; ++u) {
    const Word w = C.normalize({u});
    dl.push_back(sandwich_expand({}, X, w));
    dr.push_back(sandwich_expand(w, ZX, {}));
    yr.push_back(sandwich_expand(w, Y, {}));
  }
  std::vector<IndMorphism> dmaps;
  for (int u = 0; u < n; ++u) dmaps.push_back(realize(dl[u], dr[u], partial_components(X, C.normalize({u}))));
  auto apply = [&](const IndMorphism& r) {
    std::vector<IndMorphism> res;
    const Components cr = components(ZX, Y, r);
    for (int u = 0; u < n; ++u) {
      const Word w = C.normalize({u});
      res.push_back(compose(realize(dr[u], yr[u], tensor_left(C, w, cr)), dmaps[u]));
    }
    return res;
  };
  const auto rec = apply(out.r);
  for (int u = 0; u < n; ++u)
    out.reconstruction = std::max(out.reconstruction, max_diff(rec[u], realize(dl[u], yr[u], xs[u])));

  const IndObject A = ZX.object(), B = Y.object();
  std::vector<std::array<int, 3>> unknowns;
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < A(s); ++j)
      for (int i = 0; i < B(s); ++i) unknowns.push_back({s, i, j});
  auto flatten = [](const std::vector<IndMorphism>& fs) {
    std::vector<cd> v;
    for (const auto& f : fs)
      for (const auto& b : f.blocks)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
          for (Eigen::Index i = 0; i < b.rows(); ++i) v.push_back(b(i, j));
    return Eigen::Map<Vec>(v.data(), static_cast<Eigen::Index>(v.size())).eval();
  };
  std::vector<IndMorphism> target;
  for (int u = 0; u < n; ++u) target.push_back(realize(dl[u], yr[u], xs[u]));
  const Vec rhs = flatten(target);
  if (unknowns.empty()) return out;
  Mat L(rhs.size(), static_cast<Eigen::Index>(unknowns.size()));
  for (size_t k = 0; k < unknowns.size(); ++k) {
    IndMorphism e = IndMorphism::zero(A, B);
    e.blocks[unknowns[k][0]](unknowns[k][1], unknowns[k][2]) = 1.0;
    L.col(static_cast<Eigen::Index>(k)) = flatten(apply(e));
  }
  if (null_space(L, 1e-8).cols() != 0) throw Error(codes::kAxiom, "factorization is not unique");
  const Vec sol = L.colPivHouseholderQr().solve(rhs);
  IndMorphism r2 = IndMorphism::zero(A, B);
  for (size_t k = 0; k < unknowns.size(); ++k) r2.blocks[unknowns[k][0]](unknowns[k][1], unknowns[k][2]) = sol(k);
  out.uniqueness = max_diff(r2, out.r);
  return out;
}

}  // namespace ck
