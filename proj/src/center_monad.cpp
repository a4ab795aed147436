#include "center_kit/center_monad.hpp"

#include <cmath>

namespace ck {

const char* mode_name(Mode m) { return m == Mode::Unitary ? "unitary" : "algebraic"; }

Mode parse_mode(const std::string& s) {
  if (s == "unitary" || s == "hilb") return Mode::Unitary;
  if (s == "algebraic" || s == "vect") return Mode::Algebraic;
  throw Error(codes::kUsage, "unknown mode '" + s + "' (expected algebraic or unitary)");
}

CentralizerDecomposition Z_object(const Expansion& X) { return {X, z_expand(X)}; }

IndMorphism Z_morphism(const Expansion& dom, const Expansion& cod, const IndMorphism& f) {
  const FusionCategory& C = *dom.cat;
  const Components cf = components(dom, cod, f);
  Components out;
  for (int a = 0; a < C.rank(); ++a) {
    const Morphism ia = id(C, {a}), iab = id(C, {C.dual(a)});
    for (const auto& [kk, m] : cf)
      out.emplace(std::make_pair(a * dom.keys() + kk.first, a * cod.keys() + kk.second), tensor(iab, m, ia));
  }
  return realize(z_expand(dom), z_expand(cod), out);
}

namespace {

// sum over omega in ONB(a, U) of omega^dual (x) id_W (x) omega^*: Ubar W U -> abar W a.
Morphism rho_component(const FusionCategory& C, Label a, const Word& w, const Word& u) {
  Morphism out(C, C.concat(C.bar(u), w, u), C.concat({C.dual(a)}, w, {a}));
  const Morphism iw = id(C, w);
  for (const auto& om : onb(C, a, u)) out += tensor(dual_morphism(om), iw, om.dagger());
  return out;
}

}  // namespace

IndMorphism rho(const Expansion& X, const Word& u0) {
  const FusionCategory& C = *X.cat;
  const Word u = C.normalize(u0);
  const Expansion dom = sandwich_expand(C.bar(u), X, u);
  const Expansion cod = z_expand(X);
  return realize(dom, cod, [&](int k) {
    std::vector<std::pair<int, Morphism>> out;
    for (int a = 0; a < C.rank(); ++a)
      if (C.tree_count(u, a) > 0) out.emplace_back(a * X.keys() + k, rho_component(C, a, X.words[k], u));
    return out;
  });
}

IndMorphism eta(const Expansion& X) {
  const FusionCategory& C = *X.cat;
  return realize(X, z_expand(X), [&](int k) {
    return std::vector<std::pair<int, Morphism>>{{C.unit() * X.keys() + k, id(C, X.words[k])}};
  });
}

IndMorphism mu(const Expansion& X) {
  const FusionCategory& C = *X.cat;
  const int n = C.rank(), K = X.keys();
  const Expansion Z1 = z_expand(X);
  const Expansion Z2e = z_expand(Z1);
  Components comp;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < K; ++k) {
        const Word& w = X.words[k];
        const Morphism iw = id(C, w);
        for (int c = 0; c < n; ++c) {
          const auto basis = onb(C, c, {a, b});
          if (basis.empty()) continue;
          Morphism m(C, C.concat({C.dual(b), C.dual(a)}, w, {a, b}), C.concat({C.dual(c)}, w, {c}));
          for (const auto& om : basis) m += tensor(dual_morphism(om), iw, om.dagger());
          comp.emplace(std::make_pair(b * n * K + a * K + k, c * K + k), std::move(m));
        }
      }
  return realize(Z2e, Z1, comp);
}

Components partial_components(const Expansion& X, const Word& u0) {
  const FusionCategory& C = *X.cat;
  const Word u = C.normalize(u0);
  const Morphism Rb = cap(C, u);
  Components comp;
  for (int k = 0; k < X.keys(); ++k) {
    const Word& w = X.words[k];
    const Morphism lift = tensor(Rb, id(C, w), id(C, u));
    for (int a = 0; a < C.rank(); ++a) {
      if (C.tree_count(u, a) == 0) continue;
      comp.emplace(std::make_pair(k, a * X.keys() + k),
                   compose(tensor(id(C, u), rho_component(C, a, w, u)), lift));
    }
  }
  return comp;
}

IndMorphism partial(const Expansion& X, const Word& u) {
  const FusionCategory& C = *X.cat;
  const Word un = C.normalize(u);
  return realize(sandwich_expand({}, X, un), sandwich_expand(un, z_expand(X), {}), partial_components(X, un));
}

IndMorphism partial(const Expansion& X, const IndObject& Y) {
  const FusionCategory& C = *X.cat;
  const Expansion PY = plain_expand(C, Y);
  const int K = X.keys(), KY = PY.keys(), n = C.rank();
  Components comp;
  for (int j = 0; j < KY; ++j) {
    const Word& u = PY.words[j];
    for (const auto& [kk, m] : partial_components(X, u))
      comp.emplace(std::make_pair(kk.first * KY + j, j * (n * K) + kk.second), m);
  }
  return realize(tensor_expand(X, PY), tensor_expand(PY, z_expand(X)), comp);
}

Components free_braiding_components(const Expansion& X, const Word& u0, Mode mode) {
  const FusionCategory& C = *X.cat;
  const Word u = C.normalize(u0);
  const int n = C.rank(), K = X.keys();
  const Morphism Rb = cap(C, u);
  const Morphism iu = id(C, u);
  Components comp;
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < K; ++k) {
      const Word& w = X.words[k];
      const Word src = C.concat({C.dual(a)}, w, C.concat({a}, u));
      const Morphism lift = tensor(Rb, id(C, src));
      const Morphism iw = id(C, w);
      const Word au = C.concat({a}, u);
      for (int b = 0; b < n; ++b) {
        const auto basis = onb(C, b, au);
        if (basis.empty()) continue;
        Morphism m(C, C.concat(C.concat(u, C.bar(au)), w, au), C.concat(C.concat(u, {C.dual(b)}), w, {b}));
        for (const auto& om : basis) m += tensor(tensor(iu, dual_morphism(om)), iw, om.dagger());
        const double wgt = mode == Mode::Unitary ? std::sqrt(C.dim(a) / C.dim(b)) : 1.0;
        comp.emplace(std::make_pair(a * K + k, b * K + k), compose(m, lift) * wgt);
      }
    }
  return comp;
}

IndMorphism Z2(const Expansion& X1, const Expansion& X2) {
  const FusionCategory& C = *X1.cat;
  const int n = C.rank(), K1 = X1.keys(), K2 = X2.keys();
  Components comp;
  for (int a = 0; a < n; ++a) {
    const Morphism ia = id(C, {a}), iab = id(C, {C.dual(a)}), Rb = cap(C, a);
    for (int k1 = 0; k1 < K1; ++k1)
      for (int k2 = 0; k2 < K2; ++k2)
        comp.emplace(std::make_pair(a * K1 * K2 + k1 * K2 + k2, (a * K1 + k1) * (n * K2) + a * K2 + k2),
                     tensor(tensor(iab, id(C, X1.words[k1]), Rb), id(C, X2.words[k2]), ia));
  }
  return realize(z_expand(tensor_expand(X1, X2)), tensor_expand(z_expand(X1), z_expand(X2)), comp);
}

IndMorphism Z0(const FusionCategory& C) {
  const Expansion one = word_expand(C, {});
  Components comp;
  for (int a = 0; a < C.rank(); ++a) comp.emplace(std::make_pair(a, 0), cup(C, a).dagger());
  return realize(z_expand(one), one, comp);
}

IndMorphism associator(const Expansion& E1, const Expansion& E2, const Expansion& E3) {
  const Expansion L = tensor_expand(tensor_expand(E1, E2), E3);
  const Expansion R = tensor_expand(E1, tensor_expand(E2, E3));
  Components comp;
  for (int k = 0; k < L.keys(); ++k) comp.emplace(std::make_pair(k, k), id(*E1.cat, L.words[k]));
  return realize(L, R, comp);
}

IndMorphism left_unitor(const Expansion& E) {
  const Expansion L = tensor_expand(word_expand(*E.cat, {}), E);
  Components comp;
  for (int k = 0; k < E.keys(); ++k) comp.emplace(std::make_pair(k, k), id(*E.cat, E.words[k]));
  return realize(L, E, comp);
}

IndMorphism right_unitor(const Expansion& E) {
  const Expansion R = tensor_expand(E, word_expand(*E.cat, {}));
  Components comp;
  for (int k = 0; k < E.keys(); ++k) comp.emplace(std::make_pair(k, k), id(*E.cat, E.words[k]));
  return realize(R, E, comp);
}

double max_diff(const Components& a, const Components& b) {
  double d = 0;
  for (const auto& [k, m] : a) {
    auto it = b.find(k);
    d = std::max(d, it == b.end() ? max_abs(m) : max_diff(m, it->second));
  }
  for (const auto& [k, m] : b)
    if (!a.count(k)) d = std::max(d, max_abs(m));
  return d;
}

}  // namespace ck
