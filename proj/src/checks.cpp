#include "center_kit/checks.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "center_kit/fusion_io.hpp"
#include "center_kit/parallel.hpp"
#include "center_kit/validate.hpp"

namespace ck {

IndObject random_ind_object(const FusionCategory& C, Rng& rng, int max_total) {
  for (;;) {
    IndObject x = IndObject::zero(C);
    int total = 0;
    for (int a = 0; a < C.rank() && total < max_total; ++a) {
      x.mult[a] = std::min(rng.below(3), max_total - total);
      total += x.mult[a];
    }
    if (total > 0) return x;
  }
}

IndMorphism random_ind_morphism(const IndObject& x, const IndObject& y, Rng& rng) {
  IndMorphism f = IndMorphism::zero(x, y);
  for (size_t a = 0; a < f.blocks.size(); ++a) f.blocks[a] = rng.complex_matrix(y.mult[a], x.mult[a]);
  return f;
}

std::pair<IndMorphism, IndMorphism> random_automorphism(const IndObject& x, Rng& rng, bool unitary) {
  IndMorphism g = IndMorphism::identity(x), gi = IndMorphism::identity(x);
  for (size_t a = 0; a < g.blocks.size(); ++a) {
    const int n = x.mult[a];
    if (n == 0) continue;
    const Mat m = rng.complex_matrix(n, n);
    if (unitary) {
      g.blocks[a] = Eigen::HouseholderQR<Mat>(m).householderQ() * Mat::Identity(n, n);
      gi.blocks[a] = g.blocks[a].adjoint();
    } else {
      g.blocks[a] = Mat::Identity(n, n) + 0.25 * m / std::sqrt(static_cast<double>(n));
      gi.blocks[a] = g.blocks[a].inverse();
    }
  }
  return {g, gi};
}

std::vector<FusionCategory> mutated_categories(const FusionCategory& C) {
  std::vector<FusionCategory> out;
  const cd phase = std::polar(1.0, 0.3);
  for (const auto& [key, block] : C.F_blocks()) {
    if (key[0] == C.unit() || key[1] == C.unit() || key[2] == C.unit()) continue;
    std::map<FKey, Mat> F = C.F_blocks();
    F[key] = block * phase;
    out.emplace_back(C.name() + "-mutated", C.labels(), C.unit(), C.duals(), C.dims(), C.fusion_table(), std::move(F));
  }
  return out;
}

void check_validation(const FusionCategory& C, Report& r, const Options& o) {
  const ValidationReport v = validate(C);
  r.residual("pentagon", v.pentagon, o.tol);
  r.residual("F unitarity", v.f_unitarity, o.tol);
  r.residual("conjugate equations", v.conjugate, o.tol);
  r.residual("cup normalization", v.cup_norm, o.tol);
  r.residual("dimension function", v.dimension, o.tol);
}

void check_mutations(const FusionCategory& C, Report& r, const Options& o) {
  const auto ms = mutated_categories(C);
  long rejected = 0;
  for (const auto& m : ms)
    if (!validate(m).pass(o.tol)) ++rejected;
  r.count("mutations rejected", rejected, static_cast<long>(ms.size()));
}

void check_monad(const FusionCategory& C, Report& r, const Options& o) {
  Rng rng(o.seed, 0x6d6f6e);
  struct Instance {
    IndObject x, y;
    IndMorphism f;
  };
  std::vector<Instance> inst;
  for (int t = 0; t < o.trials; ++t) {
    IndObject x = random_ind_object(C, rng), y = random_ind_object(C, rng);
    IndMorphism f = random_ind_morphism(x, y, rng);
    inst.push_back({x, y, f});
  }
  std::vector<std::array<double, 5>> res(inst.size());
  parallel_for(o.trials, [&](int t) {
    const Expansion X = plain_expand(C, inst[t].x), Y = plain_expand(C, inst[t].y);
    const IndMorphism& f = inst[t].f;
    const Expansion ZX = z_expand(X), ZY = z_expand(Y), ZZX = z_expand(ZX);
    const IndMorphism m = mu(X), I = IndMorphism::identity(ZX.object());
    const IndMorphism Zf = Z_morphism(X, Y, f);
    res[t] = {max_diff(compose(m, Z_morphism(X, ZX, eta(X))), I), max_diff(compose(m, eta(ZX)), I),
              max_diff(compose(m, Z_morphism(ZZX, ZX, m)), compose(m, mu(ZX))),
              max_diff(compose(Zf, eta(X)), compose(eta(Y), f)),
              max_diff(compose(Zf, m), compose(mu(Y), Z_morphism(ZX, ZY, Zf)))};
  });
  std::array<double, 5> worst{};
  for (const auto& x : res)
    for (size_t i = 0; i < worst.size(); ++i) worst[i] = std::max(worst[i], x[i]);
  r.residual("mu (Z eta) = id", worst[0], o.tol);
  r.residual("mu eta_Z = id", worst[1], o.tol);
  r.residual("mu associativity", worst[2], o.tol);
  r.residual("eta naturality", worst[3], o.tol);
  r.residual("mu naturality", worst[4], o.tol);
}

void check_bimonad(const FusionCategory& C, Report& r, const Options& o) {
  Rng rng(o.seed, 0x62696d);
  const Expansion one = word_expand(C, {});
  const Expansion Z1 = z_expand(one);
  const IndMorphism z0 = Z0(C);
  const double z0_eta = max_diff(compose(z0, eta(one)), IndMorphism::identity(one.object()));
  const double z0_mu = max_diff(compose(z0, mu(one)), compose(z0, Z_morphism(Z1, one, z0)));
  std::vector<std::array<IndObject, 3>> inst;
  for (int t = 0; t < o.trials; ++t) {
    IndObject x1 = random_ind_object(C, rng, 2), x2 = random_ind_object(C, rng, 2), x3 = random_ind_object(C, rng, 2);
    inst.push_back({x1, x2, x3});
  }
  std::vector<std::array<double, 5>> res(inst.size());
  parallel_for(o.trials, [&](int t) {
    const Expansion X1 = plain_expand(C, inst[t][0]);
    const Expansion X2 = plain_expand(C, inst[t][1]);
    const Expansion X3 = plain_expand(C, inst[t][2]);
    const Expansion Z_1 = z_expand(X1), Z_2 = z_expand(X2), Z_3 = z_expand(X3);
    const Expansion X12 = tensor_expand(X1, X2), X23 = tensor_expand(X2, X3);
    const Expansion Z12 = z_expand(X12), Z23 = z_expand(X23);
    const Expansion Z_12 = tensor_expand(Z_1, Z_2), Z_23 = tensor_expand(Z_2, Z_3);

    // (Z2 . id) Z2 = a^{-1} (id . Z2) Z2 Z(a)
    const IndMorphism lhs = compose(
        tensor_ind_morphism(Z12, Z_12, Z2(X1, X2), Z_3, Z_3, IndMorphism::identity(Z_3.object())), Z2(X12, X3));
    const IndMorphism rhs = compose(
        compose(associator(Z_1, Z_2, Z_3).dagger(),
                tensor_ind_morphism(Z_1, Z_1, IndMorphism::identity(Z_1.object()), Z23, Z_23, Z2(X2, X3))),
        compose(Z2(X1, X23), Z_morphism(tensor_expand(X12, X3), tensor_expand(X1, X23), associator(X1, X2, X3))));
    res[t][0] = max_diff(lhs, rhs);

    const IndMorphism l1 = compose(
        left_unitor(Z_1),
        compose(tensor_ind_morphism(Z1, one, z0, Z_1, Z_1, IndMorphism::identity(Z_1.object())), Z2(one, X1)));
    res[t][1] = max_diff(l1, Z_morphism(tensor_expand(one, X1), X1, left_unitor(X1)));
    const IndMorphism r1 = compose(
        right_unitor(Z_1),
        compose(tensor_ind_morphism(Z_1, Z_1, IndMorphism::identity(Z_1.object()), Z1, one, z0), Z2(X1, one)));
    res[t][2] = max_diff(r1, Z_morphism(tensor_expand(X1, one), X1, right_unitor(X1)));

    // Z2 mu = (mu . mu) Z2 Z(Z2)
    const IndMorphism a = compose(Z2(X1, X2), mu(X12));
    const IndMorphism b = compose(
        compose(tensor_ind_morphism(z_expand(Z_1), Z_1, mu(X1), z_expand(Z_2), Z_2, mu(X2)), Z2(Z_1, Z_2)),
        Z_morphism(Z12, Z_12, Z2(X1, X2)));
    res[t][3] = max_diff(a, b);
    res[t][4] = max_diff(compose(Z2(X1, X2), eta(X12)), tensor_ind_morphism(X1, Z_1, eta(X1), X2, Z_2, eta(X2)));
  });
  std::array<double, 5> worst{};
  for (const auto& x : res)
    for (size_t i = 0; i < worst.size(); ++i) worst[i] = std::max(worst[i], x[i]);
  r.residual("Z2 coassociativity", worst[0], o.tol);
  r.residual("Z0 left counit", worst[1], o.tol);
  r.residual("Z0 right counit", worst[2], o.tol);
  r.residual("Z2 mu compatibility", worst[3], o.tol);
  r.residual("Z2 eta compatibility", worst[4], o.tol);
  r.residual("Z0 eta = id", z0_eta, o.tol);
  r.residual("Z0 mu compatibility", z0_mu, o.tol);
}

namespace {

std::vector<Word> short_words(const FusionCategory& C) {
  std::vector<Word> out{{}};
  for (int a = 0; a < C.rank(); ++a)
    if (a != C.unit()) out.push_back({a});
  for (int a = 0; a < C.rank(); ++a)
    for (int b = 0; b < C.rank(); ++b)
      if (a != C.unit() && b != C.unit()) out.push_back({a, b});
  return out;
}

Components precompose(const Components& c, const std::function<Morphism(int)>& f) {
  Components out;
  for (const auto& [k, m] : c) out.emplace(k, compose(m, f(k.first)));
  return out;
}

}  // namespace

void check_rho(const FusionCategory& C, Report& r, const Options& o) {
  IndObject all = IndObject::zero(C);
  for (int a = 0; a < C.rank(); ++a) all.mult[a] = 1;
  const Expansion X = plain_expand(C, all);
  const Expansion ZX = z_expand(X);
  const auto words = short_words(C);
  std::vector<Components> rc;
  double norm_max = 0;
  for (const auto& u : words) {
    const IndMorphism rr = rho(X, u);
    norm_max = std::max(norm_max, ind_norm(rr));
    rc.push_back(components(sandwich_expand(C.bar(u), X, u), ZX, rr));
  }
  double dinat = 0;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j) {
      const Word &U = words[i], &V = words[j];
      Morphism f(C, U, V);
      for (int c = 0; c < f.size(); ++c) {
        Vec e = Vec::Zero(f.size());
        e(c) = 1.0;
        f.set_coefficients(e);
        const Morphism fd = dual_morphism(f);
        const Components lhs = precompose(rc[j], [&](int k) { return tensor(id(C, C.bar(V)), id(C, X.words[k]), f); });
        const Components rhs = precompose(rc[i], [&](int k) { return tensor(fd, id(C, X.words[k]), id(C, U)); });
        dinat = std::max(dinat, max_diff(lhs, rhs));
      }
    }
  double partial_res = 0;
  for (const auto& u : words) {
    const Expansion XU = sandwich_expand({}, X, u), ZXU = sandwich_expand({}, ZX, u), UZX = sandwich_expand(u, ZX, {});
    const IndMorphism beta = realize(ZXU, UZX, free_braiding_components(X, u, Mode::Algebraic));
    Components ec;
    for (int k = 0; k < X.keys(); ++k)
      ec.emplace(std::make_pair(k, C.unit() * X.keys() + k), id(C, C.concat(X.words[k], u)));
    const IndMorphism eta_u = realize(XU, ZXU, ec);
    partial_res = std::max(partial_res, max_diff(partial(X, u), compose(beta, eta_u)));
  }
  r.residual("rho dinaturality", dinat, o.scaled(1e-10));
  r.bound("rho norm", norm_max, 1.0 + o.scaled(1e-10));
  r.residual("partial = beta (eta . id)", partial_res, o.scaled(1e-10));
}

void check_free_half_braidings(const FusionCategory& C, Report& r, const Options& o) {
  Rng rng(o.seed, 0x736967);
  double unit = 0, sig_braid = 0, sig_unit = 0, beta_braid = 0, beta_unit = 0;
  for (int t = 0; t < o.trials; ++t) {
    const Expansion X = plain_expand(C, random_ind_object(C, rng, 2));
    const HalfBraiding s = free_half_braiding(X, Mode::Unitary);
    const HalfBraiding b = free_half_braiding(X, Mode::Algebraic);
    const HalfBraidingCheck cs = check_half_braiding(s), cb = check_half_braiding(b);
    sig_unit = std::max(sig_unit, cs.unitarity);
    sig_braid = std::max(sig_braid, cs.braid);
    beta_braid = std::max(beta_braid, cb.braid);
    unit = std::max({unit, cs.unit, cb.unit});
    beta_unit = std::max(beta_unit, cb.min_singular > 0 ? 0.0 : 1.0);
  }
  r.residual("sigma unitarity", sig_unit, o.tol);
  r.residual("sigma braid relation", sig_braid, o.tol);
  r.residual("beta braid relation", beta_braid, o.tol);
  r.residual("half-braiding unit", unit, o.tol);
  r.flag("beta invertible", beta_unit == 0);
}

void check_phi_psi(const FusionCategory& C, Report& r, const Options& o) {
  Rng rng(o.seed, 0x706869);
  struct Instance {
    IndObject x, y;
    IndMorphism g, g_inv;
  };
  std::vector<Instance> inst;
  for (int t = 0; t < o.trials; ++t) {
    Instance in;
    in.x = random_ind_object(C, rng, 2);
    const auto [g, gi] = random_automorphism(z_expand(plain_expand(C, in.x)).object(), rng, o.mode == Mode::Unitary);
    in.g = g;
    in.g_inv = gi;
    in.y = random_ind_object(C, rng, 1);
    inst.push_back(std::move(in));
  }
  std::vector<std::array<double, 4>> res(inst.size());
  parallel_for(o.trials, [&](int t) {
    const HalfBraiding hb = conjugate(free_half_braiding(plain_expand(C, inst[t].x), o.mode), inst[t].g, inst[t].g_inv);
    const ZModuleAction zm = phi(hb);
    const ModuleCheck mc = check_module(zm);
    const HalfBraiding back = psi(zm);
    double rt = 0, tens = 0;
    for (int u = 0; u < C.rank(); ++u) rt = std::max(rt, max_diff(back.e[u], hb.e[u]));
    const HalfBraiding other = free_half_braiding(plain_expand(C, inst[t].y), o.mode);
    const HalfBraiding t1 = tensor_hb(hb, other), t2 = tensor_hb_via_modules(hb, other);
    for (int u = 0; u < C.rank(); ++u) tens = std::max(tens, max_diff(t1.e[u], t2.e[u]));
    res[t] = {rt, mc.unit, mc.assoc, tens};
  });
  std::array<double, 4> worst{};
  for (const auto& x : res)
    for (size_t i = 0; i < worst.size(); ++i) worst[i] = std::max(worst[i], x[i]);
  r.residual("psi phi round trip", worst[0], o.scaled(1e-12));
  r.residual("phi module unit", worst[1], o.tol);
  r.residual("phi module associativity", worst[2], o.tol);
  r.residual("tensor compatibility", worst[3], o.tol);
}

void check_canonical_algebra(const FusionCategory& C, Report& r, const Options& o) {
  const int n = C.rank();
  long mismatches = 0;
  for (int a = 0; a < n; ++a) {
    const SModule S = s_module(C, IndObject::simple(C, a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (S.fiber_dim(b, c) != C.N(b, c, a) || S.fiber_dim_direct(b, c) != C.N(b, c, a)) ++mismatches;
  }
  r.count("S_a(b [x] c) dimension mismatches", mismatches, 0);
  r.residual("mu^S associativity", mult_S_associativity(C), o.scaled(1e-10));
  r.residual("mu^S unit", mult_S_unit(C), o.tol);
  r.residual("star monoidality", star_S_monoidality(C), o.tol);
  double gn = 0;
  for (int a = 0; a < n; ++a)
    for (int a1 = 0; a1 < n; ++a1)
      for (int a2 = 0; a2 < n; ++a2) {
        const double g = gamma_norm(C, a, a1, a2);
        if (g > 0) gn = std::max(gn, std::abs(g - 1.0));
      }
  r.residual("Gamma norm deviation", gn, o.tol);
  r.residual("Gamma star", gamma_star_residual(C), o.tol);
  r.residual("Gamma vs mu^S", gamma_vs_mult(C), o.tol);
  double ml = 0, mi = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    ml = std::max(ml, mirror_linearity(C, a));
    mi = std::min(mi, mirror_invertibility(C, a));
  }
  r.residual("mirror linearity", ml, o.tol);
  r.flag("mirror invertible", mi > 1e-6);
}

void check_bimodule_roundtrip(const FusionCategory& C, Report& r, const Options& o) {
  double hb_rt = 0, bm_rt = 0, assoc = 0, unit = 0;
  long flag_mismatch = 0, instances = 0;
  auto run = [&](const HalfBraiding& hb) {
    const SBimodule bm = hb_to_bimodule(hb, o.tol);
    const HalfBraiding back = bimodule_to_hb(bm, o.tol);
    const SBimodule bm2 = hb_to_bimodule(back, o.tol);
    for (int a = 0; a < C.rank(); ++a) hb_rt = std::max(hb_rt, max_diff(back.e[a], hb.e[a]));
    bm_rt = std::max(bm_rt, max_diff(bm2, bm));
    if (bm.unitary != hb.unitary || back.unitary != bm.unitary) ++flag_mismatch;
    assoc = std::max(assoc, bimodule_associativity(bm));
    unit = std::max(unit, bimodule_unit(bm));
    ++instances;
  };
  for (Mode m : {Mode::Unitary, Mode::Algebraic})
    for (const auto& s : solve_center(C, m, o.seed, false).simples) run(s.hb);
  Rng rng(o.seed, 0x62696d6f64);
  const int extra = std::min(o.trials, 4);
  for (int t = 0; t < extra; ++t) {
    const Expansion X = plain_expand(C, random_ind_object(C, rng, 1));
    for (Mode m : {Mode::Unitary, Mode::Algebraic}) {
      const HalfBraiding free = free_half_braiding(X, m);
      const auto [g, gi] = random_automorphism(free.carrier.object(), rng, m == Mode::Unitary);
      run(conjugate(free, g, gi));
    }
  }
  r.residual("hb -> bimodule -> hb", hb_rt, o.scaled(1e-10));
  r.residual("bimodule -> hb -> bimodule", bm_rt, o.scaled(1e-10));
  r.count("unitary flag mismatches", flag_mismatch, 0);
  r.residual("bimodule associativity", assoc, o.tol);
  r.residual("bimodule unit", unit, o.tol);
  r.data()["instances"] = instances;
}

void check_count_equivalence(const FusionCategory& C, Report& r, const Options& o) {
  const EquivalenceReport e = count_equivalence(C, o.seed);
  r.line(std::to_string(e.hb_count) + " = " + std::to_string(e.bm_count));
  r.count("simple bimodules", e.bm_count, e.hb_count);
  r.flag("qdim multisets agree", e.hb_qdims.size() == e.bm_qdims.size() && [&] {
    for (size_t i = 0; i < e.hb_qdims.size(); ++i)
      if (std::abs(e.hb_qdims[i] - e.bm_qdims[i]) > 1e-6 * std::max(1.0, e.hb_qdims[i])) return false;
    return true;
  }());
  r.flag("pairwise Hom dimensions agree", e.hb_hom == e.bm_hom);
  r.flag("unitary flags agree", e.unitary_flags_match);
  r.residual("round trip", e.roundtrip, o.scaled(1e-10));
  if (!e.ok()) r.line(e.diff());
}

namespace {

std::string fiber_string(const IndObject& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.mult.size(); ++i) s += (i ? "," : "") + std::to_string(x.mult[i]);
  return s + ")";
}

std::string fixed(double v, int prec) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

nlohmann::json matrix_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int expected_center_count(const FusionCategory& C) {
  const std::string fp = fingerprint(C);
  const std::pair<const char*, int> known[] = {{"vec_z2", 4}, {"vec_z3", 9}, {"fib", 4}, {"ising", 9}};
  for (const auto& [name, count] : known)
    if (fingerprint(builtin(name)) == fp) return count;
  return -1;
}

CenterReport check_center(const FusionCategory& C, Report& r, const Options& o, bool emit_braidings) {
  CenterReport cr = solve_center(C, o.mode, o.seed, true);
  r.line("#  fiber dims  qdim  twist  unitary residual");
  double unit_res = 0, braid = 0, module = 0;
  long not_simple = 0;
  nlohmann::json simples = nlohmann::json::array();
  for (size_t i = 0; i < cr.simples.size(); ++i) {
    const CenterSimple& s = cr.simples[i];
    const double arg = std::arg(s.twist) / (2 * std::numbers::pi);
    r.line(std::to_string(i) + "  " + fiber_string(s.support) + "  " + fixed(s.qdim, 6) + "  " +
           "exp(2pi i " + fixed(arg < -1e-12 ? arg + 1 : std::abs(arg), 6) + ")  " + format_number(s.unitary_residual));
    unit_res = std::max(unit_res, s.unitary_residual);
    braid = std::max(braid, s.braid_residual);
    module = std::max(module, s.module_residual);
    if (s.end_dim != 1) ++not_simple;
    nlohmann::json j;
    j["ordinal"] = i;
    j["fiber_dims"] = s.support.mult;
    j["qdim"] = s.qdim;
    j["twist"] = {s.twist.real(), s.twist.imag()};
    j["unitary_residual"] = s.unitary_residual;
    j["multiplicity"] = s.multiplicity;
    if (emit_braidings) {
      nlohmann::json e = nlohmann::json::array();
      for (const auto& m : s.hb.e) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& b : m.blocks) blocks.push_back(matrix_json(b));
        e.push_back(blocks);
      }
      j["braiding"] = e;
    }
    simples.push_back(j);
  }
  r.data()["simples"] = simples;
  const long count = static_cast<long>(cr.simples.size());
  const int expected = expected_center_count(C);
  if (expected >= 0) r.count("center simples", count, expected);
  r.count("center simples vs tube center", count, cr.tube_center_dim);
  r.flag("tube block sizes match multiplicities", cr.tube_blocks_match);
  r.count("non-simple summands", not_simple, 0);
  r.residual("sum qdim^2 vs D^2 (relative)", std::abs(cr.dim_sum - cr.global_dim_sq) / cr.global_dim_sq, 1e-6);
  r.residual("braid relation", braid, o.tol);
  r.residual("module laws", module, o.tol);
  r.count("Hom between distinct simples", std::lround(cr.orthogonality), 0);
  if (o.mode == Mode::Unitary) r.residual("unitarity", unit_res, o.tol);
  return cr;
}

}  // namespace ck
