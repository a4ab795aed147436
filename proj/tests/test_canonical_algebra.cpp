#include "center_kit/checks.hpp"
#include "doctest.h"

using namespace ck;

namespace {

void require_pass(const Report& r) {
  for (const auto& c : r.records()) {
    CAPTURE(c.name);
    CAPTURE(c.value);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("canonical algebra structure") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Report r("canonical", name, "");
    check_canonical_algebra(builtin(name), r, Options{});
    require_pass(r);
  }
}

TEST_CASE("S has one-dimensional fibers on its support") {
  for (const auto& name : builtin_names()) {
    const FusionCategory C = builtin(name);
    const CanonicalAlgebra S(C);
    for (int p = 0; p < S.ambient.rank(); ++p) {
      const auto [l, r] = split_label(C, p);
      CHECK(S.fiber_dim(p) == (l == C.dual(r) ? 1 : 0));
    }
    for (int c = 0; c < C.rank(); ++c) CHECK(S.support[c] == product_label(C, C.dual(c), c));
    for (int a = 0; a < C.rank(); ++a) CHECK(star_S(C, star_S(C, a)) == a);
  }
}

TEST_CASE("mu^S block shapes follow the fusion rules") {
  const FusionCategory C = builtin("ising");
  for (int a1 = 0; a1 < C.rank(); ++a1)
    for (int a2 = 0; a2 < C.rank(); ++a2) {
      const auto blocks = mult_S(C, a1, a2);
      for (int a3 = 0; a3 < C.rank(); ++a3) {
        CHECK(blocks[a3].rows() == C.tree_count({C.dual(a2), C.dual(a1)}, C.dual(a3)));
        CHECK(blocks[a3].cols() == C.N(a1, a2, a3));
      }
    }
}

TEST_CASE("Gamma components have unit norm") {
  const FusionCategory C = builtin("fib");
  int nonzero = 0;
  for (int a = 0; a < 2; ++a)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        const double g = gamma_norm(C, a, a1, a2);
        if (gamma(C, a, a1, a2).size() == 0) {
          CHECK(g == 0);
        } else {
          ++nonzero;
          CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
        }
      }
  CHECK(nonzero == 5);
}

TEST_CASE("bimodule round trips") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Options o;
    o.trials = 1;
    Report r("roundtrip", name, "");
    check_bimodule_roundtrip(builtin(name), r, o);
    require_pass(r);
  }
}

TEST_CASE("unitary flag follows the half-braiding") {
  const FusionCategory C = builtin("fib");
  const Expansion X = plain_expand(C, IndObject::simple(C, 1));
  const SBimodule bu = hb_to_bimodule(free_half_braiding(X, Mode::Unitary));
  const SBimodule ba = hb_to_bimodule(free_half_braiding(X, Mode::Algebraic));
  CHECK(bu.unitary);
  CHECK_FALSE(ba.unitary);
  CHECK(bimodule_to_hb(bu).unitary);
  CHECK_FALSE(bimodule_to_hb(ba).unitary);
}

TEST_CASE("bimodule Hom spaces match half-braiding Hom spaces") {
  const FusionCategory C = builtin("ising");
  const CenterReport r = solve_center(C, Mode::Unitary, 3, false);
  std::vector<SBimodule> bms;
  for (const auto& s : r.simples) bms.push_back(hb_to_bimodule(s.hb));
  for (size_t i = 0; i < bms.size(); ++i)
    for (size_t j = 0; j < bms.size(); ++j) {
      const int hb = static_cast<int>(intertwiners(r.simples[i].hb, r.simples[j].hb).basis.size());
      CHECK(bimodule_hom_dim(bms[i], bms[j]) == hb);
    }
}

TEST_CASE("tensor of bimodules") {
  const FusionCategory C = builtin("fib");
  const CenterReport r = solve_center(C, Mode::Unitary, 1, false);
  const HalfBraiding& x = r.simples.back().hb;
  const SBimodule t = tensor_bimodule(hb_to_bimodule(x), hb_to_bimodule(x));
  CHECK(bimodule_associativity(t) < 1e-10);
  CHECK(bimodule_unit(t) < 1e-10);
  CHECK(t.unitary);
  CHECK(qdim(bimodule_to_hb(t)) == doctest::Approx(qdim(x) * qdim(x)).epsilon(1e-12));
}

TEST_CASE("count equivalence") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const EquivalenceReport e = count_equivalence(builtin(name));
    CHECK(e.ok());
    CHECK(e.hb_count == e.bm_count);
    CHECK(e.hb_qdims.size() == e.bm_qdims.size());
  }
}
