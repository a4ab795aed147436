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

TEST_CASE("free half-braidings") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Options o;
    o.trials = 3;
    Report r("free", name, "");
    check_free_half_braidings(builtin(name), r, o);
    require_pass(r);
  }
}

TEST_CASE("beta is not unitary off the pointed case") {
  const FusionCategory C = builtin("fib");
  const Expansion X = plain_expand(C, IndObject::simple(C, 1));
  const HalfBraiding b = free_half_braiding(X, Mode::Algebraic);
  CHECK_FALSE(b.unitary);
  CHECK(unitarity_residual(b) > 1e-3);
  const HalfBraiding s = free_half_braiding(X, Mode::Unitary);
  CHECK(s.unitary);
  const FusionCategory Z3 = builtin("vec_z3");
  CHECK(free_half_braiding(plain_expand(Z3, IndObject::simple(Z3, 1)), Mode::Algebraic).unitary);
}

TEST_CASE("phi and psi are mutually inverse") {
  for (const auto& name : builtin_names())
    for (Mode m : {Mode::Unitary, Mode::Algebraic}) {
      CAPTURE(name);
      CAPTURE(mode_name(m));
      Options o;
      o.trials = 3;
      o.mode = m;
      Report r("phi-psi", name, "");
      check_phi_psi(builtin(name), r, o);
      require_pass(r);
    }
}

TEST_CASE("epsilon of the free algebraic half-braiding is mu") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    const Expansion X = plain_expand(C, IndObject::simple(C, C.rank() - 1));
    const HalfBraiding hb = free_half_braiding(X, Mode::Algebraic);
    CHECK(max_diff(epsilon(hb), mu(X)) < 1e-12);
    const IndMorphism tri = compose(epsilon(hb), Z_morphism(X, z_expand(X), eta(X)));
    CHECK(max_diff(tri, IndMorphism::identity(tri.dom)) < 1e-12);
  }
}

TEST_CASE("psi_inverse inverts each component") {
  const FusionCategory C = builtin("ising");
  Rng rng(12);
  const HalfBraiding free = free_half_braiding(plain_expand(C, IndObject::simple(C, 1)), Mode::Algebraic);
  const auto [g, gi] = random_automorphism(free.carrier.object(), rng, false);
  const HalfBraiding hb = conjugate(free, g, gi);
  CHECK(check_half_braiding(hb).ok(1e-9));
  for (int u = 0; u < C.rank(); ++u) {
    const IndMorphism pi = psi_inverse(hb, u);
    CHECK(max_diff(compose(pi, hb.e[u]), IndMorphism::identity(hb.e[u].dom)) < 1e-10);
    CHECK(max_diff(compose(hb.e[u], pi), IndMorphism::identity(hb.e[u].cod)) < 1e-10);
  }
}

TEST_CASE("intertwiners and isomorphism") {
  const FusionCategory C = builtin("fib");
  Rng rng(13);
  const HalfBraiding free = free_half_braiding(plain_expand(C, IndObject::simple(C, 0)), Mode::Unitary);
  CHECK(intertwiners(free, free).basis.size() == 2);
  const auto [g, gi] = random_automorphism(free.carrier.object(), rng, true);
  const HalfBraiding hb = conjugate(free, g, gi);
  CHECK(hb.unitary);
  CHECK(is_isomorphic(free, hb).has_value());
  CHECK(qdim(hb) == doctest::Approx(qdim(free)));
  const HalfBraiding one = trivial_half_braiding(C, Mode::Unitary);
  CHECK(qdim(one) == doctest::Approx(1.0));
  CHECK(intertwiners(one, free).basis.size() == 1);
}

TEST_CASE("mixing modes is an error") {
  const FusionCategory C = builtin("vec_z2");
  const HalfBraiding a = trivial_half_braiding(C, Mode::Unitary), b = trivial_half_braiding(C, Mode::Algebraic);
  try {
    tensor_hb(a, b);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == codes::kMode);
  }
  CHECK_THROWS_AS(tensor_hb_via_modules(a, b), Error);
}

TEST_CASE("twists of the toric code") {
  const CenterReport r = solve_center(builtin("vec_z2"), Mode::Unitary, 1, false);
  REQUIRE(r.simples.size() == 4);
  int fermions = 0;
  for (const auto& s : r.simples) {
    CHECK(std::abs(std::abs(s.twist) - 1.0) < 1e-12);
    if (std::abs(s.twist + 1.0) < 1e-9) ++fermions;
  }
  CHECK(fermions == 1);
}
