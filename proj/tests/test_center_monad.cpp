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

Options small(int trials) {
  Options o;
  o.seed = 21;
  o.trials = trials;
  return o;
}

}  // namespace

TEST_CASE("monad laws") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Report r("monad", name, "");
    check_monad(builtin(name), r, small(5));
    require_pass(r);
  }
}

TEST_CASE("op-lax monoidal laws") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Report r("bimonad", name, "");
    check_bimonad(builtin(name), r, small(3));
    require_pass(r);
  }
}

TEST_CASE("rho dinaturality, norm and the coupling") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Report r("rho", name, "");
    check_rho(builtin(name), r, small(1));
    require_pass(r);
  }
}

TEST_CASE("rho is the inclusion of a summand on simples") {
  const FusionCategory C = builtin("ising");
  const Expansion X = plain_expand(C, IndObject::simple(C, 1));
  for (int u = 0; u < C.rank(); ++u) {
    const IndMorphism r = rho(X, C.normalize({u}));
    CHECK(max_diff(compose(r.dagger(), r), IndMorphism::identity(r.dom)) < 1e-12);
  }
}

TEST_CASE("rho norm on a word of length three") {
  // Fib: tau tau tau contains tau twice, so rho collapses two orthogonal copies onto one slot.
  const FusionCategory C = builtin("fib");
  const Expansion X = plain_expand(C, IndObject::simple(C, 0));
  CHECK(ind_norm(rho(X, {1, 1, 1})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ind_norm(rho(X, {1, 1})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Z on morphisms is functorial") {
  const FusionCategory C = builtin("fib");
  Rng rng(9);
  const IndObject x = random_ind_object(C, rng), y = random_ind_object(C, rng), z = random_ind_object(C, rng);
  const Expansion X = plain_expand(C, x), Y = plain_expand(C, y), Zx = plain_expand(C, z);
  const IndMorphism f = random_ind_morphism(x, y, rng), g = random_ind_morphism(y, z, rng);
  CHECK(max_diff(Z_morphism(X, Zx, compose(g, f)), compose(Z_morphism(Y, Zx, g), Z_morphism(X, Y, f))) < 1e-12);
  CHECK(max_diff(Z_morphism(X, X, IndMorphism::identity(x)), IndMorphism::identity(z_expand(X).object())) < 1e-12);
  CHECK(max_diff(Z_morphism(Y, X, f.dagger()), Z_morphism(X, Y, f).dagger()) < 1e-12);
}

TEST_CASE("Z2 is natural in both variables") {
  const FusionCategory C = builtin("ising");
  Rng rng(10);
  const IndObject x1 = random_ind_object(C, rng, 2), y1 = random_ind_object(C, rng, 2);
  const IndObject x2 = random_ind_object(C, rng, 2), y2 = random_ind_object(C, rng, 2);
  const Expansion X1 = plain_expand(C, x1), Y1 = plain_expand(C, y1), X2 = plain_expand(C, x2), Y2 = plain_expand(C, y2);
  const IndMorphism f = random_ind_morphism(x1, y1, rng), g = random_ind_morphism(x2, y2, rng);
  const IndMorphism fg = tensor_ind_morphism(X1, Y1, f, X2, Y2, g);
  const IndMorphism lhs = compose(Z2(Y1, Y2), Z_morphism(tensor_expand(X1, X2), tensor_expand(Y1, Y2), fg));
  const IndMorphism rhs = compose(
      tensor_ind_morphism(z_expand(X1), z_expand(Y1), Z_morphism(X1, Y1, f), z_expand(X2), z_expand(Y2), Z_morphism(X2, Y2, g)),
      Z2(X1, X2));
  CHECK(max_diff(lhs, rhs) < 1e-10);
}

TEST_CASE("factorization through Z recovers the free braiding") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    const Expansion X = plain_expand(C, IndObject::simple(C, C.rank() - 1));
    const Expansion ZX = z_expand(X);
    // xi_U = d_{X,U} factors through r = id_{Z(X)}.
    const Factorization f = factor_through_Z(X, ZX, [&](const Word& u) { return partial_components(X, u); });
    CHECK(f.reconstruction < 1e-10);
    CHECK(f.uniqueness < 1e-10);
    CHECK(max_diff(f.r, IndMorphism::identity(ZX.object())) < 1e-10);
  }
}

TEST_CASE("non-natural families are rejected") {
  const FusionCategory C = builtin("fib");
  const Expansion X = plain_expand(C, IndObject::simple(C, 1));
  const Expansion ZX = z_expand(X);
  auto bad = [&](const Word& u) {
    Components c = partial_components(X, u);
    if (u.size() == 1)
      for (auto& [k, m] : c) m = m * 2.0;
    return c;
  };
  try {
    factor_through_Z(X, ZX, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == codes::kNotNatural);
  }
}

TEST_CASE("mode names") {
  CHECK(parse_mode("unitary") == Mode::Unitary);
  CHECK(parse_mode("algebraic") == Mode::Algebraic);
  CHECK_THROWS_AS(parse_mode("fast"), Error);
}
