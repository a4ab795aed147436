#include "center_kit/checks.hpp"
#include "doctest.h"

using namespace ck;

namespace {

int brute_force_fiber(const FusionCategory& C, const IndObject& v1, const IndObject& v2, Label a) {
  int n = 0;
  for (int b = 0; b < C.rank(); ++b)
    for (int c = 0; c < C.rank(); ++c) n += C.tree_count({b, c}, a) * v1(b) * v2(c);
  return n;
}

}  // namespace

TEST_CASE("tensor_ind fiber dimensions") {
  const FusionCategory fib = builtin("fib"), z2 = builtin("vec_z2");
  const IndObject tau = IndObject::simple(fib, 1);
  const IndObject tt = tensor_ind(fib, tau, tau);
  CHECK(tt.mult == std::vector<int>{1, 1});
  const IndObject g = IndObject::simple(z2, 1);
  CHECK(tensor_ind(z2, g, g).mult == std::vector<int>{1, 0});
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
      const IndObject v1 = random_ind_object(C, rng), v2 = random_ind_object(C, rng), v3 = random_ind_object(C, rng);
      CHECK(tensor_ind(C, IndObject::simple(C, C.unit()), v1) == v1);
      const IndObject p = tensor_ind(C, v1, v2);
      for (int a = 0; a < C.rank(); ++a) CHECK(p(a) == brute_force_fiber(C, v1, v2, a));
      CHECK(tensor_ind(C, p, v3) == tensor_ind(C, v1, tensor_ind(C, v2, v3)));
      const Expansion E = tensor_expand(plain_expand(C, v1), plain_expand(C, v2));
      CHECK(E.object() == p);
    }
  }
}

TEST_CASE("Hilb inner product weights") {
  const FusionCategory fib = builtin("fib");
  const double phi = fib.dim(1);
  Vec one(1);
  one(0) = 1.0;
  CHECK(std::abs(hilb_inner_product(fib, 0, 0, 0, one, one) - 1.0) < 1e-15);
  CHECK(std::abs(hilb_inner_product(fib, 0, 1, 1, one, one) - 1.0 / (phi * phi)) < 1e-14);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Vec x = rng.complex_matrix(3, 1);
    const cd ip = hilb_inner_product(fib, 1, 1, 1, x, x);
    CHECK(ip.real() > 0);
    CHECK(std::abs(ip.imag()) < 1e-14);
  }
}

TEST_CASE("associativity change of basis is unitary") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    Rng rng(8);
    for (int t = 0; t < 5; ++t) {
      const Expansion E1 = plain_expand(C, random_ind_object(C, rng, 2));
      const Expansion E2 = plain_expand(C, random_ind_object(C, rng, 2));
      const Expansion E3 = plain_expand(C, random_ind_object(C, rng, 2));
      const IndMorphism a = associator(E1, E2, E3);
      CHECK(max_diff(compose(a.dagger(), a), IndMorphism::identity(a.dom)) < 1e-9);
      CHECK(max_diff(compose(a, a.dagger()), IndMorphism::identity(a.cod)) < 1e-9);
    }
  }
}

TEST_CASE("ind-morphism algebra") {
  const FusionCategory C = builtin("ising");
  Rng rng(4);
  const IndObject x = random_ind_object(C, rng), y = random_ind_object(C, rng), z = random_ind_object(C, rng),
                  w = random_ind_object(C, rng);
  const IndMorphism f = random_ind_morphism(x, y, rng), g = random_ind_morphism(y, z, rng),
                    h = random_ind_morphism(z, w, rng);
  CHECK(max_diff(compose(h, compose(g, f)), compose(compose(h, g), f)) < 1e-12);
  CHECK(max_diff(dagger_ind(dagger_ind(f)), f) == 0);
  CHECK(ind_norm(IndMorphism::identity(x)) == doctest::Approx(1.0));
  CHECK(ind_norm(IndMorphism::zero(x, y)) == 0);
  CHECK(ind_norm(compose(f.dagger(), f)) == doctest::Approx(ind_norm(f) * ind_norm(f)).epsilon(1e-12));
  CHECK(ind_norm(compose(g, f)) <= ind_norm(g) * ind_norm(f) + 1e-12);
  const IndObject s = direct_sum(x, y);
  for (int a = 0; a < C.rank(); ++a) CHECK(s(a) == x(a) + y(a));
  const IndMorphism fg = direct_sum(f, g);
  CHECK(fg.dom == direct_sum(x, y));
  CHECK(fg.cod == direct_sum(y, z));
  CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("centralizer expansion fibers") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    Rng rng(6);
    const IndObject x = random_ind_object(C, rng);
    const Expansion Z = z_expand(plain_expand(C, x));
    for (int s = 0; s < C.rank(); ++s) {
      int expected = 0;
      for (int a = 0; a < C.rank(); ++a)
        for (int y = 0; y < C.rank(); ++y) expected += x(y) * C.tree_count({C.dual(a), y, a}, s);
      CHECK(Z.dim(s) == expected);
      const Mat& V = Z.V[s];
      if (V.size()) CHECK(max_abs(Mat(V.adjoint() * V - Mat::Identity(V.cols(), V.cols()))) < 1e-12);
    }
  }
}
