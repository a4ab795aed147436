#include "center_kit/deligne.hpp"
#include "center_kit/fusion_io.hpp"
#include "center_kit/rng.hpp"
#include "center_kit/validate.hpp"
#include "doctest.h"

using namespace ck;

TEST_CASE("monoidal opposite") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    const FusionCategory M = monoidal_opposite(C);
    CHECK(M.labels() == C.labels());
    for (int a = 0; a < C.rank(); ++a)
      for (int b = 0; b < C.rank(); ++b)
        for (int c = 0; c < C.rank(); ++c) CHECK(M.N(a, b, c) == C.N(b, a, c));
    CHECK(validate(M).pass(1e-9));
    const FusionCategory MM = monoidal_opposite(M);
    CHECK(MM.fusion_table() == C.fusion_table());
    CHECK(validate(MM).pass(1e-9));
  }
  CHECK(pentagon_residual(monoidal_opposite(builtin("fib"))) < 1e-9);
  CHECK(monoidal_opposite(builtin("vec_z3")).fusion_table() == builtin("vec_z3").fusion_table());
}

TEST_CASE("Deligne products") {
  const FusionCategory fib = builtin("fib"), z2 = builtin("vec_z2");
  const FusionCategory ff = deligne_product(fib, fib);
  CHECK(ff.rank() == 4);
  const Label tt = product_label(fib, 1, 1);
  CHECK(ff.label_name(tt) == "tau|tau");
  CHECK(ff.dim(tt) == doctest::Approx(std::pow((1 + std::sqrt(5.0)) / 2, 2)).epsilon(1e-12));
  CHECK(ff.unit() == product_label(fib, 0, 0));
  CHECK(deligne_product(z2, z2).global_dim() == doctest::Approx(4.0));
  for (const auto& a : builtin_names())
    for (const auto& b : builtin_names()) {
      CAPTURE(a);
      CAPTURE(b);
      const FusionCategory A = builtin(a), B = builtin(b), P = deligne_product(A, B);
      CHECK(validate(P).pass(1e-9));
      for (int x = 0; x < P.rank(); ++x) {
        const auto [xl, xr] = split_label(B, x);
        CHECK(P.dual(x) == product_label(B, A.dual(xl), B.dual(xr)));
        for (int y = 0; y < P.rank(); ++y)
          for (int z = 0; z < P.rank(); ++z) {
            const auto [yl, yr] = split_label(B, y);
            const auto [zl, zr] = split_label(B, z);
            CHECK(P.N(x, y, z) == A.N(xl, yl, zl) * B.N(xr, yr, zr));
          }
      }
    }
}

TEST_CASE("product data serializes with pair labels") {
  const FusionCategory P = deligne_product(builtin("vec_z2"), builtin("fib"));
  const FusionCategory Q = parse_fusion_data(serialize(P));
  CHECK(fingerprint(Q) == fingerprint(P));
  CHECK(Q.label_name(0) == "0|1");
}

TEST_CASE("multiplication functor") {
  const FusionCategory fib = builtin("fib");
  const FusionCategory P = deligne_product(monoidal_opposite(fib), fib);
  const MultiplicationFunctor T(fib, P);
  CHECK(T.on_object({P.unit()}).empty());
  CHECK(T.on_object({}).empty());
  const Word tt = T.on_object({product_label(fib, 1, 1)});
  CHECK(tt == Word{1, 1});
  CHECK(fib.tree_count(tt, 1) == 1);

  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const FusionCategory C = builtin(name);
    const FusionCategory Q = deligne_product(monoidal_opposite(C), C);
    const MultiplicationFunctor F(C, Q);
    Rng rng(11);
    const int n = Q.rank();
    double func = 0, dag = 0, tens = 0;
    for (int t = 0; t < 6; ++t) {
      const Label x = rng.below(n), y = rng.below(n), z = rng.below(n);
      Morphism f(Q, {x, y}, {z}), g(Q, {z}, {x, y});
      if (f.size() == 0) continue;
      f.set_coefficients(rng.complex_matrix(f.size(), 1));
      g.set_coefficients(rng.complex_matrix(g.size(), 1));
      func = std::max(func, max_diff(F.on_morphism(compose(g, f)), compose(F.on_morphism(g), F.on_morphism(f))));
      dag = std::max(dag, max_diff(F.on_morphism(f.dagger()), F.on_morphism(f).dagger()));
      tens = std::max(tens, max_diff(F.on_morphism(id(Q, {x, y})), id(C, F.on_object({x, y}))));
    }
    CHECK(func < 1e-12);
    CHECK(dag < 1e-12);
    CHECK(tens < 1e-12);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int s = 0; s < C.rank(); ++s) {
          int expected = 0;
          for (int z = 0; z < n; ++z) expected += Q.N(x, y, z) * C.tree_count(F.on_object({z}), s);
          CHECK(C.tree_count(F.on_object({x, y}), s) == expected);
        }
  }
}
