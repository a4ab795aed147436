#include <fstream>
#include <sstream>

#include "center_kit/checks.hpp"
#include "center_kit/fusion_io.hpp"
#include "center_kit/validate.hpp"
#include "doctest.h"

using namespace ck;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const char* name) { return std::string(CK_DATA_DIR) + "/" + name; }

std::string error_code(const std::string& text) {
  try {
    parse_fusion_data(text);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

void replace_once(std::string& s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("built-in categories satisfy the axioms") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const ValidationReport v = validate(builtin(name));
    CHECK(v.pentagon < 1e-9);
    CHECK(v.f_unitarity < 1e-9);
    CHECK(v.conjugate < 1e-9);
    CHECK(v.cup_norm < 1e-9);
    CHECK(v.dimension < 1e-9);
  }
}

TEST_CASE("vec_z2.json has two labels and exact residuals") {
  const FusionCategory C = load_fusion_file(data("vec_z2.json"));
  CHECK(C.rank() == 2);
  const ValidationReport v = validate(C);
  CHECK(v.pentagon == 0);
  CHECK(v.f_unitarity == 0);
  CHECK(v.dimension == 0);
}

TEST_CASE("fib.json pentagon residual") {
  const FusionCategory C = load_fusion_file(data("fib.json"));
  CHECK(C.rank() == 2);
  CHECK(pentagon_residual(C) < 1e-9);
  CHECK(C.dim(1) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("data files match the built-ins") {
  for (const char* name : {"vec_z2", "vec_z3", "fib", "ising"}) {
    CAPTURE(name);
    const FusionCategory C = load_fusion_file(data((std::string(name) + ".json").c_str()));
    CHECK(fingerprint(C) == fingerprint(builtin(name)));
  }
}

TEST_CASE("serialization round trip preserves the fingerprint") {
  for (const auto& name : builtin_names()) {
    const FusionCategory C = builtin(name);
    const FusionCategory D = parse_fusion_data(serialize(C));
    CHECK(serialize(D) == serialize(C));
    CHECK(fingerprint(D) == fingerprint(C));
  }
  CHECK(fingerprint(builtin("fib")) != fingerprint(builtin("vec_z2")));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("parse errors carry distinct codes") {
  const std::string fib = slurp(data("fib.json"));
  {
    std::string s = fib;
    replace_once(s, "\"unit\"", "\"unti\"");
    CHECK(error_code(s) == codes::kUnitMissing);
  }
  {
    std::string s = fib;
    replace_once(s, "\"unit\": \"1\"", "\"unit\": \"one\"");
    CHECK(error_code(s) == codes::kUnitMissing);
  }
  CHECK(error_code("{\"labels\": [\"1\"], \"unit\": ") == codes::kParse);
  CHECK(error_code(R"({"labels": ["1", "g"], "unit": "1", "dual": {"1": "1", "g": "h"},
      "dims": {"1": 1, "g": 1}, "fusion": []})") == codes::kLabelUnknown);
  CHECK(error_code(R"({"labels": ["1", "a", "b"], "unit": "1", "dual": {"1": "1", "a": "b", "b": "b"},
      "dims": {"1": 1, "a": 1, "b": 1}, "fusion": []})") == codes::kDualNotInvolutive);
  CHECK(error_code(R"({"labels": ["1", "g"], "unit": "1", "dual": {"1": "1", "g": "g"},
      "dims": {"1": 1, "g": 1}, "fusion": [{"a": "1", "b": "1", "c": "1", "N": 1}, {"a": "1", "b": "g", "c": "g", "N": 1},
      {"a": "g", "b": "1", "c": "g", "N": 1}, {"a": "g", "b": "g", "c": "g", "N": 1}]})") == codes::kFusionInvalid);
  {
    nlohmann::json j = nlohmann::json::parse(fib);
    j["F"] = nlohmann::json::array();
    CHECK(error_code(j.dump()) == codes::kFMissing);
  }
}

TEST_CASE("pointed data without F gets the trivial associator") {
  const FusionCategory C = parse_fusion_data(R"({"labels": ["0", "1"], "unit": "0", "dual": {"0": "0", "1": "1"},
      "dims": {"0": "1", "1": "1"}, "fusion": [{"a": "0", "b": "0", "c": "0", "N": 1}, {"a": "0", "b": "1", "c": "1", "N": 1},
      {"a": "1", "b": "0", "c": "1", "N": 1}, {"a": "1", "b": "1", "c": "0", "N": 1}]})");
  CHECK(validate(C).pass(1e-12));
  CHECK(fingerprint(C) == fingerprint(builtin("vec_z2")));
}

TEST_CASE("mutated F-symbols fail validation") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto ms = mutated_categories(builtin(name));
    CHECK(!ms.empty());
    for (const auto& m : ms) CHECK_FALSE(validate(m).pass(1e-9));
  }
}

TEST_CASE("tensor and composition of morphisms") {
  const FusionCategory C = builtin("ising");
  Rng rng(3);
  Morphism f(C, {1}, {1, 1, 1}), g(C, {1, 1}, {2, 1}), h(C, {2}, {2});
  f.set_coefficients(rng.complex_matrix(f.size(), 1));
  g.set_coefficients(rng.complex_matrix(g.size(), 1));
  h.set_coefficients(rng.complex_matrix(h.size(), 1));
  CHECK(max_diff(tensor(tensor(f, g), h), tensor(f, tensor(g, h))) < 1e-12);
  Morphism f2(C, {1, 1, 1}, {1}), g2(C, {2, 1}, {1, 1});
  f2.set_coefficients(rng.complex_matrix(f2.size(), 1));
  g2.set_coefficients(rng.complex_matrix(g2.size(), 1));
  CHECK(max_diff(compose(tensor(f2, g2), tensor(f, g)), tensor(compose(f2, f), compose(g2, g))) < 1e-12);
  CHECK(max_diff(dual_morphism(dual_morphism(g)), g) < 1e-12);
  CHECK(max_diff(dagger(dagger(g)), g) == 0);
}

TEST_CASE("orthonormal bases are orthonormal") {
  for (const auto& name : builtin_names()) {
    const FusionCategory C = builtin(name);
    for (int a = 0; a < C.rank(); ++a)
      for (int b = 0; b < C.rank(); ++b)
        for (int c = 0; c < C.rank(); ++c) {
          const auto B = onb(C, c, {a, b});
          CHECK(static_cast<int>(B.size()) == C.N(a, b, c));
          for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j)
              CHECK(std::abs(compose(B[i].dagger(), B[j]).block(c)(0, 0) - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
  }
}
