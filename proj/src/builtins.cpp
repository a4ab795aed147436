#include <cmath>

#include "center_kit/fusion_category.hpp"

namespace ck {

FusionCategory vec_z(int n) {
  std::vector<std::string> labels;
  std::vector<int> dual(n);
  std::vector<int> fusion(n * n * n, 0);
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    dual[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) fusion[(a * n + b) * n + (a + b) % n] = 1;
  }
  return FusionCategory("vec_z" + std::to_string(n), labels, 0, dual, std::vector<double>(n, 1.0), fusion, {});
}

FusionCategory fibonacci() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<int> fusion(8, 0);
  auto set = [&](int a, int b, int c) { fusion[(a * 2 + b) * 2 + c] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 0, 1);
  set(1, 1, 0);
  set(1, 1, 1);
  std::map<FKey, Mat> F;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) F[{a, b, c, d}] = Mat::Identity(1, 1);
  Mat f(2, 2);
  f << 1.0 / phi, 1.0 / std::sqrt(phi), 1.0 / std::sqrt(phi), -1.0 / phi;
  F[{1, 1, 1, 1}] = f;
  return FusionCategory("fib", {"1", "tau"}, 0, {0, 1}, {1.0, phi}, fusion, F);
}

FusionCategory ising() {
  const double r2 = std::sqrt(2.0);
  std::vector<int> fusion(27, 0);
  auto set = [&](int a, int b, int c) { fusion[(a * 3 + b) * 3 + c] = 1; };
  // 0 = 1, 1 = sigma, 2 = psi
  for (int a = 0; a < 3; ++a) {
    set(0, a, a);
    if (a) set(a, 0, a);
  }
  set(1, 1, 0);
  set(1, 1, 2);
  set(1, 2, 1);
  set(2, 1, 1);
  set(2, 2, 0);
  std::map<FKey, Mat> F;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) F[{a, b, c, d}] = Mat::Identity(1, 1);
  Mat f(2, 2);
  f << 1 / r2, 1 / r2, 1 / r2, -1 / r2;
  F[{1, 1, 1, 1}] = f;
  F[{1, 2, 1, 2}] = -Mat::Identity(1, 1);
  F[{2, 1, 2, 1}] = -Mat::Identity(1, 1);
  return FusionCategory("ising", {"1", "sigma", "psi"}, 0, {0, 1, 2}, {1.0, r2, 1.0}, fusion, F);
}

FusionCategory builtin(const std::string& name) {
  if (name == "vec_z2") return vec_z(2);
  if (name == "vec_z3") return vec_z(3);
  if (name == "fib") return fibonacci();
  if (name == "ising") return ising();
  throw Error(codes::kUsage, "unknown built-in category '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"vec_z2", "vec_z3", "fib", "ising"}; }

}  // namespace ck
