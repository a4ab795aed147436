#include "center_kit/rng.hpp"

#include <cmath>

namespace ck {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::at(std::uint64_t k) const {
  return mix(seed_ + mix(stream_ + 0x9e3779b97f4a7c15ULL) + (k + 1) * 0x9e3779b97f4a7c15ULL);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

double Rng::normal() {
  // Box-Muller, one value per pair of draws.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cd Rng::complex_normal() {
  const double re = normal();
  return {re, normal()};
}

Mat Rng::complex_matrix(Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
  return m;
}

}  // namespace ck
