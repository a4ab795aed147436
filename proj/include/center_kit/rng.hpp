#pragma once

#include <cstdint>

#include "center_kit/linalg.hpp"

namespace ck {

// Counter-based generator: draw k of stream (seed, stream) is splitmix64 of a keyed counter,
// so any draw can be reproduced without replaying the ones before it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}
  std::uint64_t at(std::uint64_t k) const;
  std::uint64_t next() { return at(counter_++); }
  double uniform();  // [0, 1)
  int below(int n);  // [0, n)
  double normal();
  cd complex_normal();
  Mat complex_matrix(Eigen::Index rows, Eigen::Index cols);
  Rng fork(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x100000001b3ULL + stream + 1); }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_, stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace ck
