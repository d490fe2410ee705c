#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Dense>

namespace entsep {

// Counter-based generator: the n-th output is a pure function of (key, n).
// Independent streams are obtained with split(), so every sampling routine
// can be driven by an explicit seed without sharing mutable state.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Child stream keyed by (this key, stream id); does not advance this stream.
  CounterRng split(std::uint64_t stream) const;

  // Uniform double in [0, 1).
  double uniform();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  CounterRng(std::uint64_t key, int) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Haar-random unit vector in C^dim (normalized complex Gaussian).
Eigen::VectorXcd haar_vector(int dim, CounterRng& rng);

// Standard normal deviate.
double normal_deviate(CounterRng& rng);

}  // namespace entsep
