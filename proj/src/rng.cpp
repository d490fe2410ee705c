#include "entsep/rng.hpp"

#include <boost/random/normal_distribution.hpp>

namespace entsep {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(mix(key_ ^ mix(stream + 0x3c6ef372fe94f82bULL)), 0);
}

double CounterRng::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double normal_deviate(CounterRng& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

Eigen::VectorXcd haar_vector(int dim, CounterRng& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = {re, im};
  }
  return v / v.norm();
}

}  // namespace entsep
