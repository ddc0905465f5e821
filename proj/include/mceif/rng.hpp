#pragma once

#include <cstdint>
#include <random>

namespace mceif {

/// Seeded random stream. Identical seeds give identical draw sequences,
/// so any computation keyed on (phi, seed, n) is reproducible bit for bit
/// within one build. Streams are not thread-safe; split per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double normal() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }

  bool bernoulli(double prob) { return uniform() < prob; }

  double gamma(double shape) {
    std::gamma_distribution<double> g(shape, 1.0);
    return g(gen_);
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  /// Derived independent-looking stream for sub-tasks (replicates, solve
  /// stages). splitmix64 over (seed, stream) so nearby seeds do not collide.
  Rng split(std::uint64_t stream) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace mceif
