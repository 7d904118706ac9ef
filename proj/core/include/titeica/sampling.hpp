#pragma once

// Seeded generators for random-jet batteries. A seed fully determines every
// sample drawn from a JetSampler.

#include <cmath>
#include <array>
#include <cstdint>
#include <random>

#include "titeica/jets.hpp"

namespace titeica {

class JetSampler {
 public:
  explicit JetSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  /// Arbitrary jet: entries uniform in [-scale, scale], base point in [-2, 2]^2.
  Jet2 jet(int order, double scale = 1.0) {
    Jet2 j = Jet2::zero({uniform(-2, 2), uniform(-2, 2)}, order);
    for (int s = 0; s < Jet2::kSize; ++s)
      if (Jet2::degree_of(s) <= order) j.set(Jet2::multi_index(s), uniform(-scale, scale));
    return j;
  }

  /// Arbitrary jet whose value lies in [lo, hi].
  Jet2 positive_jet(int order, double lo = 0.2, double hi = 3.0) {
    Jet2 j = jet(order);
    j.set({0, 0}, uniform(lo, hi));
    return j;
  }

  /// Uniform point strictly inside a bounded box, kept `margin` (relative
  /// to the box width) away from its edges.
  std::array<double, 2> point(const Box<2>& box, double margin = 0.01) {
    std::array<double, 2> p;
    for (int k = 0; k < 2; ++k) {
      const double w = box.hi[k] - box.lo[k];
      if (!std::isfinite(w)) throw InvalidArgument("JetSampler::point: unbounded box");
      p[k] = uniform(box.lo[k] + margin * w, box.hi[k] - margin * w);
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace titeica
