#pragma once

#include <cstdint>
#include <vector>

#include "nuore/ore.hpp"
#include "nuore/ring.hpp"

namespace nuore {

// SplitMix64: tiny, seedable, identical across platforms — reports built from
// it must be byte-stable for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  I64 in_range(I64 lo, I64 hi) {  // inclusive
    return lo + static_cast<I64>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline Element random_element(Rng& rng, const RingPtr& ring) {
  switch (ring->backend()) {
    case Ring::Backend::FiniteTable:
    case Ring::Backend::ZMod:
    case Ring::Backend::Subring:
      return ring->carrier()[rng.below(ring->carrier().size())];
    case Ring::Backend::Rationals: {
      I64 num = rng.in_range(-4, 4);
      I64 den = rng.in_range(1, 4);
      return el_rat(ring, Rat(num, den));
    }
    case Ring::Backend::MInf: {
      std::vector<std::tuple<I64, I64, Rat>> terms;
      const int k = static_cast<int>(rng.below(3));
      for (int t = 0; t < k; ++t) {
        I64 num = rng.in_range(-2, 2);
        if (ring->minf().over_q)
          terms.emplace_back(rng.in_range(1, 4), rng.in_range(1, 4), Rat(num));
        else
          terms.emplace_back(rng.in_range(1, 4), rng.in_range(1, 4),
                             Rat(rng.in_range(0, ring->minf().p - 1)));
      }
      return el_minf(ring, terms);
    }
    case Ring::Backend::Matrix: {
      const auto& d = ring->matrix();
      std::vector<Element> entries;
      for (int i = 0; i < d.size * d.size; ++i)
        entries.push_back(random_element(rng, d.base));
      return el_matrix(ring, std::move(entries));
    }
    case Ring::Backend::Poly: {
      const auto& base = ring->poly().base;
      std::vector<Element> coeffs;
      const int deg = static_cast<int>(rng.below(3));
      for (int i = 0; i <= deg; ++i) coeffs.push_back(random_element(rng, base));
      return el_poly(ring, std::move(coeffs));
    }
    case Ring::Backend::Unitalized: {
      Element base = random_element(rng, ring->unitalized().base);
      return el_pair(ring, base, Int(rng.in_range(-2, 2)));
    }
  }
  return ring->zero();
}

inline OrePoly random_ore_poly(Rng& rng, const OrePtr& ctx, int max_degree) {
  std::vector<Element> coeffs;
  const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
  for (int i = 0; i <= deg; ++i) coeffs.push_back(random_element(rng, ctx->ring));
  return ore_from_coeffs(ctx, std::move(coeffs));
}

}  // namespace nuore
