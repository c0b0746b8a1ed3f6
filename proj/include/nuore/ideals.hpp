#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nuore/maps.hpp"
#include "nuore/ore.hpp"
#include "nuore/ring.hpp"
#include "nuore/subgroup.hpp"

namespace nuore {

struct Ideal {
  RingPtr ring;
  Sidedness sided = Sidedness::TwoSided;
  std::vector<Element> generators;
  std::vector<Element> elements;  // sorted canonically

  bool contains(const Element& e) const {
    return std::binary_search(elements.begin(), elements.end(), e, ElementLess{});
  }
  bool is_zero_ideal() const { return elements.size() == 1; }
  bool is_whole_ring() const { return elements.size() == ring->carrier_size(); }
};

inline Ideal ideal_closure(const RingPtr& ring, const std::vector<Element>& gens,
                           Sidedness sided = Sidedness::TwoSided) {
  Ideal out{ring, sided, gens, {}};
  for (const auto& g : gens)
    if (!ring->contains(g)) throw BackendMismatchError("generator outside the ring");
  AbelianSubgroup s = ideal_closure_subgroup(*ring, gens, sided);
  for (const auto& v : s.enumerate()) out.elements.push_back(ring->element_from_coords(v));
  std::sort(out.elements.begin(), out.elements.end(), ElementLess{});
  return out;
}

// All two-sided ideals: principal closures, then pairwise joins to a fixed
// point. Complete: every ideal is the join of the principal ideals of its
// members.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
  if (ring->carrier_size() > 4096)
    throw TooLargeError("ideal enumeration is capped at 4096 elements");
  std::set<std::vector<Element>, bool (*)(const std::vector<Element>&,
                                          const std::vector<Element>&)>
      seen(+[](const std::vector<Element>& a, const std::vector<Element>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
          if (int c = compare_elements(a[i], b[i]); c != 0) return c < 0;
        return false;
      });
  std::vector<Ideal> found;
  auto add = [&](Ideal id) {
    if (seen.insert(id.elements).second) found.push_back(std::move(id));
  };
  for (const auto& r : ring->carrier()) add(ideal_closure(ring, {r}));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n && !changed; ++i)
      for (std::size_t j = i + 1; j < n && !changed; ++j) {
        std::vector<Element> gens = found[i].generators;
        gens.insert(gens.end(), found[j].generators.begin(), found[j].generators.end());
        Ideal joined = ideal_closure(ring, gens);
        if (!seen.count(joined.elements)) {
          add(std::move(joined));
          changed = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    for (std::size_t i = 0; i < a.elements.size(); ++i)
      if (int c = compare_elements(a.elements[i], b.elements[i]); c != 0) return c < 0;
    return false;
  });
  return found;
}

struct DeltaSimpleResult {
  bool delta_simple = false;
  std::optional<Ideal> witness;  // first invariant proper nonzero ideal
  std::size_t ideals_checked = 0;
  std::string note;
};

// yes iff no ideal outside {0, R} satisfies sigma(J) in J and delta(J) in J
inline DeltaSimpleResult is_delta_simple(const RingPtr& ring, const MapPtr& sigma,
                                         const MapPtr& delta) {
  if (sigma->ring() != ring || delta->ring() != ring)
    throw BackendMismatchError("maps must act on the inspected ring");
  DeltaSimpleResult out;
  auto ideals = enumerate_ideals(ring);
  out.ideals_checked = ideals.size();
  for (const auto& id : ideals) {
    if (id.is_zero_ideal() || id.is_whole_ring()) continue;
    bool invariant = true;
    for (const auto& r : id.elements)
      if (!id.contains(sigma->apply(r)) || !id.contains(delta->apply(r))) {
        invariant = false;
        break;
      }
    if (invariant) {
      out.witness = id;
      out.note = "invariant proper nonzero ideal of " + std::to_string(id.elements.size()) +
                 " elements";
      return out;
    }
  }
  out.delta_simple = true;
  out.note = "no proper nonzero ideal is invariant (" +
             std::to_string(out.ideals_checked) + " ideals checked)";
  return out;
}

// ---------------------------------------------------------------------------
// degree-truncated closures in S = R[x;delta]
//
// Polynomials of degree <= D are stored as stacked coordinate blocks in
// DESCENDING degree order (block t holds the coefficient of x^{D-t}), so the
// column-Hermite "vanishing prefix" property yields exactly the members of
// degree <= n, and H_n is the projection of that subgroup onto block D-n.

class TruncatedSIdeal {
 public:
  TruncatedSIdeal(OrePtr ctx, int bound, std::vector<OrePoly> gens,
                  AbelianSubgroup group)
      : ctx_(std::move(ctx)),
        bound_(bound),
        generators_(std::move(gens)),
        group_(std::move(group)) {}

  const OrePtr& ctx() const { return ctx_; }
  int bound() const { return bound_; }
  const std::vector<OrePoly>& generators() const { return generators_; }
  Int size() const { return group_.order(); }

  std::vector<I64> poly_coords(const OrePoly& p) const {
    const auto& ring = ctx_->ring;
    const std::size_t k = ring->addgroup_moduli().size();
    std::vector<I64> out;
    out.reserve(k * (bound_ + 1));
    for (int t = 0; t <= bound_; ++t) {
      auto c = ring->coords_of(ore_coeff(p, static_cast<std::size_t>(bound_ - t)));
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

  OrePoly poly_from_coords(const std::vector<I64>& v) const {
    const auto& ring = ctx_->ring;
    const std::size_t k = ring->addgroup_moduli().size();
    std::vector<Element> coeffs(static_cast<std::size_t>(bound_) + 1, ring->zero());
    for (int t = 0; t <= bound_; ++t)
      coeffs[static_cast<std::size_t>(bound_ - t)] = ring->element_from_coords(
          std::vector<I64>(v.begin() + t * k, v.begin() + (t + 1) * k));
    return ore_from_coeffs(ctx_, std::move(coeffs));
  }

  bool contains(const OrePoly& p) const {
    if (ore_degree(p) > bound_) return false;
    return group_.contains(poly_coords(p));
  }

  std::vector<OrePoly> basis() const {
    std::vector<OrePoly> out;
    for (const auto& col : group_.generator_columns()) out.push_back(poly_from_coords(col));
    return out;
  }

  // H_n: every degree-n leading coefficient of a member of degree <= n.
  std::vector<Element> h_set(int n) const {
    if (n < 0 || n > bound_) throw BadBoundError("H_n index outside [0, bound]");
    const auto& ring = ctx_->ring;
    const std::size_t k = ring->addgroup_moduli().size();
    const std::size_t t = static_cast<std::size_t>(bound_ - n);
    AbelianSubgroup proj(ring->addgroup_moduli());
    for (const auto& col : group_.generators_vanishing_before(t * k))
      proj.insert(std::vector<I64>(col.begin() + t * k, col.begin() + (t + 1) * k));
    std::vector<Element> out;
    for (const auto& v : proj.enumerate()) out.push_back(ring->element_from_coords(v));
    std::sort(out.begin(), out.end(), ElementLess{});
    return out;
  }

 private:
  OrePtr ctx_;
  int bound_;
  std::vector<OrePoly> generators_;
  AbelianSubgroup group_;
};

namespace detail {

// Inserts op(q) for every member q of the group (not only basis columns)
// whose product keeps degree <= D. Products of basis columns that stay low
// are inserted directly; cancellations across combinations are caught by the
// integer kernel of the overflowing coefficient blocks.
template <typename Op>
bool saturate_operator(const OrePtr& ctx, AbelianSubgroup& s, int bound, int shift,
                       Op op) {
  const auto& ring = ctx->ring;
  const std::size_t k = ring->addgroup_moduli().size();
  auto cols = s.generator_columns();
  if (cols.empty()) return false;

  // helper reused by both paths
  auto col_to_poly = [&](const std::vector<I64>& v) {
    std::vector<Element> coeffs(static_cast<std::size_t>(bound) + 1, ring->zero());
    for (int t = 0; t <= bound; ++t)
      coeffs[static_cast<std::size_t>(bound - t)] = ring->element_from_coords(
          std::vector<I64>(v.begin() + t * k, v.begin() + (t + 1) * k));
    return ore_from_coeffs(ctx, std::move(coeffs));
  };
  auto poly_to_col = [&](const OrePoly& p) {
    std::vector<I64> out;
    for (int t = 0; t <= bound; ++t) {
      auto c = ring->coords_of(ore_coeff(p, static_cast<std::size_t>(bound - t)));
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  };

  bool grew = false;
  std::vector<OrePoly> images;
  images.reserve(cols.size());
  for (const auto& col : cols) images.push_back(op(col_to_poly(col)));

  if (shift == 0) {
    for (const auto& img : images) grew |= s.insert(poly_to_col(img));
    return grew;
  }

  // Overflow blocks: coefficients of degrees bound+1 .. bound+shift. A
  // combination sum_i l_i * B_i may be applied iff those blocks of
  // sum_i l_i * op(B_i) vanish; the kernel lattice enumerates exactly these.
  const std::size_t rows = static_cast<std::size_t>(shift) * k;
  const std::size_t b = images.size();
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(b + rows, 0));
  for (std::size_t i = 0; i < b; ++i) {
    for (int d = 0; d < shift; ++d) {
      auto c = ring->coords_of(
          ore_coeff(images[i], static_cast<std::size_t>(bound + shift - d)));
      for (std::size_t l = 0; l < k; ++l) m[d * k + l][i] = c[l];
    }
  }
  const auto& moduli = ring->addgroup_moduli();
  for (std::size_t r = 0; r < rows; ++r) m[r][b + r] = moduli[r % k];
  for (const auto& lambda : integer_kernel(m, b + rows)) {
    bool trivial = true;
    for (std::size_t i = 0; i < b && trivial; ++i) trivial = lambda[i] % Int(ring->additive_exponent()) == 0;
    if (trivial) continue;
    OrePoly comb = ore_zero(ctx);
    for (std::size_t i = 0; i < b; ++i) {
      if (lambda[i] == 0) continue;
      OrePoly scaled = col_to_poly(cols[i]);
      for (auto& c : scaled.coeffs) c = ring->zmul(lambda[i], c);
      ore_trim(scaled);
      comb = ore_add(comb, scaled);
    }
    OrePoly img = op(comb);
    if (ore_degree(img) > bound)
      throw Error("internal: kernel combination still overflows the bound");
    grew |= s.insert(poly_to_col(img));
  }
  return grew;
}

}  // namespace detail

inline TruncatedSIdeal truncated_s_closure(const OrePtr& ctx,
                                           const std::vector<OrePoly>& gens, int D) {
  const auto& ring = ctx->ring;
  if (!ring->is_finite()) throw InfiniteRingError("truncated closures need a finite ring");
  if (!ctx->differential)
    throw PreconditionError("truncated closures need the identity twist");
  if (!ring->flags().s_unital.yes())
    throw PreconditionError("truncated closures assume a proven s-unital ring: " +
                            ring->flags().s_unital.why);
  if (D < 0) throw BadBoundError("bound must be >= 0");
  for (const auto& g : gens) {
    if (g.ctx != ctx) throw BackendMismatchError("generator from a different context");
    if (ore_degree(g) > D)
      throw BadBoundError("bound is below a generator degree");
  }

  const std::size_t k = ring->addgroup_moduli().size();
  std::vector<I64> stacked;
  for (int t = 0; t <= D; ++t) {
    const auto& m = ring->addgroup_moduli();
    stacked.insert(stacked.end(), m.begin(), m.end());
  }
  (void)k;
  AbelianSubgroup s(stacked);

  TruncatedSIdeal shape(ctx, D, gens, s);  // for poly_coords only
  for (const auto& g : gens) s.insert(shape.poly_coords(g));

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : ring->additive_generators()) {
      for (int j = 0; j <= D; ++j) {
        OrePoly mono = ore_monomial(ctx, r, j);
        changed |= detail::saturate_operator(
            ctx, s, D, j, [&](const OrePoly& p) { return ore_mul(mono, p); });
        changed |= detail::saturate_operator(
            ctx, s, D, j, [&](const OrePoly& p) { return ore_mul(p, mono); });
      }
    }
  }
  return TruncatedSIdeal(ctx, D, gens, std::move(s));
}

}  // namespace nuore
