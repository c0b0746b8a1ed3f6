#pragma once

#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nuore/maps.hpp"
#include "nuore/ring.hpp"

namespace nuore {

// degree of the zero polynomial; smaller than every attainable degree
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// A validated triple (R, sigma, delta). Products use the generic twisted rule
// and switch to the binomial form when sigma acts as the identity.
struct OreContext {
  RingPtr ring;
  MapPtr sigma;
  MapPtr delta;
  bool differential = false;  // sigma acts as the identity
  MapCheck sigma_check;
  MapCheck delta_check;
};
using OrePtr = std::shared_ptr<const OreContext>;

inline OrePtr make_ore_context(RingPtr ring, MapPtr sigma, MapPtr delta) {
  if (sigma->ring() != ring || delta->ring() != ring)
    throw BackendMismatchError("twist and derivation must act on the coefficient ring");
  auto ctx = std::make_shared<OreContext>();
  ctx->ring = std::move(ring);
  ctx->sigma = std::move(sigma);
  ctx->delta = std::move(delta);
  ctx->differential = acts_as_identity(ctx->sigma);
  ctx->sigma_check = check_endomorphism(ctx->sigma);
  if (!ctx->sigma_check.ok)
    throw NotMultiplicativeError("twist fails multiplicativity at " +
                                 ctx->sigma_check.witness);
  ctx->delta_check = check_sigma_derivation(ctx->delta, ctx->sigma);
  if (!ctx->delta_check.ok)
    throw LeibnizError("derivation fails the twisted Leibniz rule at " +
                       ctx->delta_check.witness);
  return ctx;
}

struct OrePoly {
  OrePtr ctx;
  std::vector<Element> coeffs;  // c_0..c_n, no trailing zeros
};

inline int ore_degree(const OrePoly& p) {
  return p.coeffs.empty() ? kNegInfDegree : static_cast<int>(p.coeffs.size()) - 1;
}

inline void ore_trim(OrePoly& p) {
  while (!p.coeffs.empty() && p.ctx->ring->is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

inline OrePoly ore_zero(OrePtr ctx) { return OrePoly{std::move(ctx), {}}; }

inline OrePoly ore_monomial(OrePtr ctx, Element a, int n) {
  if (n < 0) throw BadBoundError("monomial degree must be >= 0");
  OrePoly p{std::move(ctx), {}};
  if (!p.ctx->ring->contains(a))
    throw BackendMismatchError("coefficient outside the context ring");
  if (p.ctx->ring->is_zero(a)) return p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, p.ctx->ring->zero());
  p.coeffs.back() = std::move(a);
  return p;
}

inline OrePoly ore_from_coeffs(OrePtr ctx, std::vector<Element> coeffs) {
  OrePoly p{std::move(ctx), std::move(coeffs)};
  for (const auto& c : p.coeffs)
    if (!p.ctx->ring->contains(c))
      throw BackendMismatchError("coefficient outside the context ring");
  ore_trim(p);
  return p;
}

inline Element ore_coeff(const OrePoly& p, std::size_t i) {
  return i < p.coeffs.size() ? p.coeffs[i] : p.ctx->ring->zero();
}

inline bool ore_equal(const OrePoly& a, const OrePoly& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!(a.coeffs[i] == b.coeffs[i])) return false;
  return true;
}

inline int ore_compare(const OrePoly& a, const OrePoly& b) {
  if (a.coeffs.size() != b.coeffs.size())
    return a.coeffs.size() < b.coeffs.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (int c = compare_elements(a.coeffs[i], b.coeffs[i]); c != 0) return c;
  return 0;
}

inline std::string ore_str(const OrePoly& p) {
  if (p.coeffs.empty()) return p.ctx->ring->element_str(p.ctx->ring->zero());
  std::string s;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) s += " ; ";
    s += p.ctx->ring->element_str(p.coeffs[i]);
  }
  return s;
}

inline OrePoly ore_add(const OrePoly& a, const OrePoly& b) {
  if (a.ctx != b.ctx) throw BackendMismatchError("polynomials from different contexts");
  const auto& ring = a.ctx->ring;
  OrePoly r{a.ctx, {}};
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), ring->zero());
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] = ring->add(ore_coeff(a, i), ore_coeff(b, i));
  ore_trim(r);
  return r;
}

inline OrePoly ore_neg(const OrePoly& a) {
  OrePoly r{a.ctx, {}};
  for (const auto& c : a.coeffs) r.coeffs.push_back(a.ctx->ring->neg(c));
  return r;
}

inline OrePoly ore_sub(const OrePoly& a, const OrePoly& b) {
  return ore_add(a, ore_neg(b));
}

// pi_i^n: sum of all C(n,i) compositions of i copies of sigma and n-i copies
// of delta, via the two-term recursion. Out of range returns the zero map.
inline MapPtr pi_map(int n, int i, const MapPtr& sigma, const MapPtr& delta) {
  if (sigma->ring() != delta->ring())
    throw BackendMismatchError("twist and derivation must share a ring");
  if (n < 0) throw BadBoundError("pi needs n >= 0");
  if (i < 0 || i > n) return map_zero(sigma->ring());
  std::vector<std::vector<MapPtr>> pi(static_cast<std::size_t>(n) + 1);
  pi[0] = {map_identity(sigma->ring())};
  for (int m = 1; m <= n; ++m) {
    pi[m].resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      MapPtr via_sigma =
          k >= 1 ? map_compose(sigma, pi[m - 1][k - 1]) : nullptr;
      MapPtr via_delta =
          k <= m - 1 ? map_compose(delta, pi[m - 1][k]) : nullptr;
      if (via_sigma && via_delta)
        pi[m][k] = map_sum(via_sigma, via_delta);
      else
        pi[m][k] = via_sigma ? via_sigma : via_delta;
    }
  }
  return pi[n][i];
}

namespace detail {

// (a x^n)(b x^m) = sum_i a pi_i^n(b) x^{i+m}; acc accumulates into a dense
// coefficient vector sized in advance by the caller.
inline void ore_mul_monomial_general(const OrePtr& ctx, const Element& a, int n,
                                     const Element& b, int m,
                                     std::vector<Element>& acc,
                                     std::vector<std::vector<MapPtr>>& pi) {
  const auto& ring = ctx->ring;
  for (std::size_t mm = pi.size(); mm <= static_cast<std::size_t>(n); ++mm) {
    pi.emplace_back(mm + 1);
    if (mm == 0) {
      pi[0][0] = map_identity(ring);
      continue;
    }
    for (std::size_t k = 0; k <= mm; ++k) {
      MapPtr via_sigma =
          k >= 1 ? map_compose(ctx->sigma, pi[mm - 1][k - 1]) : nullptr;
      MapPtr via_delta =
          k <= mm - 1 ? map_compose(ctx->delta, pi[mm - 1][k]) : nullptr;
      pi[mm][k] = via_sigma && via_delta ? map_sum(via_sigma, via_delta)
                                         : (via_sigma ? via_sigma : via_delta);
    }
  }
  for (int i = 0; i <= n; ++i) {
    Element term = ring->mul(a, pi[n][i]->apply(b));
    acc[i + m] = ring->add(acc[i + m], term);
  }
}

// differential case: (a x^n)(b x^m) = sum_i C(n,i) a delta^{n-i}(b) x^{i+m}
inline void ore_mul_monomial_differential(const OrePtr& ctx, const Element& a, int n,
                                          const std::vector<Element>& delta_pows_b,
                                          int m, std::vector<Element>& acc) {
  const auto& ring = ctx->ring;
  for (int i = 0; i <= n; ++i) {
    Element term = ring->zmul(binomial(n, i), ring->mul(a, delta_pows_b[n - i]));
    acc[i + m] = ring->add(acc[i + m], term);
  }
}

}  // namespace detail

inline OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
  if (p.ctx != q.ctx) throw BackendMismatchError("polynomials from different contexts");
  const OrePtr& ctx = p.ctx;
  const auto& ring = ctx->ring;
  OrePoly r{ctx, {}};
  if (p.coeffs.empty() || q.coeffs.empty()) return r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, ring->zero());
  const int n_max = static_cast<int>(p.coeffs.size()) - 1;
  if (ctx->differential) {
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
      std::vector<Element> pows{q.coeffs[j]};
      for (int k = 0; k < n_max; ++k) pows.push_back(ctx->delta->apply(pows.back()));
      for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        detail::ore_mul_monomial_differential(ctx, p.coeffs[i], static_cast<int>(i),
                                              pows, static_cast<int>(j), r.coeffs);
    }
  } else {
    std::vector<std::vector<MapPtr>> pi;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs.size(); ++j)
        detail::ore_mul_monomial_general(ctx, p.coeffs[i], static_cast<int>(i),
                                         q.coeffs[j], static_cast<int>(j), r.coeffs,
                                         pi);
  }
  ore_trim(r);
  return r;
}

// ---------------------------------------------------------------------------
// corners

inline void require_corner_idempotent(const OrePtr& ctx, const Element& e) {
  const auto& ring = ctx->ring;
  if (!ring->contains(e)) throw BackendMismatchError("corner element not in ring");
  if (!(ring->mul(e, e) == e)) throw NotIdempotentError("corner element is not idempotent");
  if (ring->is_zero(e)) throw NotIdempotentError("corner element must be nonzero");
  if (!ctx->differential)
    throw PreconditionError("corner operations need the identity twist");
  if (!ring->is_zero(ctx->delta->apply(e)))
    throw DeltaNonzeroError("corner element is not annihilated by the derivation");
}

// e.p.e; with delta(e) = 0 this is the coefficientwise projection c_i -> e c_i e
inline OrePoly corner_project(const Element& e, const OrePoly& p) {
  require_corner_idempotent(p.ctx, e);
  const auto& ring = p.ctx->ring;
  OrePoly r{p.ctx, {}};
  for (const auto& c : p.coeffs) r.coeffs.push_back(ring->mul(ring->mul(e, c), e));
  ore_trim(r);
  return r;
}

// Identification of the corner eSe with (eRe)[x; d], d the restriction of
// delta. For finite rings the corner is a subring and d is restriction (inner
// delta restricts to inner by e a e); for M_inf and a diagonal 0/1 idempotent
// the corner is a full matrix ring over the scalars via index extraction.
struct MInfCornerIso {
  RingPtr minf;
  RingPtr mat;
  std::vector<I64> idx;  // sorted diagonal positions of e

  Element to_corner(const Element& r) const {
    const int k = static_cast<int>(idx.size());
    std::vector<Element> entries(static_cast<std::size_t>(k) * k,
                                 mat->matrix().base->zero());
    for (const auto& [key, val] : std::get<MInfVal>(r.value).entries) {
      auto it_i = std::lower_bound(idx.begin(), idx.end(), key.first);
      auto it_j = std::lower_bound(idx.begin(), idx.end(), key.second);
      if (it_i == idx.end() || *it_i != key.first || it_j == idx.end() ||
          *it_j != key.second)
        throw BackendMismatchError("support leaves the corner block");
      const auto& base = mat->matrix().base;
      Element v = base->backend() == Ring::Backend::Rationals
                      ? el_rat(base, val)
                      : el_zmod(base, static_cast<I64>(boost::multiprecision::numerator(val)));
      entries[(it_i - idx.begin()) * k + (it_j - idx.begin())] = v;
    }
    return el_matrix(mat, std::move(entries));
  }

  Element to_minf(const Element& m) const {
    const int k = static_cast<int>(idx.size());
    const auto& base = mat->matrix().base;
    std::vector<std::tuple<I64, I64, Rat>> terms;
    const auto& entries = std::get<MatrixVal>(m.value).entries;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const Element& v = entries[i * k + j];
        if (base->is_zero(v)) continue;
        Rat q = base->backend() == Ring::Backend::Rationals
                    ? std::get<Rat>(v.value)
                    : Rat(std::get<I64>(v.value));
        terms.emplace_back(idx[i], idx[j], q);
      }
    return el_minf(minf, terms);
  }
};

inline MInfCornerIso make_minf_corner_iso(const RingPtr& ring, const Element& e) {
  MInfCornerIso iso;
  iso.minf = ring;
  for (const auto& [key, val] : std::get<MInfVal>(e.value).entries) {
    if (key.first != key.second || val != 1)
      throw UnsupportedBackendError(
          "M_inf corners are provided for sums of diagonal matrix units");
    iso.idx.push_back(key.first);
  }
  iso.mat = corner_ring(ring, e);
  return iso;
}

struct CornerContext {
  RingPtr corner;
  OrePtr ctx;                         // Ore context on the corner ring
  std::optional<MInfCornerIso> iso;   // set for the M_inf route
  Element to_corner(const Element& r) const {
    if (iso) return iso->to_corner(r);
    Element c = r;
    c.ring = corner;
    if (!corner->contains(c)) throw BackendMismatchError("element not in the corner");
    return c;
  }
  OrePoly project_poly(const OrePoly& p) const {
    std::vector<Element> cs;
    for (const auto& c : p.coeffs) cs.push_back(to_corner(c));
    return ore_from_coeffs(ctx, std::move(cs));
  }
};

inline CornerContext corner_ore_context(const OrePtr& ctx, const Element& e) {
  require_corner_idempotent(ctx, e);
  const auto& ring = ctx->ring;
  CornerContext out;
  if (ring->identity() && e == *ring->identity() &&
      ring->backend() != Ring::Backend::FiniteTable &&
      ring->backend() != Ring::Backend::ZMod && !ring->parent_ring()) {
    out.corner = ring;
    out.ctx = ctx;
    return out;
  }
  switch (ring->backend()) {
    case Ring::Backend::FiniteTable:
    case Ring::Backend::ZMod:
    case Ring::Backend::Subring:
    case Ring::Backend::Matrix: {
      out.corner = corner_ring(ring, e);
      MapPtr d;
      if (ctx->delta->kind() == AdditiveMap::Kind::Inner) {
        Element a = ctx->delta->inner_element();
        Element eae = ring->mul(ring->mul(e, a), e);
        eae.ring = out.corner;
        d = map_inner(out.corner, eae);
      } else if (acts_as_zero(ctx->delta)) {
        d = map_zero(out.corner);
      } else {
        d = map_restricted(out.corner, ctx->delta);
      }
      out.ctx = make_ore_context(out.corner, map_identity(out.corner), d);
      return out;
    }
    case Ring::Backend::MInf: {
      out.iso = make_minf_corner_iso(ring, e);
      out.corner = out.iso->mat;
      MapPtr d;
      if (ctx->delta->kind() == AdditiveMap::Kind::Inner) {
        Element a = ctx->delta->inner_element();
        Element eae = ring->mul(ring->mul(e, a), e);
        d = map_inner(out.corner, out.iso->to_corner(eae));
      } else if (acts_as_zero(ctx->delta)) {
        d = map_zero(out.corner);
      } else {
        throw UnsupportedBackendError(
            "M_inf corner contexts are provided for inner and zero derivations");
      }
      out.ctx = make_ore_context(out.corner, map_identity(out.corner), d);
      return out;
    }
    case Ring::Backend::Poly: {
      if (ctx->delta->kind() != AdditiveMap::Kind::FormalDerivative)
        throw UnsupportedBackendError(
            "polynomial corner contexts are provided for the formal derivative");
      out.corner = corner_ring(ring, e);
      out.ctx = make_ore_context(out.corner, map_identity(out.corner),
                                 map_formal_derivative(out.corner));
      return out;
    }
    default:
      throw UnsupportedBackendError("corner context not supported on this backend");
  }
}

struct CornerIsoReport {
  bool pass = true;
  std::string witness;
  std::string note;
};

// Verifies on sample pairs that projecting then multiplying in (eRe)[x;d]
// matches multiplying in S then projecting; for M_inf with an inner
// derivation additionally checks that the restricted derivation is inner by
// the projected element.
inline CornerIsoReport corner_iso_check(const Element& e,
                                        const std::vector<std::pair<OrePoly, OrePoly>>& samples) {
  CornerIsoReport rep;
  if (samples.empty()) {
    rep.note = "no samples";
    return rep;
  }
  const OrePtr& ctx = samples.front().first.ctx;
  CornerContext cc = corner_ore_context(ctx, e);
  rep.note = "corner " + cc.corner->describe();
  for (const auto& [p, q] : samples) {
    OrePoly ep = corner_project(e, p);
    OrePoly eq = corner_project(e, q);
    OrePoly in_s = corner_project(e, ore_mul(ep, eq));
    OrePoly lhs = cc.project_poly(in_s);
    OrePoly rhs = ore_mul(cc.project_poly(ep), cc.project_poly(eq));
    if (!ore_equal(lhs, rhs)) {
      rep.pass = false;
      rep.witness = "p = " + ore_str(p) + " ; q = " + ore_str(q);
      return rep;
    }
  }
  if (cc.iso && ctx->delta->kind() == AdditiveMap::Kind::Inner) {
    const auto& ring = ctx->ring;
    Element a = ctx->delta->inner_element();
    Element eae = ring->mul(ring->mul(e, a), e);
    for (const auto& r : canonical_samples(cc.corner)) {
      Element expect = cc.corner->sub_elems(cc.corner->mul(cc.iso->to_corner(eae), r),
                                            cc.corner->mul(r, cc.iso->to_corner(eae)));
      Element up = cc.iso->to_minf(r);
      Element got = cc.iso->to_corner(ctx->delta->apply(ring->mul(ring->mul(e, up), e)));
      if (!(expect == got)) {
        rep.pass = false;
        rep.witness = "restricted derivation differs from inner[e a e] at " +
                      cc.corner->element_str(r);
        return rep;
      }
    }
    rep.note += "; restricted derivation = inner[e a e]";
  }
  return rep;
}

}  // namespace nuore
