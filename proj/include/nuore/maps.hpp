#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nuore/ring.hpp"

namespace nuore {

class AdditiveMap;
using MapPtr = std::shared_ptr<const AdditiveMap>;

// Additive self-maps of a ring. Every kind is additive by construction:
// Table extends Z-linearly from the additive generators, and the other kinds
// are additive term by term. Multiplicativity / the twisted Leibniz rule are
// separate checks with an explicit coverage mode.
class AdditiveMap : public std::enable_shared_from_this<AdditiveMap> {
 public:
  enum class Kind {
    Zero,
    Identity,
    Table,
    Inner,
    FormalDerivative,
    Lifted,
    Restricted,
    Compose,
    Sum
  };

  struct Priv {};
  explicit AdditiveMap(Priv) {}

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const std::string& label() const { return label_; }

  const Element& inner_element() const { return *inner_; }
  const std::vector<Element>& table_images() const { return images_; }
  const MapPtr& lifted_base() const { return part_a_; }
  bool lifted_keeps_scalar() const { return keeps_scalar_; }
  const MapPtr& left_part() const { return part_a_; }   // Compose: outer, Sum: first
  const MapPtr& right_part() const { return part_b_; }  // Compose: inner, Sum: second

  Element apply(const Element& e) const {
    switch (kind_) {
      case Kind::Zero:
        if (!ring_->contains(e)) throw BackendMismatchError("map applied outside its ring");
        return ring_->zero();
      case Kind::Identity:
        if (!ring_->contains(e)) throw BackendMismatchError("map applied outside its ring");
        return e;
      case Kind::Table: {
        auto coords = ring_->coords_of(e);
        Element acc = ring_->zero();
        for (std::size_t i = 0; i < coords.size(); ++i)
          if (coords[i] != 0) acc = ring_->add(acc, ring_->zmul(coords[i], images_[i]));
        return acc;
      }
      case Kind::Inner:
        return ring_->sub_elems(ring_->mul(*inner_, e), ring_->mul(e, *inner_));
      case Kind::FormalDerivative: {
        const auto& base = ring_->poly().base;
        const auto& c = std::get<PolyVal>(e.value).coeffs;
        std::vector<Element> out;
        for (std::size_t i = 1; i < c.size(); ++i)
          out.push_back(base->zmul(Int(i), c[i]));
        return el_poly(ring_, std::move(out));
      }
      case Kind::Lifted: {
        auto [r, n] = pair_parts(e);
        return el_pair(ring_, part_a_->apply(r), keeps_scalar_ ? n : Int(0));
      }
      case Kind::Restricted: {
        if (!ring_->contains(e)) throw BackendMismatchError("map applied outside its ring");
        Element img = part_a_->apply(e);
        img.ring = ring_;
        return img;
      }
      case Kind::Compose:
        return part_a_->apply(part_b_->apply(e));
      default:
        return ring_->add(part_a_->apply(e), part_b_->apply(e));
    }
  }

 private:
  friend MapPtr map_zero(RingPtr);
  friend MapPtr map_identity(RingPtr);
  friend MapPtr map_table(RingPtr, std::vector<Element>);
  friend MapPtr map_inner(RingPtr, Element);
  friend MapPtr map_formal_derivative(RingPtr);
  friend MapPtr map_lifted(RingPtr, MapPtr, bool);
  friend MapPtr map_restricted(RingPtr, MapPtr);
  friend MapPtr map_compose(MapPtr, MapPtr);
  friend MapPtr map_sum(MapPtr, MapPtr);

  Kind kind_ = Kind::Zero;
  RingPtr ring_;
  std::string label_;
  std::optional<Element> inner_;
  std::vector<Element> images_;  // per additive generator
  MapPtr part_a_, part_b_;
  bool keeps_scalar_ = false;
};

inline MapPtr map_zero(RingPtr ring) {
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Zero;
  m->ring_ = std::move(ring);
  m->label_ = "zero";
  return m;
}

inline MapPtr map_identity(RingPtr ring) {
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Identity;
  m->ring_ = std::move(ring);
  m->label_ = "identity";
  return m;
}

// Images are per additive generator, in generator order. Well-definedness on
// Z/d_i summands requires d_i * image_i = 0; anything else is rejected.
inline MapPtr map_table(RingPtr ring, std::vector<Element> images) {
  if (!ring->is_finite() || !ring->coords_span_product())
    throw UnsupportedBackendError("table maps need full additive coordinates");
  const auto& gens = ring->additive_generators();
  if (images.size() != gens.size())
    throw BadDescriptorError("table map needs one image per additive generator");
  const auto& moduli = ring->addgroup_moduli();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!ring->contains(images[i]))
      throw BackendMismatchError("table image outside the ring");
    if (!ring->is_zero(ring->zmul(Int(moduli[i]), images[i])))
      throw BadDescriptorError("table image of g" + std::to_string(i + 1) +
                               " is not killed by the generator's additive order");
  }
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Table;
  m->ring_ = std::move(ring);
  m->images_ = std::move(images);
  m->label_ = "table";
  return m;
}

inline MapPtr map_inner(RingPtr ring, Element a) {
  if (!ring->contains(a)) throw BackendMismatchError("inner element outside the ring");
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Inner;
  m->label_ = "inner[a=" + ring->element_str(a) + "]";
  m->ring_ = std::move(ring);
  m->inner_ = std::move(a);
  return m;
}

inline MapPtr map_formal_derivative(RingPtr ring) {
  if (ring->backend() != Ring::Backend::Poly)
    throw UnsupportedBackendError("the formal derivative needs a polynomial ring");
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::FormalDerivative;
  m->label_ = "d/d" + ring->poly().var;
  m->ring_ = std::move(ring);
  return m;
}

// sigma-lift keeps the adjoined scalar ((r,n) -> (f(r),n)); delta-lift drops
// it ((r,n) -> (f(r),0)).
inline MapPtr map_lifted(RingPtr unitalized_ring, MapPtr base_map, bool keeps_scalar) {
  if (unitalized_ring->backend() != Ring::Backend::Unitalized)
    throw UnsupportedBackendError("lifting needs a unitalization");
  if (base_map->ring() != unitalized_ring->unitalized().base)
    throw BackendMismatchError("lifted map must act on the unitalized base ring");
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Lifted;
  m->ring_ = std::move(unitalized_ring);
  m->label_ = (keeps_scalar ? "lift[" : "lift0[") + base_map->label() + "]";
  m->part_a_ = std::move(base_map);
  m->keeps_scalar_ = keeps_scalar;
  return m;
}

// Restriction of a parent-ring map to a finite subring; the subring must be
// invariant, which is verified on the whole subring carrier.
inline MapPtr map_restricted(RingPtr subring, MapPtr parent_map) {
  if (subring->backend() != Ring::Backend::Subring)
    throw UnsupportedBackendError("restriction needs a subring");
  if (parent_map->ring() != subring->sub().parent)
    throw BackendMismatchError("restricted map must act on the subring's parent");
  for (const auto& c : subring->carrier()) {
    Element up = c;
    up.ring = subring->sub().parent;
    Element img = parent_map->apply(up);
    img.ring = subring;
    if (!subring->contains(img))
      throw BadDescriptorError("subring is not invariant under the map");
  }
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Restricted;
  m->ring_ = std::move(subring);
  m->label_ = "restrict[" + parent_map->label() + "]";
  m->part_a_ = std::move(parent_map);
  return m;
}

inline MapPtr map_compose(MapPtr outer, MapPtr inner) {
  if (outer->ring() != inner->ring())
    throw BackendMismatchError("composed maps must share a ring");
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Compose;
  m->ring_ = outer->ring();
  m->label_ = outer->label() + "." + inner->label();
  m->part_a_ = std::move(outer);
  m->part_b_ = std::move(inner);
  return m;
}

inline MapPtr map_sum(MapPtr a, MapPtr b) {
  if (a->ring() != b->ring()) throw BackendMismatchError("summed maps must share a ring");
  auto m = std::make_shared<AdditiveMap>(AdditiveMap::Priv{});
  m->kind_ = AdditiveMap::Kind::Sum;
  m->ring_ = a->ring();
  m->label_ = "(" + a->label() + "+" + b->label() + ")";
  m->part_a_ = std::move(a);
  m->part_b_ = std::move(b);
  return m;
}

// ---------------------------------------------------------------------------
// behavioural predicates

inline bool acts_as_identity(const MapPtr& m) {
  if (m->kind() == AdditiveMap::Kind::Identity) return true;
  if (m->ring()->is_finite()) {
    for (const auto& g : m->ring()->additive_generators())
      if (!(m->apply(g) == g)) return false;
    return true;
  }
  return false;
}

inline bool acts_as_zero(const MapPtr& m) {
  if (m->kind() == AdditiveMap::Kind::Zero) return true;
  if (m->kind() == AdditiveMap::Kind::Inner)
    return m->ring()->is_zero(m->inner_element()) ||
           (m->ring()->is_finite() && [&] {
             for (const auto& g : m->ring()->additive_generators())
               if (!m->ring()->is_zero(m->apply(g))) return false;
             return true;
           }());
  if (m->ring()->is_finite()) {
    for (const auto& g : m->ring()->additive_generators())
      if (!m->ring()->is_zero(m->apply(g))) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// law checks
//
// Both laws are biadditive in the two arguments once the maps are additive,
// so on finite rings checking all pairs of additive generators is complete.
// On infinite backends the check is structural where an argument applies and
// sampled otherwise; the mode string records which coverage was achieved.

struct MapCheck {
  bool ok = true;
  std::string mode;     // "exhaustive-generators" | "structural" | "sampled"
  std::string witness;  // first failing pair, if any
};

namespace detail {

template <typename Law>
MapCheck check_pairs(const RingPtr& ring, const std::vector<Element>& xs, Law law,
                     std::string mode) {
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (!law(a, b))
        return {false, std::move(mode), "a=" + ring->element_str(a) + " b=" + ring->element_str(b)};
  return {true, std::move(mode), ""};
}

}  // namespace detail

inline MapCheck check_endomorphism(const MapPtr& sigma) {
  const RingPtr& ring = sigma->ring();
  auto law = [&](const Element& a, const Element& b) {
    return sigma->apply(ring->mul(a, b)) == ring->mul(sigma->apply(a), sigma->apply(b));
  };
  if (ring->is_finite())
    return detail::check_pairs(ring, ring->additive_generators(), law,
                               "exhaustive-generators");
  if (sigma->kind() == AdditiveMap::Kind::Identity)
    return {true, "structural", ""};
  if (sigma->kind() == AdditiveMap::Kind::Lifted && sigma->lifted_keeps_scalar()) {
    // (f(r)+n f(s)+m f(r), nm) vs (f(r)f(s)+n f(s)+m f(r), nm): multiplicativity
    // of the lift reduces to multiplicativity of the base map.
    MapCheck base = check_endomorphism(sigma->lifted_base());
    base.mode = "structural via base: " + base.mode;
    return base;
  }
  return detail::check_pairs(ring, canonical_samples(ring), law, "sampled");
}

inline MapCheck check_sigma_derivation(const MapPtr& delta, const MapPtr& sigma) {
  if (delta->ring() != sigma->ring())
    throw BackendMismatchError("derivation and twist must share a ring");
  const RingPtr& ring = delta->ring();
  auto law = [&](const Element& a, const Element& b) {
    Element lhs = delta->apply(ring->mul(a, b));
    Element rhs = ring->add(ring->mul(sigma->apply(a), delta->apply(b)),
                            ring->mul(delta->apply(a), b));
    return lhs == rhs;
  };
  if (ring->is_finite())
    return detail::check_pairs(ring, ring->additive_generators(), law,
                               "exhaustive-generators");
  const bool twist_id = sigma->kind() == AdditiveMap::Kind::Identity;
  if (delta->kind() == AdditiveMap::Kind::Zero && twist_id)
    return {true, "structural", ""};
  if (delta->kind() == AdditiveMap::Kind::Inner && twist_id)
    return {true, "structural", ""};  // a(rs) - (rs)a = r(as-sa) + (ar-ra)s
  if (delta->kind() == AdditiveMap::Kind::FormalDerivative && twist_id &&
      ring->poly().base->flags().commutative.yes()) {
    // Leibniz for d/dy over a commutative coefficient ring; recorded as
    // structural but still confronted with samples below.
    auto sampled = detail::check_pairs(ring, canonical_samples(ring), law, "structural");
    return sampled;
  }
  if (delta->kind() == AdditiveMap::Kind::Lifted && !delta->lifted_keeps_scalar() &&
      sigma->kind() == AdditiveMap::Kind::Lifted && sigma->lifted_keeps_scalar() &&
      ring->unitalized().base->is_finite()) {
    // Both sides are biadditive and Z-linear in each slot, and the pairs
    // (g_i, 0), (0, 1) additively generate the unitalization over Z.
    std::vector<Element> gens;
    for (const auto& g : ring->unitalized().base->additive_generators())
      gens.push_back(el_pair(ring, g, 0));
    gens.push_back(el_pair(ring, ring->unitalized().base->zero(), 1));
    return detail::check_pairs(ring, gens, law, "exhaustive-generators");
  }
  return detail::check_pairs(ring, canonical_samples(ring), law, "sampled");
}

// ---------------------------------------------------------------------------
// kernels

struct KernelView {
  bool whole_ring = false;
  bool enumerated = false;
  std::vector<Element> elements;     // filled when enumerated
  std::vector<Element> idempotents;  // nonzero idempotents known to lie in the kernel
  std::string note;
};

inline KernelView kernel_of(const MapPtr& m) {
  const RingPtr& ring = m->ring();
  KernelView out;
  if (ring->is_finite()) {
    out.enumerated = true;
    for (const auto& e : ring->carrier())
      if (ring->is_zero(m->apply(e))) {
        out.elements.push_back(e);
        if (!ring->is_zero(e) && ring->mul(e, e) == e) out.idempotents.push_back(e);
      }
    out.whole_ring = out.elements.size() == ring->carrier_size();
    out.note = "carrier scan";
    return out;
  }
  if (acts_as_zero(m)) {
    out.whole_ring = true;
    out.note = "zero map: kernel is the whole ring";
    switch (ring->backend()) {
      case Ring::Backend::MInf:
        out.idempotents.push_back(el_unit(ring, 1, 1));
        break;
      case Ring::Backend::Rationals:
      case Ring::Backend::Matrix:
      case Ring::Backend::Unitalized:
        out.idempotents.push_back(*ring->identity());
        break;
      case Ring::Backend::Poly:
        if (ring->identity()) out.idempotents.push_back(*ring->identity());
        break;
      default:
        break;
    }
    return out;
  }
  if (m->kind() == AdditiveMap::Kind::FormalDerivative) {
    const auto& base = ring->poly().base;
    if (base->flags().torsion_free.yes()) {
      out.note =
          "kernel is the degree-0 copy of the coefficient ring (torsion-free "
          "coefficients)";
      if (base->identity()) out.idempotents.push_back(el_poly(ring, {*base->identity()}));
      if (base->backend() == Ring::Backend::MInf)
        out.idempotents.push_back(el_poly(ring, {el_unit(base, 1, 1)}));
    } else {
      out.note = "kernel contains the degree-0 constants with zero derivative";
    }
    return out;
  }
  if (m->kind() == AdditiveMap::Kind::Inner &&
      ring->backend() == Ring::Backend::MInf) {
    // kernel = centralizer of a; the diagonal cover of supp(a) commutes with a
    std::set<I64> idx;
    for (const auto& [key, val] : std::get<MInfVal>(m->inner_element().value).entries) {
      idx.insert(key.first);
      idx.insert(key.second);
    }
    std::vector<std::tuple<I64, I64, Rat>> terms;
    for (I64 i : idx) terms.emplace_back(i, i, Rat(1));
    Element e = el_minf(ring, terms);
    if (ring->is_zero(m->apply(e)))
      out.idempotents.push_back(e);
    out.note = "centralizer of the inner element; not enumerated";
    return out;
  }
  out.note = "kernel not characterized on this backend";
  return out;
}

}  // namespace nuore
