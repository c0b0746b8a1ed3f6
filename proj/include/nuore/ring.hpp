#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nuore/element.hpp"
#include "nuore/errors.hpp"
#include "nuore/flags.hpp"
#include "nuore/numeric.hpp"
#include "nuore/subgroup.hpp"

namespace nuore {

enum class Sidedness { Left, Right, TwoSided };

class Ring;
RingPtr make_finite_table(std::vector<I64> orders,
                          std::vector<std::vector<std::vector<I64>>> table);
RingPtr make_zmod(I64 n);
RingPtr make_rationals();
RingPtr make_matrix(RingPtr base, int size);
RingPtr make_minf_q();
RingPtr make_minf_fp(I64 p);
RingPtr make_poly(RingPtr base, std::string var);
RingPtr unitalize(const RingPtr& base);
RingPtr corner_ring(const RingPtr& ring, const Element& e);
namespace detail {
RingPtr make_minf(bool over_q, I64 p);
}

// Rings are immutable and shared. Elements carry the ring that produced them;
// subring elements reuse the parent's value representation, so arithmetic
// always dispatches through arith_root().
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Backend {
    FiniteTable,
    ZMod,
    Rationals,
    Matrix,
    MInf,
    Poly,
    Subring,
    Unitalized
  };

  struct FiniteTableData {
    std::vector<I64> orders;                          // additive orders, each >= 2
    std::vector<std::vector<std::vector<I64>>> table; // table[i][j] = coords of g_i*g_j
  };
  struct ZModData {
    I64 n;
  };
  struct RationalsData {};
  struct MatrixData {
    RingPtr base;  // commutative and unital
    int size;
  };
  struct MInfData {
    bool over_q;
    I64 p;  // prime when !over_q
  };
  struct PolyData {
    RingPtr base;
    std::string var;
  };
  struct SubringData {
    RingPtr parent;
    std::vector<Element> carrier;  // sorted, tagged with the subring itself
    Element identity_elem;
  };
  struct UnitalizedData {
    RingPtr base;
  };

  struct Priv {};  // construction is via the factory functions above
  explicit Ring(Priv) {}

  Backend backend() const { return backend_; }
  const RingFlags& flags() const { return flags_; }
  const std::string& describe() const { return name_; }
  bool is_finite() const { return finite_; }

  const std::vector<Element>& carrier() const {
    if (!finite_) throw InfiniteRingError("infinite ring: " + name_);
    return carrier_;
  }
  std::size_t carrier_size() const { return carrier().size(); }

  const std::vector<Element>& additive_generators() const {
    if (!finite_)
      throw InfiniteRingError("no finite additive generating set: " + name_);
    return addgens_;
  }

  const std::vector<I64>& addgroup_moduli() const {
    if (!finite_) throw InfiniteRingError("no additive coordinates: " + name_);
    return moduli_;
  }
  // True when coords_of / element_from_coords biject the additive group with
  // the full product over addgroup_moduli(); proper subrings in particular
  // only cover a subgroup of their parent's coordinate space.
  bool coords_span_product() const {
    switch (backend_) {
      case Backend::FiniteTable:
      case Backend::ZMod:
        return true;
      case Backend::Matrix:
        return finite_ && matrix().base->coords_span_product();
      default:
        return false;
    }
  }
  I64 additive_exponent() const {
    if (!finite_) throw InfiniteRingError("no additive exponent: " + name_);
    return exponent_;
  }

  const Ring* arith_root() const {
    return backend_ == Backend::Subring ? sub().parent->arith_root() : this;
  }
  RingPtr parent_ring() const {
    return backend_ == Backend::Subring ? sub().parent : nullptr;
  }

  const FiniteTableData& finite_table() const { return std::get<FiniteTableData>(data_); }
  const ZModData& zmod() const { return std::get<ZModData>(data_); }
  const MatrixData& matrix() const { return std::get<MatrixData>(data_); }
  const MInfData& minf() const { return std::get<MInfData>(data_); }
  const PolyData& poly() const { return std::get<PolyData>(data_); }
  const SubringData& sub() const { return std::get<SubringData>(data_); }
  const UnitalizedData& unitalized() const { return std::get<UnitalizedData>(data_); }

  Element zero() const;
  const std::optional<Element>& identity() const { return identity_; }

  bool contains(const Element& e) const;
  Element add(const Element& a, const Element& b) const;
  Element sub_elems(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element zmul(const Int& k, const Element& a) const;
  bool is_zero(const Element& a) const { return compare_elements(a, zero()) == 0; }

  std::vector<I64> coords_of(const Element& e) const;
  Element element_from_coords(const std::vector<I64>& coords) const;

  std::string element_str(const Element& e) const;

  Element tag(Value v) const { return Element{shared_from_this(), std::move(v)}; }

 private:
  friend RingPtr make_finite_table(std::vector<I64>,
                                   std::vector<std::vector<std::vector<I64>>>);
  friend RingPtr make_zmod(I64);
  friend RingPtr make_rationals();
  friend RingPtr make_matrix(RingPtr, int);
  friend RingPtr make_minf_q();
  friend RingPtr make_minf_fp(I64);
  friend RingPtr make_poly(RingPtr, std::string);
  friend RingPtr unitalize(const RingPtr&);
  friend RingPtr corner_ring(const RingPtr&, const Element&);
  friend RingPtr detail::make_minf(bool, I64);

  void check_same(const Element& x) const {
    if (!x.ring || x.ring->arith_root() != arith_root())
      throw BackendMismatchError("element does not belong to " + name_);
  }

  Element retag(Element e) const {
    e.ring = shared_from_this();
    return e;
  }

  Rat scalar_reduce(const Rat& q) const {
    const auto& d = minf();
    if (d.over_q) return q;
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    if (den != 1)
      throw BadDescriptorError("F_p scalar with non-trivial denominator");
    Int r = num % d.p;
    if (r < 0) r += d.p;
    return Rat(r);
  }

  void init_carrier_and_flags();
  void compute_finite_flags();
  std::size_t count_two_sided_ideals() const;

  static constexpr std::size_t kCarrierCap = 1 << 16;

  Backend backend_ = Backend::ZMod;
  std::variant<FiniteTableData, ZModData, RationalsData, MatrixData, MInfData,
               PolyData, SubringData, UnitalizedData>
      data_;
  RingFlags flags_;
  std::string name_;
  bool finite_ = false;
  std::vector<Element> carrier_;
  std::vector<Element> addgens_;
  std::vector<I64> moduli_;
  I64 exponent_ = 1;
  std::optional<Element> identity_;
};

// ---------------------------------------------------------------------------
// arithmetic

inline Element Ring::zero() const {
  switch (backend_) {
    case Backend::FiniteTable:
      return tag(std::vector<I64>(finite_table().orders.size(), 0));
    case Backend::ZMod:
      return tag(I64{0});
    case Backend::Rationals:
      return tag(Rat(0));
    case Backend::Matrix: {
      MatrixVal m;
      const auto& d = matrix();
      Element bz = d.base->zero();
      m.entries.assign(static_cast<std::size_t>(d.size) * d.size, bz);
      return tag(std::move(m));
    }
    case Backend::MInf:
      return tag(MInfVal{});
    case Backend::Poly:
      return tag(PolyVal{});
    case Backend::Subring:
      return retag(sub().parent->zero());
    default: {
      UnitalizedVal v;
      v.base.push_back(unitalized().base->zero());
      v.scalar = 0;
      return tag(std::move(v));
    }
  }
}

inline bool Ring::contains(const Element& e) const {
  if (!e.ring || e.ring->arith_root() != arith_root()) return false;
  if (backend_ == Backend::Subring) {
    const auto& c = sub().carrier;
    return std::binary_search(c.begin(), c.end(), e, ElementLess{});
  }
  return true;
}

inline Element Ring::add(const Element& a, const Element& b) const {
  if (backend_ == Backend::Subring) return retag(sub().parent->add(a, b));
  check_same(a);
  check_same(b);
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& orders = finite_table().orders;
      const auto& x = std::get<std::vector<I64>>(a.value);
      const auto& y = std::get<std::vector<I64>>(b.value);
      std::vector<I64> r(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i)
        r[i] = mod_reduce(x[i] + y[i], orders[i]);
      return tag(std::move(r));
    }
    case Backend::ZMod:
      return tag(mod_reduce(std::get<I64>(a.value) + std::get<I64>(b.value), zmod().n));
    case Backend::Rationals:
      return tag(Rat(std::get<Rat>(a.value) + std::get<Rat>(b.value)));
    case Backend::Matrix: {
      const auto& d = matrix();
      const auto& x = std::get<MatrixVal>(a.value).entries;
      const auto& y = std::get<MatrixVal>(b.value).entries;
      MatrixVal r;
      r.entries.reserve(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        r.entries.push_back(d.base->add(x[i], y[i]));
      return tag(std::move(r));
    }
    case Backend::MInf: {
      MInfVal r = std::get<MInfVal>(a.value);
      for (const auto& [key, val] : std::get<MInfVal>(b.value).entries) {
        Rat s = scalar_reduce(r.entries.count(key) ? Rat(r.entries[key] + val) : val);
        if (s == 0)
          r.entries.erase(key);
        else
          r.entries[key] = s;
      }
      return tag(std::move(r));
    }
    case Backend::Poly: {
      const auto& d = poly();
      const auto& x = std::get<PolyVal>(a.value).coeffs;
      const auto& y = std::get<PolyVal>(b.value).coeffs;
      PolyVal r;
      r.coeffs.resize(std::max(x.size(), y.size()), d.base->zero());
      for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        Element xi = i < x.size() ? x[i] : d.base->zero();
        Element yi = i < y.size() ? y[i] : d.base->zero();
        r.coeffs[i] = d.base->add(xi, yi);
      }
      while (!r.coeffs.empty() && d.base->is_zero(r.coeffs.back())) r.coeffs.pop_back();
      return tag(std::move(r));
    }
    default: {
      const auto& d = unitalized();
      const auto& x = std::get<UnitalizedVal>(a.value);
      const auto& y = std::get<UnitalizedVal>(b.value);
      UnitalizedVal r;
      r.base.push_back(d.base->add(x.base[0], y.base[0]));
      r.scalar = x.scalar + y.scalar;
      return tag(std::move(r));
    }
  }
}

inline Element Ring::neg(const Element& a) const {
  if (backend_ == Backend::Subring) return retag(sub().parent->neg(a));
  check_same(a);
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& orders = finite_table().orders;
      const auto& x = std::get<std::vector<I64>>(a.value);
      std::vector<I64> r(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) r[i] = mod_reduce(-x[i], orders[i]);
      return tag(std::move(r));
    }
    case Backend::ZMod:
      return tag(mod_reduce(-std::get<I64>(a.value), zmod().n));
    case Backend::Rationals:
      return tag(Rat(-std::get<Rat>(a.value)));
    case Backend::Matrix: {
      const auto& d = matrix();
      MatrixVal r;
      for (const auto& e : std::get<MatrixVal>(a.value).entries)
        r.entries.push_back(d.base->neg(e));
      return tag(std::move(r));
    }
    case Backend::MInf: {
      MInfVal r;
      for (const auto& [key, val] : std::get<MInfVal>(a.value).entries)
        r.entries[key] = scalar_reduce(Rat(-val));
      for (auto it = r.entries.begin(); it != r.entries.end();)
        it = it->second == 0 ? r.entries.erase(it) : std::next(it);
      return tag(std::move(r));
    }
    case Backend::Poly: {
      const auto& d = poly();
      PolyVal r;
      for (const auto& c : std::get<PolyVal>(a.value).coeffs)
        r.coeffs.push_back(d.base->neg(c));
      return tag(std::move(r));
    }
    default: {
      const auto& d = unitalized();
      const auto& x = std::get<UnitalizedVal>(a.value);
      UnitalizedVal r;
      r.base.push_back(d.base->neg(x.base[0]));
      r.scalar = -x.scalar;
      return tag(std::move(r));
    }
  }
}

inline Element Ring::sub_elems(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

inline Element Ring::mul(const Element& a, const Element& b) const {
  if (backend_ == Backend::Subring) return retag(sub().parent->mul(a, b));
  check_same(a);
  check_same(b);
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& d = finite_table();
      const std::size_t k = d.orders.size();
      const auto& x = std::get<std::vector<I64>>(a.value);
      const auto& y = std::get<std::vector<I64>>(b.value);
      std::vector<I64> r(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (y[j] == 0) continue;
          const I64 s = x[i] * y[j];
          const auto& cell = d.table[i][j];
          for (std::size_t l = 0; l < k; ++l) r[l] += s * cell[l];
        }
      }
      for (std::size_t l = 0; l < k; ++l) r[l] = mod_reduce(r[l], d.orders[l]);
      return tag(std::move(r));
    }
    case Backend::ZMod: {
      const I64 n = zmod().n;
      return tag(mod_reduce(std::get<I64>(a.value) * std::get<I64>(b.value), n));
    }
    case Backend::Rationals:
      return tag(Rat(std::get<Rat>(a.value) * std::get<Rat>(b.value)));
    case Backend::Matrix: {
      const auto& d = matrix();
      const int k = d.size;
      const auto& x = std::get<MatrixVal>(a.value).entries;
      const auto& y = std::get<MatrixVal>(b.value).entries;
      MatrixVal r;
      r.entries.assign(static_cast<std::size_t>(k) * k, d.base->zero());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Element acc = d.base->zero();
          for (int l = 0; l < k; ++l)
            acc = d.base->add(acc, d.base->mul(x[i * k + l], y[l * k + j]));
          r.entries[i * k + j] = acc;
        }
      return tag(std::move(r));
    }
    case Backend::MInf: {
      const auto& x = std::get<MInfVal>(a.value).entries;
      const auto& y = std::get<MInfVal>(b.value).entries;
      MInfVal r;
      for (const auto& [ka, va] : x)
        for (const auto& [kb, vb] : y) {
          if (ka.second != kb.first) continue;
          auto key = std::make_pair(ka.first, kb.second);
          Rat s = scalar_reduce(Rat((r.entries.count(key) ? r.entries[key] : Rat(0)) + va * vb));
          if (s == 0)
            r.entries.erase(key);
          else
            r.entries[key] = s;
        }
      return tag(std::move(r));
    }
    case Backend::Poly: {
      const auto& d = poly();
      const auto& x = std::get<PolyVal>(a.value).coeffs;
      const auto& y = std::get<PolyVal>(b.value).coeffs;
      PolyVal r;
      if (!x.empty() && !y.empty()) {
        r.coeffs.assign(x.size() + y.size() - 1, d.base->zero());
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j)
            r.coeffs[i + j] = d.base->add(r.coeffs[i + j], d.base->mul(x[i], y[j]));
        while (!r.coeffs.empty() && d.base->is_zero(r.coeffs.back())) r.coeffs.pop_back();
      }
      return tag(std::move(r));
    }
    default: {
      // (r, n)(s, m) = (rs + ns + mr, nm)
      const auto& d = unitalized();
      const auto& x = std::get<UnitalizedVal>(a.value);
      const auto& y = std::get<UnitalizedVal>(b.value);
      Element rs = d.base->mul(x.base[0], y.base[0]);
      Element ns = d.base->zmul(x.scalar, y.base[0]);
      Element mr = d.base->zmul(y.scalar, x.base[0]);
      UnitalizedVal r;
      r.base.push_back(d.base->add(d.base->add(rs, ns), mr));
      r.scalar = x.scalar * y.scalar;
      return tag(std::move(r));
    }
  }
}

inline Element Ring::zmul(const Int& k, const Element& a) const {
  if (backend_ == Backend::Subring) return retag(sub().parent->zmul(k, a));
  check_same(a);
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& orders = finite_table().orders;
      const auto& x = std::get<std::vector<I64>>(a.value);
      std::vector<I64> r(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) {
        Int red = k % orders[i];
        if (red < 0) red += orders[i];
        r[i] = mod_reduce(x[i] * static_cast<I64>(red), orders[i]);
      }
      return tag(std::move(r));
    }
    case Backend::ZMod: {
      const I64 n = zmod().n;
      Int red = k % n;
      if (red < 0) red += n;
      return tag(mod_reduce(std::get<I64>(a.value) * static_cast<I64>(red), n));
    }
    case Backend::Rationals:
      return tag(Rat(std::get<Rat>(a.value) * Rat(k)));
    case Backend::Matrix: {
      const auto& d = matrix();
      MatrixVal r;
      for (const auto& e : std::get<MatrixVal>(a.value).entries)
        r.entries.push_back(d.base->zmul(k, e));
      return tag(std::move(r));
    }
    case Backend::MInf: {
      MInfVal r;
      for (const auto& [key, val] : std::get<MInfVal>(a.value).entries) {
        Rat s = scalar_reduce(Rat(val * Rat(k)));
        if (s != 0) r.entries[key] = s;
      }
      return tag(std::move(r));
    }
    case Backend::Poly: {
      const auto& d = poly();
      PolyVal r;
      for (const auto& c : std::get<PolyVal>(a.value).coeffs)
        r.coeffs.push_back(d.base->zmul(k, c));
      while (!r.coeffs.empty() && d.base->is_zero(r.coeffs.back())) r.coeffs.pop_back();
      return tag(std::move(r));
    }
    default: {
      const auto& d = unitalized();
      const auto& x = std::get<UnitalizedVal>(a.value);
      UnitalizedVal r;
      r.base.push_back(d.base->zmul(k, x.base[0]));
      r.scalar = x.scalar * k;
      return tag(std::move(r));
    }
  }
}

// ---------------------------------------------------------------------------
// additive coordinates (finite backends)

inline std::vector<I64> Ring::coords_of(const Element& e) const {
  switch (backend_) {
    case Backend::FiniteTable:
      return std::get<std::vector<I64>>(e.value);
    case Backend::ZMod:
      return {std::get<I64>(e.value)};
    case Backend::Matrix: {
      const auto& d = matrix();
      std::vector<I64> out;
      for (const auto& entry : std::get<MatrixVal>(e.value).entries) {
        auto c = d.base->coords_of(entry);
        out.insert(out.end(), c.begin(), c.end());
      }
      return out;
    }
    case Backend::Subring:
      return sub().parent->coords_of(e);
    default:
      throw InfiniteRingError("no additive coordinates: " + name_);
  }
}

inline Element Ring::element_from_coords(const std::vector<I64>& coords) const {
  if (coords.size() != moduli_.size())
    throw BadDescriptorError("coordinate vector has wrong length");
  switch (backend_) {
    case Backend::FiniteTable: {
      std::vector<I64> r(coords);
      const auto& orders = finite_table().orders;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_reduce(r[i], orders[i]);
      return tag(std::move(r));
    }
    case Backend::ZMod:
      return tag(mod_reduce(coords[0], zmod().n));
    case Backend::Matrix: {
      const auto& d = matrix();
      const std::size_t per = d.base->addgroup_moduli().size();
      MatrixVal m;
      for (std::size_t i = 0; i + per <= coords.size(); i += per)
        m.entries.push_back(d.base->element_from_coords(
            std::vector<I64>(coords.begin() + i, coords.begin() + i + per)));
      return tag(std::move(m));
    }
    case Backend::Subring:
      return retag(sub().parent->element_from_coords(coords));
    default:
      throw InfiniteRingError("no additive coordinates: " + name_);
  }
}

// ---------------------------------------------------------------------------
// printing

inline std::string Ring::element_str(const Element& e) const {
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& x = std::get<std::vector<I64>>(e.value);
      std::string s;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
      }
      return s;
    }
    case Backend::ZMod:
      return std::to_string(std::get<I64>(e.value));
    case Backend::Rationals:
      return rat_str(std::get<Rat>(e.value));
    case Backend::Matrix: {
      const auto& d = matrix();
      const auto& x = std::get<MatrixVal>(e.value).entries;
      std::string s;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += d.base->element_str(x[i]);
      }
      return s;
    }
    case Backend::MInf: {
      const auto& x = std::get<MInfVal>(e.value).entries;
      if (x.empty()) return "0";
      std::string s;
      bool first = true;
      for (const auto& [key, val] : x) {
        if (!first) s += " + ";
        first = false;
        s += "E " + std::to_string(key.first) + " " + std::to_string(key.second);
        if (val != 1) s += "=" + rat_str(val);
      }
      return s;
    }
    case Backend::Poly: {
      const auto& d = poly();
      const auto& x = std::get<PolyVal>(e.value).coeffs;
      if (x.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += d.base->element_str(x[i]);
      }
      return s;
    }
    case Backend::Subring:
      return sub().parent->element_str(e);
    default: {
      const auto& d = unitalized();
      const auto& x = std::get<UnitalizedVal>(e.value);
      return "(" + d.base->element_str(x.base[0]) + " | " + x.scalar.str() + ")";
    }
  }
}

inline std::string to_str(const Element& e) { return e.ring->element_str(e); }

// ---------------------------------------------------------------------------
// element builders and operators

inline Element el_coords(const RingPtr& r, std::vector<I64> coords) {
  if (r->backend() != Ring::Backend::FiniteTable)
    throw UnsupportedBackendError("el_coords needs a finite-table ring");
  return r->element_from_coords(coords);
}

inline Element el_zmod(const RingPtr& r, I64 v) {
  if (r->backend() != Ring::Backend::ZMod)
    throw UnsupportedBackendError("el_zmod needs a Z/n ring");
  return r->element_from_coords({v});
}

inline Element el_rat(const RingPtr& r, Rat q) {
  if (r->backend() != Ring::Backend::Rationals)
    throw UnsupportedBackendError("el_rat needs the rational ring");
  return r->tag(Value(std::move(q)));
}

inline Element el_minf(const RingPtr& r,
                       const std::vector<std::tuple<I64, I64, Rat>>& terms) {
  if (r->backend() != Ring::Backend::MInf)
    throw UnsupportedBackendError("el_minf needs an M_inf ring");
  Element acc = r->zero();
  for (const auto& [i, j, v] : terms) {
    if (i < 1 || j < 1) throw BadDescriptorError("matrix unit indices are 1-based");
    MInfVal one_term;
    if (!r->minf().over_q) {
      if (boost::multiprecision::denominator(v) != 1)
        throw BadDescriptorError("F_p entries must be integers");
    }
    if (v != 0) one_term.entries[{i, j}] = v;
    acc = r->add(acc, r->tag(Value(std::move(one_term))));
  }
  return acc;
}

inline Element el_unit(const RingPtr& r, I64 i, I64 j) {
  return el_minf(r, {{i, j, Rat(1)}});
}

inline Element el_matrix(const RingPtr& r, std::vector<Element> entries) {
  if (r->backend() != Ring::Backend::Matrix)
    throw UnsupportedBackendError("el_matrix needs a matrix ring");
  const auto& d = r->matrix();
  if (entries.size() != static_cast<std::size_t>(d.size) * d.size)
    throw BadDescriptorError("matrix needs size*size entries");
  return r->tag(Value(MatrixVal{std::move(entries)}));
}

inline Element el_poly(const RingPtr& r, std::vector<Element> coeffs) {
  if (r->backend() != Ring::Backend::Poly)
    throw UnsupportedBackendError("el_poly needs a polynomial ring");
  const auto& d = r->poly();
  while (!coeffs.empty() && d.base->is_zero(coeffs.back())) coeffs.pop_back();
  return r->tag(Value(PolyVal{std::move(coeffs)}));
}

inline Element el_pair(const RingPtr& r, Element base, Int n) {
  if (r->backend() != Ring::Backend::Unitalized)
    throw UnsupportedBackendError("el_pair needs a unitalization");
  UnitalizedVal v;
  v.base.push_back(std::move(base));
  v.scalar = std::move(n);
  return r->tag(Value(std::move(v)));
}

inline std::pair<Element, Int> pair_parts(const Element& e) {
  const auto& v = std::get<UnitalizedVal>(e.value);
  return {v.base[0], v.scalar};
}

inline Element operator+(const Element& a, const Element& b) { return a.ring->add(a, b); }
inline Element operator-(const Element& a, const Element& b) {
  return a.ring->sub_elems(a, b);
}
inline Element operator*(const Element& a, const Element& b) { return a.ring->mul(a, b); }
inline Element operator-(const Element& a) { return a.ring->neg(a); }

// ---------------------------------------------------------------------------
// low-level ideal closure (used by flags and by the ideals module)
//
// The one-sided multiplication operators are additive, so saturating the
// basis columns of the growing subgroup is a complete fixed point.

inline AbelianSubgroup ideal_closure_subgroup(const Ring& ring,
                                              const std::vector<Element>& gens,
                                              Sidedness sided) {
  AbelianSubgroup s(ring.addgroup_moduli());
  for (const auto& g : gens) s.insert(ring.coords_of(g));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& col : s.generator_columns()) {
      Element x = ring.element_from_coords(col);
      for (const auto& g : ring.additive_generators()) {
        if (sided != Sidedness::Right)
          changed |= s.insert(ring.coords_of(ring.mul(g, x)));
        if (sided != Sidedness::Left)
          changed |= s.insert(ring.coords_of(ring.mul(x, g)));
      }
    }
  }
  return s;
}

inline std::size_t Ring::count_two_sided_ideals() const {
  std::set<std::vector<std::vector<I64>>> seen;
  std::vector<AbelianSubgroup> ideals;
  auto insert_ideal = [&](AbelianSubgroup s) {
    auto key = s.enumerate();
    if (seen.insert(key).second) ideals.push_back(std::move(s));
  };
  for (const auto& r : carrier_)
    insert_ideal(ideal_closure_subgroup(*this, {r}, Sidedness::TwoSided));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = ideals.size();
    for (std::size_t i = 0; i < n && !changed; ++i)
      for (std::size_t j = i + 1; j < n && !changed; ++j) {
        AbelianSubgroup s = ideals[i];
        bool grew = false;
        for (const auto& c : ideals[j].generator_columns()) grew |= s.insert(c);
        if (!grew) continue;
        auto key = s.enumerate();
        if (seen.count(key)) continue;
        // join of two ideals is an ideal; no re-saturation needed
        seen.insert(key);
        ideals.push_back(std::move(s));
        changed = true;
      }
  }
  return ideals.size();
}

// ---------------------------------------------------------------------------
// finite flags

inline void Ring::compute_finite_flags() {
  const auto& cs = carrier_;
  flags_.torsion_free =
      flag_false("finite additive group: the exponent annihilates every element");

  std::optional<Element> id;
  for (const auto& e : cs) {
    bool ok = true;
    for (const auto& r : cs) {
      if (!(mul(e, r) == r) || !(mul(r, e) == r)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      id = e;
      break;
    }
  }
  identity_ = id;
  flags_.unital = id ? flag_true("identity found by carrier scan: " + element_str(*id))
                     : flag_false("carrier scan found no two-sided identity");

  // A local unit for the whole carrier is a two-sided identity (and any
  // identity is idempotent), so for finite rings the scan above settles this.
  flags_.locally_unital =
      id ? flag_true("identity is a local unit for every finite subset")
         : flag_false("a local unit for the whole carrier would be an identity");

  {
    bool com = true;
    std::string why = "all products commute (carrier scan)";
    for (std::size_t i = 0; i < cs.size() && com; ++i)
      for (std::size_t j = i + 1; j < cs.size() && com; ++j)
        if (!(mul(cs[i], cs[j]) == mul(cs[j], cs[i]))) {
          com = false;
          why = "witness: " + element_str(cs[i]) + " and " + element_str(cs[j]);
        }
    flags_.commutative = com ? flag_true(why) : flag_false(why);
  }

  {
    bool sunital = true;
    std::string why = "every r lies in Rr and rR (carrier scan)";
    for (const auto& r : cs) {
      bool left = false, right = false;
      for (const auto& u : cs) {
        left = left || mul(u, r) == r;
        right = right || mul(r, u) == r;
      }
      if (!left || !right) {
        sunital = false;
        why = "witness: " + element_str(r) + (left ? " is not in rR" : " is not in Rr");
        break;
      }
    }
    flags_.s_unital = sunital ? flag_true(why) : flag_false(why);
  }

  {
    AbelianSubgroup span(moduli_);
    for (const auto& a : cs)
      for (const auto& b : cs) span.insert(coords_of(mul(a, b)));
    bool idem = span.order() == Int(cs.size());
    flags_.idempotent_ring =
        idem ? flag_true("products additively generate the ring")
             : flag_false("additive span of products is a proper subgroup");
  }

  {
    std::vector<Element> idems;
    for (const auto& e : cs)
      if (mul(e, e) == e && !is_zero(e)) idems.push_back(e);
    if (identity_) {
      flags_.enough_idempotents = flag_true("complete orthogonal system {identity}");
    } else if (idems.size() <= 16) {
      // search all orthogonal families for a two-sided direct decomposition
      bool found = false;
      std::string witness;
      const std::size_t m = idems.size();
      for (std::size_t mask = 1; mask < (std::size_t(1) << m) && !found; ++mask) {
        std::vector<Element> fam;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::size_t(1) << i)) fam.push_back(idems[i]);
        bool orth = true;
        for (std::size_t i = 0; i < fam.size() && orth; ++i)
          for (std::size_t j = 0; j < fam.size() && orth; ++j)
            if (i != j && !is_zero(mul(fam[i], fam[j]))) orth = false;
        if (!orth) continue;
        auto direct = [&](bool left) {
          Int prod = 1;
          AbelianSubgroup sum(moduli_);
          for (const auto& e : fam) {
            AbelianSubgroup part(moduli_);
            for (const auto& r : cs)
              part.insert(coords_of(left ? mul(r, e) : mul(e, r)));
            prod *= part.order();
            for (const auto& c : part.generator_columns()) sum.insert(c);
          }
          return prod == Int(cs.size()) && sum.order() == Int(cs.size());
        };
        if (direct(true) && direct(false)) {
          found = true;
          witness = "complete orthogonal system of size " + std::to_string(fam.size());
        }
      }
      flags_.enough_idempotents =
          found ? flag_true(witness)
                : flag_false("no orthogonal idempotent family decomposes the ring");
    } else {
      flags_.enough_idempotents = flag_false(
          "finite ring without identity: a complete orthogonal system is finite "
          "and its sum would be an identity");
    }
  }

  if (cs.size() <= 4096) {
    bool nonzero_product = false;
    for (const auto& a : cs) {
      for (const auto& b : cs)
        if (!is_zero(mul(a, b))) {
          nonzero_product = true;
          break;
        }
      if (nonzero_product) break;
    }
    std::size_t n = count_two_sided_ideals();
    bool simple = nonzero_product && n == 2;
    flags_.simple = simple ? flag_true("exactly two two-sided ideals and RR != 0")
                           : flag_false(nonzero_product
                                            ? std::to_string(n) + " two-sided ideals"
                                            : "RR = 0");
  } else {
    flags_.simple = flag_unknown("carrier above the ideal enumeration cap");
  }

  flags_.propagate_chain();
}

// ---------------------------------------------------------------------------
// carrier construction

inline void Ring::init_carrier_and_flags() {
  switch (backend_) {
    case Backend::FiniteTable: {
      const auto& d = finite_table();
      moduli_ = d.orders;
      finite_ = true;
      break;
    }
    case Backend::ZMod:
      moduli_ = {zmod().n};
      finite_ = true;
      break;
    case Backend::Matrix: {
      const auto& d = matrix();
      finite_ = d.base->is_finite();
      if (finite_) {
        const auto& bm = d.base->addgroup_moduli();
        for (int i = 0; i < d.size * d.size; ++i)
          moduli_.insert(moduli_.end(), bm.begin(), bm.end());
      }
      break;
    }
    case Backend::Subring: {
      moduli_ = sub().parent->addgroup_moduli();
      finite_ = true;
      break;
    }
    default:
      finite_ = false;
      break;
  }

  if (!finite_) return;

  exponent_ = 1;
  for (I64 m : moduli_) exponent_ = std::lcm(exponent_, m);

  Int size = 1;
  for (I64 m : moduli_) size *= m;
  if (backend_ == Backend::Subring) size = Int(sub().carrier.size());
  if (size > Int(kCarrierCap))
    throw TooLargeError("finite carrier above cap: " + name_);

  if (backend_ == Backend::Subring) {
    carrier_ = sub().carrier;
  } else {
    std::vector<I64> counter(moduli_.size(), 0);
    for (;;) {
      carrier_.push_back(element_from_coords(counter));
      std::size_t i = counter.size();
      while (i > 0) {
        --i;
        if (++counter[i] < moduli_[i]) break;
        counter[i] = 0;
        if (i == 0) {
          counter.clear();
          break;
        }
      }
      if (counter.empty()) break;
    }
  }
  std::sort(carrier_.begin(), carrier_.end(), ElementLess{});
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end(),
                             [](const Element& a, const Element& b) { return a == b; }),
                 carrier_.end());

  // additive generators: one per coordinate when coordinates cover the whole
  // product, otherwise a greedy spanning subset of the carrier.
  if (coords_span_product()) {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      std::vector<I64> c(moduli_.size(), 0);
      c[i] = 1;
      addgens_.push_back(element_from_coords(c));
    }
  } else {
    AbelianSubgroup span(moduli_);
    for (const auto& e : carrier_)
      if (span.insert(coords_of(e))) addgens_.push_back(e);
  }

  compute_finite_flags();
}

// ---------------------------------------------------------------------------
// factories

inline RingPtr make_finite_table(std::vector<I64> orders,
                                 std::vector<std::vector<std::vector<I64>>> table) {
  const std::size_t k = orders.size();
  if (k == 0) throw BadDescriptorError("finite ring needs at least one generator");
  for (I64 d : orders)
    if (d < 2) throw BadDescriptorError("additive orders must be >= 2");
  if (table.size() != k)
    throw BadDescriptorError("structure table must be k x k");
  for (auto& row : table) {
    if (row.size() != k) throw BadDescriptorError("structure table must be k x k");
    for (auto& cell : row) {
      if (cell.size() != k)
        throw BadDescriptorError("structure constants must have k coordinates");
      for (std::size_t l = 0; l < k; ++l) cell[l] = mod_reduce(cell[l], orders[l]);
    }
  }
  // Bilinear extension is well defined iff each structure constant is killed
  // by the additive orders of both factors; otherwise distributivity breaks.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        if ((orders[i] * table[i][j][l]) % orders[l] != 0 ||
            (orders[j] * table[i][j][l]) % orders[l] != 0)
          throw NonDistributiveError(
              "structure constant g" + std::to_string(i + 1) + "*g" +
              std::to_string(j + 1) +
              " is incompatible with the additive orders (coordinate " +
              std::to_string(l + 1) + ")");
      }

  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::FiniteTable;
  r->data_ = Ring::FiniteTableData{std::move(orders), std::move(table)};
  {
    std::string s = "finite(";
    const auto& o = r->finite_table().orders;
    for (std::size_t i = 0; i < o.size(); ++i)
      s += (i ? "," : "") + std::to_string(o[i]);
    r->name_ = s + ")";
  }
  r->init_carrier_and_flags();

  // associativity on generator triples extends trilinearly
  const auto& gens = r->additive_generators();
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens)
        if (!(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c))))
          throw NonAssociativeError("witness triple " + r->element_str(a) + " ; " +
                                    r->element_str(b) + " ; " + r->element_str(c));
  return r;
}

inline RingPtr make_zmod(I64 n) {
  if (n < 2) throw BadDescriptorError("Z/n needs n >= 2");
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::ZMod;
  r->data_ = Ring::ZModData{n};
  r->name_ = "Z/" + std::to_string(n);
  r->init_carrier_and_flags();
  return r;
}

inline RingPtr make_rationals() {
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::Rationals;
  r->data_ = Ring::RationalsData{};
  r->name_ = "Q";
  r->finite_ = false;
  r->identity_ = r->tag(Rat(1));
  auto& f = r->flags_;
  f.unital = flag_true("field of rationals");
  f.commutative = flag_true("field of rationals");
  f.simple = flag_true("fields have no proper nonzero ideals");
  f.torsion_free = flag_true("characteristic zero");
  f.propagate_chain();
  return r;
}

inline RingPtr make_matrix(RingPtr base, int size) {
  if (!base) throw BadDescriptorError("matrix ring needs a base ring");
  if (size < 1) throw BadDescriptorError("matrix size must be >= 1");
  if (!base->flags().unital.yes() || !base->flags().commutative.yes())
    throw BadDescriptorError("matrix base must be proven unital and commutative");
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::Matrix;
  r->data_ = Ring::MatrixData{base, size};
  r->name_ = "M_" + std::to_string(size) + "(" + base->describe() + ")";
  r->init_carrier_and_flags();
  if (!r->finite_) {
    auto& f = r->flags_;
    f.unital = flag_true("identity matrix over a unital base");
    if (size == 1) {
      f.commutative = base->flags().commutative;
    } else {
      f.commutative = flag_false("matrix units at size >= 2 do not commute");
    }
    f.simple = base->backend() == Ring::Backend::Rationals
                   ? flag_true("matrix algebra over a field")
                   : flag_unknown("simplicity not certified for this base");
    f.torsion_free = base->flags().torsion_free;
    f.propagate_chain();
    // identity matrix
    MatrixVal m;
    m.entries.assign(static_cast<std::size_t>(size) * size, base->zero());
    for (int i = 0; i < size; ++i) m.entries[i * size + i] = *base->identity();
    r->identity_ = r->tag(std::move(m));
  }
  return r;
}

namespace detail {
inline RingPtr make_minf(bool over_q, I64 p) {
  if (!over_q && !is_prime_i64(p))
    throw BadDescriptorError("M_inf base F_p needs a prime p");
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::MInf;
  r->data_ = Ring::MInfData{over_q, p};
  r->name_ = over_q ? "M_inf(Q)" : "M_inf(F_" + std::to_string(p) + ")";
  r->finite_ = false;
  auto& f = r->flags_;
  f.unital = flag_false("an identity would be an infinite diagonal, not finitely supported");
  f.enough_idempotents =
      flag_true("diagonal matrix units form a complete orthogonal system");
  {
    auto e12 = el_unit(r, 1, 2);
    auto e11 = el_unit(r, 1, 1);
    bool comm = r->mul(e11, e12) == r->mul(e12, e11);
    f.commutative = comm ? flag_true("unexpected") : flag_false("witness: E 1 1 and E 1 2");
  }
  f.simple = flag_true("matrix units shuttle any nonzero entry to any position");
  f.torsion_free = over_q ? flag_true("entries in characteristic zero")
                          : flag_false("p * E 1 1 = 0");
  f.propagate_chain();
  return r;
}
}  // namespace detail

inline RingPtr make_minf_q() { return detail::make_minf(true, 0); }
inline RingPtr make_minf_fp(I64 p) { return detail::make_minf(false, p); }

inline RingPtr make_poly(RingPtr base, std::string var) {
  if (!base) throw BadDescriptorError("polynomial ring needs a base ring");
  if (var.empty()) throw BadDescriptorError("polynomial ring needs a variable name");
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::Poly;
  r->data_ = Ring::PolyData{base, var};
  r->name_ = base->describe() + "[" + var + "]";
  r->finite_ = false;
  auto inherit = [&](const Flag& f) {
    return Flag{f.value, "inherited from the coefficient ring: " + f.why};
  };
  auto& f = r->flags_;
  const auto& bf = base->flags();
  f.unital = inherit(bf.unital);
  f.enough_idempotents = inherit(bf.enough_idempotents);
  f.locally_unital = inherit(bf.locally_unital);
  f.s_unital = inherit(bf.s_unital);
  f.idempotent_ring = inherit(bf.idempotent_ring);
  f.commutative = inherit(bf.commutative);
  f.simple = flag_false("polynomials with zero constant term form a proper nonzero ideal");
  f.torsion_free = inherit(bf.torsion_free);
  f.propagate_chain();
  if (base->identity())
    r->identity_ = el_poly(r, {*base->identity()});
  return r;
}

inline RingPtr unitalize(const RingPtr& base) {
  if (!base) throw BadDescriptorError("unitalization needs a base ring");
  if (base->backend() == Ring::Backend::Unitalized)
    throw UnsupportedBackendError("iterated unitalization is not provided");
  auto r = std::make_shared<Ring>(Ring::Priv{});
  r->backend_ = Ring::Backend::Unitalized;
  r->data_ = Ring::UnitalizedData{base};
  r->name_ = "unitalization(" + base->describe() + ")";
  r->finite_ = false;
  auto& f = r->flags_;
  const auto& bf = base->flags();
  f.unital = flag_true("adjoined identity (0, 1)");
  f.commutative = Flag{bf.commutative.value,
                       "products reduce to base products: " + bf.commutative.why};
  f.simple = flag_false("the embedded base ring is a proper nonzero two-sided ideal");
  f.torsion_free = Flag{bf.torsion_free.value,
                        "pairs (r, 0) carry the base torsion: " + bf.torsion_free.why};
  f.propagate_chain();
  r->identity_ = el_pair(r, base->zero(), 1);
  return r;
}

inline RingPtr corner_ring(const RingPtr& ring, const Element& e) {
  if (!ring->contains(e)) throw BackendMismatchError("corner element not in ring");
  if (!(ring->mul(e, e) == e)) throw NotIdempotentError("corner element is not idempotent");
  if (ring->is_zero(e)) throw NotIdempotentError("corner element must be nonzero");

  switch (ring->backend()) {
    case Ring::Backend::FiniteTable:
    case Ring::Backend::ZMod:
    case Ring::Backend::Subring:
    case Ring::Backend::Matrix: {
      if (!ring->is_finite())
        throw UnsupportedBackendError("corners of infinite matrix rings are not provided");
      std::set<Element, ElementLess> members;
      for (const auto& r : ring->carrier())
        members.insert(ring->mul(ring->mul(e, r), e));
      RingPtr parent = ring->backend() == Ring::Backend::Subring ? ring->sub().parent : ring;
      auto c = std::make_shared<Ring>(Ring::Priv{});
      c->backend_ = Ring::Backend::Subring;
      c->data_ = Ring::SubringData{parent, {members.begin(), members.end()}, e};
      c->name_ = "corner[e=" + ring->element_str(e) + "] of " + parent->describe();
      auto& carrier = std::get<Ring::SubringData>(c->data_).carrier;
      for (auto& m : carrier) m.ring = c;
      c->init_carrier_and_flags();
      if (!c->identity_ || !(*c->identity_ == e))
        throw Error("internal: corner identity mismatch");
      return c;
    }
    case Ring::Backend::MInf: {
      const auto& entries = std::get<MInfVal>(e.value).entries;
      std::vector<I64> idx;
      for (const auto& [key, val] : entries) {
        if (key.first != key.second || val != 1)
          throw UnsupportedBackendError(
              "M_inf corners are provided for sums of diagonal matrix units");
        idx.push_back(key.first);
      }
      RingPtr scalars = ring->minf().over_q ? make_rationals() : make_zmod(ring->minf().p);
      return make_matrix(scalars, static_cast<int>(idx.size()));
    }
    case Ring::Backend::Poly: {
      const auto& coeffs = std::get<PolyVal>(e.value).coeffs;
      if (coeffs.size() != 1)
        throw UnsupportedBackendError("polynomial corners need a degree-0 idempotent");
      return make_poly(corner_ring(ring->poly().base, coeffs[0]), ring->poly().var);
    }
    case Ring::Backend::Rationals:
      return ring;  // e = 1 is the only nonzero idempotent
    default:
      if (ring->identity() && e == *ring->identity()) return ring;
      throw UnsupportedBackendError("corner not supported on this backend");
  }
}

// ---------------------------------------------------------------------------
// ring-core queries

inline std::vector<Element> enumerate_idempotents(const RingPtr& ring) {
  std::vector<Element> out;
  for (const auto& e : ring->carrier())
    if (ring->mul(e, e) == e) out.push_back(e);
  return out;
}

struct UnitalityClassification {
  Cert unital;
  Cert enough_idempotents;
  Cert locally_unital;
  Cert s_unital;
  Cert idempotent_ring;
  std::string finest;  // leftmost proven class, or "none"
};

inline UnitalityClassification classify_unitality(const RingPtr& ring) {
  const auto& f = ring->flags();
  UnitalityClassification c{f.unital.value, f.enough_idempotents.value,
                            f.locally_unital.value, f.s_unital.value,
                            f.idempotent_ring.value, "none"};
  const Cert vals[5] = {c.unital, c.enough_idempotents, c.locally_unital, c.s_unital,
                        c.idempotent_ring};
  for (int i = 0; i < 5; ++i) {
    if (vals[i] == Cert::True) {
      c.finest = RingFlags::chain_name(i);
      break;
    }
    if (vals[i] == Cert::Unknown) {
      c.finest = "unknown";
      break;
    }
  }
  return c;
}

// Smallest d with d*f = f*d = f for all f in F, scanning in canonical order
// on finite carriers; structured backends return a constructive choice.
inline std::optional<Element> find_s_unit(const RingPtr& ring,
                                          const std::vector<Element>& fs) {
  switch (ring->backend()) {
    case Ring::Backend::MInf: {
      std::set<I64> idx;
      for (const auto& f : fs)
        for (const auto& [key, val] : std::get<MInfVal>(f.value).entries) {
          idx.insert(key.first);
          idx.insert(key.second);
        }
      std::vector<std::tuple<I64, I64, Rat>> terms;
      for (I64 i : idx) terms.emplace_back(i, i, Rat(1));
      return el_minf(ring, terms);
    }
    case Ring::Backend::Poly: {
      std::vector<Element> base_fs;
      for (const auto& f : fs)
        for (const auto& c : std::get<PolyVal>(f.value).coeffs) base_fs.push_back(c);
      auto d = find_s_unit(ring->poly().base, base_fs);
      if (!d) return std::nullopt;
      return el_poly(ring, {*d});
    }
    case Ring::Backend::Rationals:
    case Ring::Backend::Unitalized:
      return ring->identity();
    default: {
      for (const auto& d : ring->carrier()) {
        bool ok = true;
        for (const auto& f : fs)
          if (!(ring->mul(d, f) == f) || !(ring->mul(f, d) == f)) {
            ok = false;
            break;
          }
        if (ok) return d;
      }
      return std::nullopt;
    }
  }
}

inline std::vector<Element> center_of(const RingPtr& ring) {
  std::vector<Element> out;
  for (const auto& z : ring->carrier()) {
    bool central = true;
    for (const auto& g : ring->additive_generators())
      if (!(ring->mul(z, g) == ring->mul(g, z))) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

// Deterministic elements for sampled checks on any backend.
inline std::vector<Element> canonical_samples(const RingPtr& ring,
                                              std::size_t budget = 8) {
  std::vector<Element> out;
  switch (ring->backend()) {
    case Ring::Backend::Rationals: {
      for (const Rat& q :
           {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-2, 3), Rat(3), Rat(5, 7), Rat(-4)})
        out.push_back(el_rat(ring, q));
      break;
    }
    case Ring::Backend::MInf: {
      out.push_back(ring->zero());
      out.push_back(el_unit(ring, 1, 1));
      out.push_back(el_unit(ring, 1, 2));
      out.push_back(el_unit(ring, 2, 1));
      out.push_back(el_unit(ring, 2, 2));
      out.push_back(ring->add(el_unit(ring, 1, 1), el_unit(ring, 2, 2)));
      out.push_back(el_minf(ring, {{1, 3, Rat(1)}, {2, 1, ring->minf().over_q ? Rat(-1, 2) : Rat(1)}}));
      out.push_back(ring->add(el_unit(ring, 3, 2), el_unit(ring, 1, 1)));
      break;
    }
    case Ring::Backend::Poly: {
      auto base = canonical_samples(ring->poly().base, 4);
      out.push_back(ring->zero());
      for (std::size_t i = 0; i < base.size(); ++i) {
        std::vector<Element> c;
        for (std::size_t d = 0; d <= i % 3; ++d)
          c.push_back(base[(i + d) % base.size()]);
        out.push_back(el_poly(ring, c));
      }
      break;
    }
    case Ring::Backend::Matrix: {
      if (ring->is_finite()) {
        const auto& cs = ring->carrier();
        for (std::size_t i = 0; i < cs.size() && out.size() < budget; ++i)
          out.push_back(cs[i * 37 % cs.size()]);
        break;
      }
      const auto& d = ring->matrix();
      auto base = canonical_samples(d.base, 4);
      out.push_back(ring->zero());
      out.push_back(*ring->identity());
      const int k = d.size;
      for (std::size_t s = 1; s < base.size() && out.size() < budget; ++s) {
        MatrixVal m;
        m.entries.assign(static_cast<std::size_t>(k) * k, d.base->zero());
        m.entries[(s % k) * k + ((s + 1) % k)] = base[s];
        out.push_back(ring->tag(std::move(m)));
      }
      break;
    }
    case Ring::Backend::Unitalized: {
      auto base = canonical_samples(ring->unitalized().base, 4);
      for (const auto& b : base)
        for (Int n : {Int(0), Int(1), Int(-2)}) {
          if (out.size() >= budget * 2) break;
          out.push_back(el_pair(ring, b, n));
        }
      break;
    }
    default: {
      const auto& cs = ring->carrier();
      if (cs.size() <= budget) {
        out = cs;
      } else {
        for (std::size_t i = 0; i < budget; ++i)
          out.push_back(cs[i * (cs.size() / budget)]);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Element& a, const Element& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace nuore
