#pragma once

#include <compare>
#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "nuore/numeric.hpp"

namespace nuore {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Element;

// Dense k x k matrix over the base ring, row major.
struct MatrixVal {
  std::vector<Element> entries;
};

// Finitely supported matrix over Q or F_p; indices are 1-based and no zero
// entry is ever stored.
struct MInfVal {
  std::map<std::pair<I64, I64>, Rat> entries;
};

// Polynomial in the central variable, low degree first, no trailing zeros.
struct PolyVal {
  std::vector<Element> coeffs;
};

// Pair (r, n) of the unitalization R x Z. base holds exactly one element;
// a vector is used only because Element is incomplete here.
struct UnitalizedVal {
  std::vector<Element> base;
  Int scalar;
};

using Value = std::variant<std::vector<I64>,  // FiniteTable coordinates
                           I64,               // ZMod residue
                           Rat,               // Rationals scalar
                           MatrixVal, MInfVal, PolyVal, UnitalizedVal>;

// A ring element: the owning ring plus a canonical value. Values are kept
// canonical by every operation (coordinates reduced, zeros erased, trailing
// zero coefficients trimmed), so structural comparison is semantic equality.
struct Element {
  RingPtr ring;
  Value value;
};

int compare_values(const Value& a, const Value& b);

inline int compare_int(I64 a, I64 b) { return a < b ? -1 : (a > b ? 1 : 0); }

inline int compare_rat(const Rat& a, const Rat& b) {
  return a < b ? -1 : (a > b ? 1 : 0);
}

template <class T, class Cmp>
int compare_vectors(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = cmp(a[i], b[i])) return c;
  return 0;
}

inline int compare_elements(const Element& a, const Element& b) {
  return compare_values(a.value, b.value);
}

inline int compare_values(const Value& a, const Value& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  switch (a.index()) {
    case 0:
      return compare_vectors(std::get<0>(a), std::get<0>(b), compare_int);
    case 1:
      return compare_int(std::get<1>(a), std::get<1>(b));
    case 2:
      return compare_rat(std::get<2>(a), std::get<2>(b));
    case 3:
      return compare_vectors(std::get<3>(a).entries, std::get<3>(b).entries,
                             compare_elements);
    case 4: {
      const auto& ma = std::get<4>(a).entries;
      const auto& mb = std::get<4>(b).entries;
      auto ia = ma.begin();
      auto ib = mb.begin();
      for (; ia != ma.end() && ib != mb.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (int c = compare_rat(ia->second, ib->second)) return c;
      }
      if (ia != ma.end()) return 1;
      if (ib != mb.end()) return -1;
      return 0;
    }
    case 5:
      return compare_vectors(std::get<5>(a).coeffs, std::get<5>(b).coeffs,
                             compare_elements);
    default: {
      const auto& ua = std::get<6>(a);
      const auto& ub = std::get<6>(b);
      if (int c = compare_elements(ua.base[0], ub.base[0])) return c;
      return ua.scalar < ub.scalar ? -1 : (ua.scalar > ub.scalar ? 1 : 0);
    }
  }
}

inline bool operator==(const Element& a, const Element& b) {
  return compare_elements(a, b) == 0;
}
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

// Canonical total order used everywhere a deterministic choice is needed
// (reports, witness selection, tie-breaking).
struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return compare_elements(a, b) < 0;
  }
};

}  // namespace nuore
