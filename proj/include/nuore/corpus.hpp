#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nuore/maps.hpp"
#include "nuore/ring.hpp"

namespace nuore {

struct CorpusEntry {
  std::string name;
  RingPtr ring;
  MapPtr sigma;
  MapPtr delta;
  std::string note;
};

namespace detail {

// Z/p[t]/(t^k) as a finite table over generators 1, t, ..., t^{k-1}
inline RingPtr make_truncated_poly(I64 p, int k) {
  std::vector<I64> orders(static_cast<std::size_t>(k), p);
  std::vector<std::vector<std::vector<I64>>> table(
      static_cast<std::size_t>(k),
      std::vector<std::vector<I64>>(static_cast<std::size_t>(k),
                                    std::vector<I64>(static_cast<std::size_t>(k), 0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) table[i][j][i + j] = 1;  // t^i * t^j = t^{i+j}, 0 past t^{k-1}
  return make_finite_table(orders, table);
}

// d/dt: t^i -> i t^{i-1}; a derivation of the truncation only when p | k
inline MapPtr truncated_formal_derivative(const RingPtr& r, I64 p, int k) {
  std::vector<Element> images;
  for (int i = 0; i < k; ++i) {
    std::vector<I64> coords(static_cast<std::size_t>(k), 0);
    if (i >= 1) coords[i - 1] = i % p;
    images.push_back(r->element_from_coords(coords));
  }
  return map_table(r, std::move(images));
}

// Euler derivation t d/dt: t^i -> i t^i; a derivation of every truncation
inline MapPtr truncated_euler_derivative(const RingPtr& r, I64 p, int k) {
  std::vector<Element> images;
  for (int i = 0; i < k; ++i) {
    std::vector<I64> coords(static_cast<std::size_t>(k), 0);
    coords[i] = i % p;
    images.push_back(r->element_from_coords(coords));
  }
  return map_table(r, std::move(images));
}

}  // namespace detail

inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, RingPtr r, MapPtr delta, std::string note) {
    out.push_back(
        {std::move(name), r, map_identity(r), std::move(delta), std::move(note)});
  };

  for (I64 n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    add("zmod" + std::to_string(n), r, map_zero(r), "Z/" + std::to_string(n));
  }

  {
    auto r = detail::make_truncated_poly(2, 2);
    add("tp2k2", r, detail::truncated_formal_derivative(r, 2, 2),
        "Z/2[t]/(t^2), formal derivative");
  }
  {
    auto r = detail::make_truncated_poly(2, 3);
    add("tp2k3", r, detail::truncated_euler_derivative(r, 2, 3),
        "Z/2[t]/(t^3), Euler derivation t d/dt (the formal derivative fails "
        "Leibniz unless the characteristic divides the truncation order)");
  }
  {
    auto r = detail::make_truncated_poly(3, 2);
    add("tp3k2", r, detail::truncated_euler_derivative(r, 3, 2),
        "Z/3[t]/(t^2), Euler derivation t d/dt");
  }
  {
    auto r = detail::make_truncated_poly(3, 3);
    add("tp3k3", r, detail::truncated_formal_derivative(r, 3, 3),
        "Z/3[t]/(t^3), formal derivative");
  }

  {
    auto z2 = make_zmod(2);
    auto m = make_matrix(z2, 2);
    auto e12 = el_matrix(m, {z2->zero(), *z2->identity(), z2->zero(), z2->zero()});
    auto e21 = el_matrix(m, {z2->zero(), z2->zero(), *z2->identity(), z2->zero()});
    add("m2z2_e12", m, map_inner(m, e12), "M_2(Z/2), inner by E_12");
    add("m2z2_e21", m, map_inner(m, e21), "M_2(Z/2), inner by E_21");
  }

  {
    // g1 g1 = g1, g1 g2 = g2, g2 g1 = g2 g2 = 0: an idempotent ring that is
    // not s-unital (g2 has no right identity action)
    auto r = make_finite_table({2, 2}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}});
    add("rowring", r, map_inner(r, el_coords(r, {1, 0})),
        "row ring: idempotent but not s-unital, inner by g1");
  }

  {
    auto r = make_finite_table({2}, {{{0}}});
    add("zero2", r, map_table(r, {el_coords(r, {1})}),
        "2-element zero-multiplication ring; every additive map is a derivation");
  }
  {
    auto r = make_finite_table({3}, {{{0}}});
    add("zero3", r, map_table(r, {el_coords(r, {1})}),
        "3-element zero-multiplication ring");
  }

  {
    auto m = make_minf_q();
    add("minfq", m, map_inner(m, el_unit(m, 1, 2)),
        "M_inf(Q), inner by E_12; locally unital, not unital");
  }

  {
    auto m = make_minf_q();
    auto p = make_poly(m, "y");
    add("minfq_poly", p, map_formal_derivative(p),
        "M_inf(Q)[y] with d/dy: simple by the structural certificate");
  }

  {
    auto q = make_rationals();
    auto p = make_poly(q, "t");
    add("weylq", p, map_formal_derivative(p),
        "Q[t] with d/dt: the first Weyl algebra over Q");
  }

  return out;
}

inline std::optional<CorpusEntry> corpus_entry(const std::string& name) {
  for (auto& e : builtin_corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : builtin_corpus()) out.push_back(e.name);
  return out;
}

}  // namespace nuore
