#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nuore/corpus.hpp"
#include "nuore/ideals.hpp"
#include "nuore/maps.hpp"
#include "nuore/ore.hpp"
#include "nuore/ring.hpp"
#include "nuore/rng.hpp"
#include "nuore/subgroup.hpp"

namespace nuore {

struct FuzzOptions {
  std::uint64_t seed = 0;
  int samples = 1000;
  int bound = 4;
  std::string corpus = "all";
};

struct FuzzReport {
  bool ok = true;
  int violations = 0;
  std::string text;
};

namespace detail {

// Coordinate-descent shrinking: repeatedly zero single coordinates of the
// reproducer while the predicate still fails.
inline std::vector<Element> shrink_elements(const RingPtr& ring,
                                            std::vector<Element> tuple,
                                            const std::function<bool(const std::vector<Element>&)>& fails) {
  if (!ring->is_finite()) return tuple;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t which = 0; which < tuple.size(); ++which) {
      auto coords = ring->coords_of(tuple[which]);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        auto trial = coords;
        trial[i] = 0;
        auto candidate = tuple;
        candidate[which] = ring->element_from_coords(trial);
        if (fails(candidate)) {
          tuple = candidate;
          coords = trial;
          improved = true;
        }
      }
    }
  }
  return tuple;
}

inline std::vector<OrePoly> shrink_polys(
    std::vector<OrePoly> tuple,
    const std::function<bool(const std::vector<OrePoly>&)>& fails) {
  const RingPtr& ring = tuple.front().ctx->ring;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t which = 0; which < tuple.size(); ++which) {
      for (std::size_t i = 0; i < tuple[which].coeffs.size(); ++i) {
        if (ring->is_zero(tuple[which].coeffs[i])) continue;
        auto candidate = tuple;
        candidate[which].coeffs[i] = ring->zero();
        ore_trim(candidate[which]);
        if (candidate[which].coeffs.empty() && tuple[which].coeffs.empty()) continue;
        if (fails(candidate)) {
          tuple = candidate;
          improved = true;
        }
      }
    }
  }
  return tuple;
}

struct PropertyLog {
  std::ostringstream out;
  int violations = 0;

  void line(const std::string& entry, const std::string& prop, const std::string& what) {
    out << "[" << entry << "] " << prop << ": " << what << "\n";
  }
  void violation(const std::string& entry, const std::string& prop,
                 const std::string& repro) {
    ++violations;
    out << "[" << entry << "] " << prop << ": VIOLATION " << repro << "\n";
  }
};

inline std::string tuple_str(const RingPtr& ring, const std::vector<Element>& t) {
  std::string s;
  for (const auto& e : t) s += (s.empty() ? "" : " , ") + ring->element_str(e);
  return s;
}

inline void fuzz_ring_axioms(PropertyLog& log, const CorpusEntry& ent, Rng& rng,
                             int samples) {
  const RingPtr& R = ent.ring;
  std::vector<std::vector<Element>> triples;
  bool exhaustive = R->is_finite() && R->carrier_size() <= 32;
  if (exhaustive) {
    for (const auto& a : R->carrier())
      for (const auto& b : R->carrier())
        for (const auto& c : R->carrier()) triples.push_back({a, b, c});
  } else {
    for (int i = 0; i < samples; ++i)
      triples.push_back(
          {random_element(rng, R), random_element(rng, R), random_element(rng, R)});
  }
  auto violate = [&](const std::vector<Element>& t) {
    const Element &a = t[0], &b = t[1], &c = t[2];
    if (!(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)))) return true;
    if (!(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)))) return true;
    if (!(R->mul(R->add(a, b), c) == R->add(R->mul(a, c), R->mul(b, c)))) return true;
    if (!(R->add(a, b) == R->add(b, a))) return true;
    return false;
  };
  for (const auto& t : triples)
    if (violate(t)) {
      auto small = shrink_elements(R, t, violate);
      log.violation(ent.name, "axioms", tuple_str(R, small));
      return;
    }
  log.line(ent.name, "axioms",
           std::string("ok (") + (exhaustive ? "exhaustive " : "sampled ") +
               std::to_string(triples.size()) + " triples)");
}

inline void fuzz_leibniz(PropertyLog& log, const CorpusEntry& ent, Rng& rng,
                         int samples) {
  const RingPtr& R = ent.ring;
  std::vector<std::vector<Element>> pairs;
  bool exhaustive = R->is_finite() && R->carrier_size() <= 64;
  if (exhaustive) {
    for (const auto& a : R->carrier())
      for (const auto& b : R->carrier()) pairs.push_back({a, b});
  } else {
    for (int i = 0; i < samples; ++i)
      pairs.push_back({random_element(rng, R), random_element(rng, R)});
  }
  auto violate = [&](const std::vector<Element>& t) {
    const Element &a = t[0], &b = t[1];
    Element lhs = ent.delta->apply(R->mul(a, b));
    Element rhs = R->add(R->mul(ent.sigma->apply(a), ent.delta->apply(b)),
                         R->mul(ent.delta->apply(a), b));
    return !(lhs == rhs);
  };
  for (const auto& t : pairs)
    if (violate(t)) {
      auto small = shrink_elements(R, t, violate);
      log.violation(ent.name, "leibniz", tuple_str(R, small));
      return;
    }
  log.line(ent.name, "leibniz",
           std::string("ok (") + (exhaustive ? "exhaustive " : "sampled ") +
               std::to_string(pairs.size()) + " pairs)");
}

inline void fuzz_ore_assoc(PropertyLog& log, const CorpusEntry& ent, Rng& rng,
                           int samples, int bound) {
  OrePtr ctx = make_ore_context(ent.ring, ent.sigma, ent.delta);
  auto violate = [&](const std::vector<OrePoly>& t) {
    return !ore_equal(ore_mul(ore_mul(t[0], t[1]), t[2]),
                      ore_mul(t[0], ore_mul(t[1], t[2])));
  };
  for (int i = 0; i < samples; ++i) {
    std::vector<OrePoly> t{random_ore_poly(rng, ctx, bound),
                           random_ore_poly(rng, ctx, bound),
                           random_ore_poly(rng, ctx, bound)};
    if (violate(t)) {
      auto small = shrink_polys(t, violate);
      log.violation(ent.name, "ore-assoc",
                    ore_str(small[0]) + " | " + ore_str(small[1]) + " | " +
                        ore_str(small[2]));
      return;
    }
  }
  log.line(ent.name, "ore-assoc",
           "ok (sampled " + std::to_string(samples) + " triples, degree <= " +
               std::to_string(bound) + ")");
}

inline void fuzz_idempotent_lemmas(PropertyLog& log, const CorpusEntry& ent) {
  const RingPtr& R = ent.ring;
  if (!R->is_finite()) {
    log.line(ent.name, "idempotents", "skipped (infinite ring)");
    return;
  }
  const MapPtr& d = ent.delta;
  auto idems = enumerate_idempotents(R);
  auto centrals = center_of(R);
  auto is_central = [&](const Element& e) {
    return std::binary_search(centrals.begin(), centrals.end(), e, ElementLess{});
  };
  std::sort(centrals.begin(), centrals.end(), ElementLess{});
  for (const auto& e : idems) {
    // e d(e) e = 0
    if (!R->is_zero(R->mul(R->mul(e, d->apply(e)), e))) {
      log.violation(ent.name, "idempotents", "e d(e) e != 0 at e=" + R->element_str(e));
      return;
    }
    // central implies d(e) = 0
    if (is_central(e) && !R->is_zero(d->apply(e))) {
      log.violation(ent.name, "idempotents",
                    "central idempotent with d(e) != 0 at e=" + R->element_str(e));
      return;
    }
    // ReR is a d-invariant ideal
    AbelianSubgroup rer(R->addgroup_moduli());
    for (const auto& r : R->carrier())
      for (const auto& s : R->carrier())
        rer.insert(R->coords_of(R->mul(R->mul(r, e), s)));
    std::vector<Element> members;
    for (const auto& v : rer.enumerate()) members.push_back(R->element_from_coords(v));
    for (const auto& m : members) {
      if (!rer.contains(R->coords_of(d->apply(m)))) {
        log.violation(ent.name, "idempotents",
                      "ReR not d-invariant at e=" + R->element_str(e) +
                          " m=" + R->element_str(m));
        return;
      }
      for (const auto& g : R->additive_generators())
        if (!rer.contains(R->coords_of(R->mul(g, m))) ||
            !rer.contains(R->coords_of(R->mul(m, g)))) {
          log.violation(ent.name, "idempotents",
                        "ReR not an ideal at e=" + R->element_str(e));
          return;
        }
    }
    if (!R->is_zero(d->apply(e))) continue;
    // d(e) = 0: d(er) = e d(r), d(re) = d(r) e, and the corner restriction is
    // a derivation (inner by e a e when d is inner)
    for (const auto& r : R->carrier()) {
      if (!(d->apply(R->mul(e, r)) == R->mul(e, d->apply(r))) ||
          !(d->apply(R->mul(r, e)) == R->mul(d->apply(r), e))) {
        log.violation(ent.name, "idempotents",
                      "d(er) != e d(r) at e=" + R->element_str(e) +
                          " r=" + R->element_str(r));
        return;
      }
    }
    for (const auto& r : R->carrier())
      for (const auto& s : R->carrier()) {
        Element a = R->mul(R->mul(e, r), e), b = R->mul(R->mul(e, s), e);
        Element lhs = d->apply(R->mul(a, b));
        Element rhs = R->add(R->mul(a, d->apply(b)), R->mul(d->apply(a), b));
        if (!(lhs == rhs)) {
          log.violation(ent.name, "idempotents",
                        "corner restriction fails Leibniz at e=" + R->element_str(e));
          return;
        }
      }
    if (d->kind() == AdditiveMap::Kind::Inner) {
      Element eae = R->mul(R->mul(e, d->inner_element()), e);
      for (const auto& r : R->carrier()) {
        Element a = R->mul(R->mul(e, r), e);
        Element want = R->sub_elems(R->mul(eae, a), R->mul(a, eae));
        if (!(d->apply(a) == want)) {
          log.violation(ent.name, "idempotents",
                        "corner restriction is not inner by e a e at e=" +
                            R->element_str(e));
          return;
        }
      }
    }
  }
  log.line(ent.name, "idempotents",
           "ok (" + std::to_string(idems.size()) + " idempotents)");
}

inline void fuzz_sunit_annihilation(PropertyLog& log, const CorpusEntry& ent) {
  const RingPtr& R = ent.ring;
  if (!R->is_finite() || !R->flags().s_unital.yes()) {
    log.line(ent.name, "s-unit", "skipped (needs a finite proven s-unital ring)");
    return;
  }
  for (const auto& a : R->carrier()) {
    auto d = find_s_unit(R, {a, ent.delta->apply(a)});
    if (!d) {
      log.violation(ent.name, "s-unit",
                    "no s-unit found for {a, d(a)} at a=" + R->element_str(a));
      return;
    }
    if (!R->is_zero(R->mul(a, ent.delta->apply(*d)))) {
      log.violation(ent.name, "s-unit",
                    "a d(u) != 0 at a=" + R->element_str(a) +
                        " u=" + R->element_str(*d));
      return;
    }
  }
  log.line(ent.name, "s-unit", "ok (all elements)");
}

inline void fuzz_hn_invariance(PropertyLog& log, const CorpusEntry& ent, Rng& rng,
                               int bound) {
  const RingPtr& R = ent.ring;
  if (!R->is_finite() || !R->flags().s_unital.yes() ||
      !acts_as_identity(ent.sigma)) {
    log.line(ent.name, "h-sets", "skipped (needs a finite s-unital differential case)");
    return;
  }
  OrePtr ctx = make_ore_context(ent.ring, ent.sigma, ent.delta);
  const int gdeg = std::min(2, bound);
  for (int set = 0; set < 3; ++set) {
    std::vector<OrePoly> gens;
    const int count = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < count; ++i) {
      OrePoly p = random_ore_poly(rng, ctx, gdeg);
      if (ore_degree(p) != kNegInfDegree) gens.push_back(p);
    }
    if (gens.empty())
      gens.push_back(ore_monomial(ctx, R->additive_generators()[0], std::min(1, bound)));
    auto cd = truncated_s_closure(ctx, gens, bound);
    auto cd1 = truncated_s_closure(ctx, gens, bound + 1);
    for (int n = 0; n <= bound; ++n) {
      auto hn = cd.h_set(n);
      auto hn1 = cd1.h_set(n);
      Ideal closed = ideal_closure(R, hn);
      if (closed.elements != hn) {
        log.violation(ent.name, "h-sets",
                      "H_" + std::to_string(n) + " is not a two-sided ideal");
        return;
      }
      for (const auto& a : hn) {
        if (!std::binary_search(hn1.begin(), hn1.end(), ent.delta->apply(a),
                                ElementLess{})) {
          log.violation(ent.name, "h-sets",
                        "d(a) escapes H_" + std::to_string(n) +
                            " at a=" + R->element_str(a));
          return;
        }
      }
    }
  }
  log.line(ent.name, "h-sets", "ok (3 generator sets, bounds " +
                                   std::to_string(bound) + "/" +
                                   std::to_string(bound + 1) + ")");
}

}  // namespace detail

inline FuzzReport run_fuzz(const FuzzOptions& opts) {
  detail::PropertyLog log;
  log.out << "[fuzz] seed=" << opts.seed << " samples=" << opts.samples
          << " bound=" << opts.bound << " corpus=" << opts.corpus << "\n";
  std::vector<CorpusEntry> entries;
  if (opts.corpus == "all") {
    entries = builtin_corpus();
  } else {
    auto e = corpus_entry(opts.corpus);
    if (!e) throw BadDescriptorError("unknown corpus entry '" + opts.corpus + "'");
    entries.push_back(*e);
  }
  std::uint64_t idx = 0;
  for (const auto& ent : entries) {
    Rng rng(opts.seed * 0x9e3779b97f4a7c15ull + (++idx));
    detail::fuzz_ring_axioms(log, ent, rng, opts.samples);
    detail::fuzz_leibniz(log, ent, rng, opts.samples);
    detail::fuzz_ore_assoc(log, ent, rng, opts.samples, std::min(opts.bound, 4));
    detail::fuzz_idempotent_lemmas(log, ent);
    detail::fuzz_sunit_annihilation(log, ent);
    detail::fuzz_hn_invariance(log, ent, rng, std::min(opts.bound, 4));
  }
  log.out << "[summary] entries=" << entries.size()
          << " violations=" << log.violations << "\n";
  FuzzReport rep;
  rep.violations = log.violations;
  rep.ok = log.violations == 0;
  rep.text = log.out.str();
  return rep;
}

}  // namespace nuore
