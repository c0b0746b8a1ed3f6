#pragma once

#include <string>

#include "nuore/errors.hpp"

namespace nuore {

// Three-valued certainty. Proven values always carry a provenance note:
// brute force for finite carriers, a named argument for structured backends.
enum class Cert { True, False, Unknown };

inline const char* cert_str(Cert c) {
  switch (c) {
    case Cert::True: return "proven-true";
    case Cert::False: return "proven-false";
    default: return "unknown";
  }
}

struct Flag {
  Cert value = Cert::Unknown;
  std::string why;

  bool yes() const { return value == Cert::True; }
  bool no() const { return value == Cert::False; }
};

inline Flag flag_true(std::string why) { return {Cert::True, std::move(why)}; }
inline Flag flag_false(std::string why) { return {Cert::False, std::move(why)}; }
inline Flag flag_unknown(std::string why) { return {Cert::Unknown, std::move(why)}; }

// Capability record. The first five sit on the inclusion chain
//   unital < enough idempotents < locally unital < s-unital < idempotent ring
// and propagate_chain() keeps memberships monotone: proven-true flows right,
// proven-false flows left. A conflict means a computation bug, so it throws.
struct RingFlags {
  Flag unital;
  Flag enough_idempotents;
  Flag locally_unital;
  Flag s_unital;
  Flag idempotent_ring;
  Flag commutative;
  Flag simple;
  Flag torsion_free;

  void propagate_chain() {
    Flag* chain[5] = {&unital, &enough_idempotents, &locally_unital, &s_unital,
                      &idempotent_ring};
    for (int i = 0; i + 1 < 5; ++i) {
      if (chain[i]->yes()) {
        if (chain[i + 1]->no())
          throw Error("inconsistent unitality chain: " + chain[i]->why + " vs " +
                      chain[i + 1]->why);
        if (!chain[i + 1]->yes())
          *chain[i + 1] = flag_true("implied: " + std::string(chain_name(i)) + " ring");
      }
    }
    for (int i = 4; i > 0; --i) {
      if (chain[i]->no()) {
        if (chain[i - 1]->yes())
          throw Error("inconsistent unitality chain: " + chain[i]->why + " vs " +
                      chain[i - 1]->why);
        if (!chain[i - 1]->no())
          *chain[i - 1] = flag_false("implied: not " + std::string(chain_name(i)));
      }
    }
  }

  static const char* chain_name(int i) {
    switch (i) {
      case 0: return "unital";
      case 1: return "enough-idempotents";
      case 2: return "locally-unital";
      case 3: return "s-unital";
      default: return "idempotent";
    }
  }
};

}  // namespace nuore
