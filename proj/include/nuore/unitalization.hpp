#pragma once

#include "nuore/maps.hpp"
#include "nuore/ring.hpp"

namespace nuore {

// R' = R x Z with (r,n)(s,m) = (rs + ns + mr, nm); identity (0,1).
// The ring itself is built by unitalize() in ring.hpp; this module adds the
// embedding and the lifting of (sigma, delta) with its validation record.

inline Element embed(const RingPtr& uring, const Element& r) {
  if (uring->backend() != Ring::Backend::Unitalized)
    throw UnsupportedBackendError("embed needs a unitalization");
  if (!uring->unitalized().base->contains(r))
    throw BackendMismatchError("element does not belong to the unitalized base");
  return el_pair(uring, r, 0);
}

struct LiftedMaps {
  MapPtr sigma;        // (r,n) -> (sigma(r), n)
  MapPtr delta;        // (r,n) -> (delta(r), 0)
  MapCheck sigma_check;
  MapCheck delta_check;
  bool identity_fixed;   // sigma(0,1) == (0,1)
  bool identity_killed;  // delta(0,1) == (0,0)
};

inline LiftedMaps lift_maps(const RingPtr& uring, const MapPtr& sigma,
                            const MapPtr& delta) {
  LiftedMaps out;
  out.sigma = map_lifted(uring, sigma, true);
  out.delta = map_lifted(uring, delta, false);
  out.sigma_check = check_endomorphism(out.sigma);
  out.delta_check = check_sigma_derivation(out.delta, out.sigma);
  const Element one = *uring->identity();
  out.identity_fixed = out.sigma->apply(one) == one;
  out.identity_killed = uring->is_zero(out.delta->apply(one));
  return out;
}

}  // namespace nuore
