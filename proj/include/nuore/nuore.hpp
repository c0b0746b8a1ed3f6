#pragma once

// Umbrella header for the whole library.

#include "nuore/element.hpp"
#include "nuore/errors.hpp"
#include "nuore/subgroup.hpp"
#include "nuore/ring.hpp"
#include "nuore/maps.hpp"
#include "nuore/unitalization.hpp"
#include "nuore/ore.hpp"
#include "nuore/ideals.hpp"
#include "nuore/simplicity.hpp"
#include "nuore/io.hpp"
#include "nuore/rng.hpp"
#include "nuore/corpus.hpp"
#include "nuore/fuzz.hpp"
