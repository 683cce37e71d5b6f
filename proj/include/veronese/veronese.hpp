#pragma once

// Umbrella header: exact GL(n) character combinatorics for the simple
// equivariant modules on degree-d Veronese cones.

#include "veronese/arith.hpp"
#include "veronese/bott.hpp"
#include "veronese/charpoly.hpp"
#include "veronese/errors.hpp"
#include "veronese/ext.hpp"
#include "veronese/multiplicities.hpp"
#include "veronese/serialize.hpp"
#include "veronese/suites.hpp"
#include "veronese/weights.hpp"
