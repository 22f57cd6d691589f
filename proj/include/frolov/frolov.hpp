// SPDX-License-Identifier: MIT
#pragma once

// Umbrella header: lattice cubature on scaled irrational lattices, from the
// defining polynomial through node enumeration to convergence diagnostics.

#include "frolov/basis.hpp"
#include "frolov/box.hpp"
#include "frolov/cell_count.hpp"
#include "frolov/convergence.hpp"
#include "frolov/errors.hpp"
#include "frolov/format.hpp"
#include "frolov/multiplier.hpp"
#include "frolov/node_set.hpp"
#include "frolov/periodization.hpp"
#include "frolov/poisson.hpp"
#include "frolov/polylog.hpp"
#include "frolov/polynomial.hpp"
#include "frolov/roots.hpp"
#include "frolov/rule.hpp"
#include "frolov/test_functions.hpp"
