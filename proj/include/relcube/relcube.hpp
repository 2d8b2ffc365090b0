#pragma once

// Percolation, exact all-terminal reliability, and isoperimetry toolkit for
// Cartesian-power graphs and small-graph families.

#include "relcube/accessibility.hpp"
#include "relcube/canonical.hpp"
#include "relcube/common.hpp"
#include "relcube/graph.hpp"
#include "relcube/isoperimetry.hpp"
#include "relcube/parallel.hpp"
#include "relcube/percolation.hpp"
#include "relcube/poly_roots.hpp"
#include "relcube/product_family.hpp"
#include "relcube/reliability.hpp"
#include "relcube/rng.hpp"
#include "relcube/spectrum.hpp"
#include "relcube/uor.hpp"
