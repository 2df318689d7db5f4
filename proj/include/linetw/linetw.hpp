#pragma once

// Umbrella header: exact treewidth and pathwidth of line graphs of complete
// multipartite graphs, with explicit optimal path decompositions, closed-form
// widths, bramble-based lower bounds and exhaustive verification oracles.

#include "linetw/bramble.hpp"
#include "linetw/construction.hpp"
#include "linetw/decomposition.hpp"
#include "linetw/errors.hpp"
#include "linetw/formulas.hpp"
#include "linetw/graph.hpp"
#include "linetw/oracle.hpp"
#include "linetw/verify.hpp"
