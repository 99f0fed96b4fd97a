#pragma once

// Umbrella header for the total dominator coloring library.

#include "tdc/analysis.hpp"
#include "tdc/bipartite.hpp"
#include "tdc/chain.hpp"
#include "tdc/cograph.hpp"
#include "tdc/coloring.hpp"
#include "tdc/domination.hpp"
#include "tdc/errors.hpp"
#include "tdc/exact.hpp"
#include "tdc/generate.hpp"
#include "tdc/graph.hpp"
#include "tdc/io.hpp"
#include "tdc/json_io.hpp"
#include "tdc/oracle.hpp"
#include "tdc/search.hpp"
#include "tdc/split.hpp"
#include "tdc/trees.hpp"
#include "tdc/vertex_set.hpp"
