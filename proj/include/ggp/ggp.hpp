#pragma once

#include "ggp/core/coord.hpp"
#include "ggp/core/label.hpp"
#include "ggp/core/multisegment.hpp"
#include "ggp/core/segment.hpp"
#include "ggp/matching/bipartite.hpp"
#include "ggp/matching/lm_graph.hpp"
#include "ggp/speh.hpp"
#include "ggp/branching.hpp"
#include "ggp/codec.hpp"
#include "ggp/harness.hpp"
