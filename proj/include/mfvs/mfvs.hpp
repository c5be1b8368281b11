#pragma once

#include "mfvs/backbone.hpp"
#include "mfvs/disjoint_fvs.hpp"
#include "mfvs/driver.hpp"
#include "mfvs/fvs_umc.hpp"
#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/io.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/oracles.hpp"
#include "mfvs/report.hpp"
#include "mfvs/skew_separator.hpp"
#include "mfvs/subsets.hpp"
#include "mfvs/vertex_cut.hpp"
