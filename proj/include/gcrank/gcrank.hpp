#pragma once

// Everything except the JSON layer, which needs nlohmann/json on the include path.

#include "gcrank/basis_greedy.hpp"
#include "gcrank/closure_sandbox.hpp"
#include "gcrank/core.hpp"
#include "gcrank/critical_rank.hpp"
#include "gcrank/error.hpp"
#include "gcrank/hardness.hpp"
#include "gcrank/knapsack.hpp"
#include "gcrank/lp.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/parallel.hpp"
#include "gcrank/random.hpp"
