#ifndef LCPKIT_LCPKIT_HPP_
#define LCPKIT_LCPKIT_HPP_

#include "lcpkit/bench.hpp"
#include "lcpkit/feasible_set.hpp"
#include "lcpkit/linear_map.hpp"
#include "lcpkit/lmo.hpp"
#include "lcpkit/lower_bounds.hpp"
#include "lcpkit/objective.hpp"
#include "lcpkit/rng.hpp"
#include "lcpkit/schedule.hpp"
#include "lcpkit/smoothing.hpp"
#include "lcpkit/solvers.hpp"
#include "lcpkit/trace.hpp"

#endif  // LCPKIT_LCPKIT_HPP_
