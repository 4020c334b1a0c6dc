#pragma once

// Umbrella header for the whole library (the CLI glue lives in cli/).

#include "cuspwatch/core/error.hpp"
#include "cuspwatch/ratlin/linalg.hpp"
#include "cuspwatch/ratlin/matrix.hpp"
#include "cuspwatch/ratlin/quadratic.hpp"
#include "cuspwatch/ratlin/rational.hpp"
#include "cuspwatch/ratlin/wedge.hpp"
#include "cuspwatch/numeric/log_value.hpp"
#include "cuspwatch/lp/simplex.hpp"
#include "cuspwatch/bruhat/bruhat.hpp"
#include "cuspwatch/radicals/lie.hpp"
#include "cuspwatch/radicals/lll.hpp"
#include "cuspwatch/radicals/radicals.hpp"
#include "cuspwatch/bordered/bordered.hpp"
#include "cuspwatch/cover/cover.hpp"
#include "cuspwatch/divergence/divergence.hpp"
#include "cuspwatch/sl4q/quaternion.hpp"
#include "cuspwatch/sl4q/sl4q.hpp"
