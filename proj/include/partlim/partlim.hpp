#pragma once

// Umbrella header: exact/float tables of the weighted partition
// statistic, the piecewise scaling limit, growth and convergence
// reports, the reciprocal-view transform checks, and the exporters.

#include "partlim/asymptotics.hpp"
#include "partlim/chebyshev.hpp"
#include "partlim/constants.hpp"
#include "partlim/errors.hpp"
#include "partlim/exp_integral.hpp"
#include "partlim/export.hpp"
#include "partlim/format.hpp"
#include "partlim/laplace.hpp"
#include "partlim/limit_function.hpp"
#include "partlim/partition.hpp"
#include "partlim/quadrature.hpp"
#include "partlim/rational.hpp"
#include "partlim/selfcheck.hpp"
#include "partlim/svg_plot.hpp"
#include "partlim/triangle.hpp"
