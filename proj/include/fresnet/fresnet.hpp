#pragma once

#include "fresnet/errors.hpp"
#include "fresnet/experiments.hpp"
#include "fresnet/jet.hpp"
#include "fresnet/jump_matcher.hpp"
#include "fresnet/lu.hpp"
#include "fresnet/metrics.hpp"
#include "fresnet/network.hpp"
#include "fresnet/piecewise_builder.hpp"
#include "fresnet/quadrature.hpp"
#include "fresnet/serialize.hpp"
#include "fresnet/sign.hpp"
#include "fresnet/smooth_approx.hpp"
#include "fresnet/targets.hpp"
#include "fresnet/trig_hermite.hpp"
