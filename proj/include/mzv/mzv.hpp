#pragma once

/// @file mzv.hpp
/// @brief Umbrella header: exact multiple zeta values at negative integers.

#include "mzv/bernoulli.hpp"
#include "mzv/direct_sum.hpp"
#include "mzv/exponent_tuple.hpp"
#include "mzv/genfun.hpp"
#include "mzv/identities.hpp"
#include "mzv/polynomial.hpp"
#include "mzv/rational.hpp"
#include "mzv/series.hpp"
#include "mzv/umbral.hpp"
