#pragma once

// Umbrella header: exact symmetric-polynomial decomposition over the
// rationals, the rational-function extension, and the classical
// applications built on them.

#include "sympoly/applications.hpp"
#include "sympoly/decompose.hpp"
#include "sympoly/elementary.hpp"
#include "sympoly/errors.hpp"
#include "sympoly/io.hpp"
#include "sympoly/monomial.hpp"
#include "sympoly/polynomial.hpp"
#include "sympoly/rational.hpp"
#include "sympoly/rational_function.hpp"
#include "sympoly/symmetry.hpp"
