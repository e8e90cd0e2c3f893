#pragma once

// Spectral zeta functions of circular (and a few other) graphs: evaluation,
// root location and counting, exact identities, scaling limits, and the
// K-derivative quadrature calculus.

#include "zetalab/errors.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/io.hpp"
#include "zetalab/limits.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/roots.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/spectra.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"
