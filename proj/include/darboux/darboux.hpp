#pragma once

// Umbrella header: exact analysis of plane polynomial vector fields and
// their algebraic invariant curves.

#include "darboux/bipoly.hpp"
#include "darboux/certify.hpp"
#include "darboux/elim.hpp"
#include "darboux/errors.hpp"
#include "darboux/factorq.hpp"
#include "darboux/field.hpp"
#include "darboux/linsolve.hpp"
#include "darboux/local.hpp"
#include "darboux/numeric.hpp"
#include "darboux/parse.hpp"
#include "darboux/poly1.hpp"
#include "darboux/roots.hpp"
#include "darboux/search.hpp"
#include "darboux/singular.hpp"
#include "darboux/version.hpp"
