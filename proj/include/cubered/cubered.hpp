#pragma once

// Umbrella header: exact reduction of unit-cube integrals of f(x_1+...+x_n)
// to weighted one-dimensional integrals, the closed-form log-gamma cube
// integral, and the numeric oracles used to verify both.

#include "cubered/closed_form.hpp"
#include "cubered/combinatorics.hpp"
#include "cubered/defining_sums.hpp"
#include "cubered/derivation.hpp"
#include "cubered/exact_cube.hpp"
#include "cubered/identities.hpp"
#include "cubered/integrand.hpp"
#include "cubered/loggamma.hpp"
#include "cubered/monte_carlo.hpp"
#include "cubered/poly.hpp"
#include "cubered/quadrature.hpp"
#include "cubered/rational.hpp"
#include "cubered/reduction.hpp"
#include "cubered/rng.hpp"
#include "cubered/verify.hpp"
