#pragma once

#include "bernlab/asymptotics.hpp"
#include "bernlab/best_approx.hpp"
#include "bernlab/constants.hpp"
#include "bernlab/error.hpp"
#include "bernlab/functions.hpp"
#include "bernlab/io.hpp"
#include "bernlab/numerics.hpp"
#include "bernlab/polynomial.hpp"
