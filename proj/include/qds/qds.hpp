#pragma once

// Umbrella header for the DS-code workbench.

#include "bounds_asymptotic.hpp"
#include "bounds_finite.hpp"
#include "code.hpp"
#include "ensemble.hpp"
#include "enumerators.hpp"
#include "f2.hpp"
#include "gf4.hpp"
#include "io.hpp"
#include "krawtchouk.hpp"
#include "lp.hpp"
#include "simulate.hpp"
#include "version.hpp"
