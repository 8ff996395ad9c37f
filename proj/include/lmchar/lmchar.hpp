#pragma once

// Umbrella header: exact equivariant Poincaré–Serre polynomials of the
// Losev–Manin spaces and the symmetric-function machinery behind them.

#include "bisymfunc.hpp"
#include "characters.hpp"
#include "json_io.hpp"
#include "losev_manin.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "series.hpp"
#include "symfunc.hpp"
