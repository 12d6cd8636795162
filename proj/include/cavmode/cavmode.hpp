#pragma once

// Single damped cavity mode: circuit constants, causal linear response,
// Casimir free energies, Floquet stability of periodic frequency modulation,
// photon-pair statistics, and pump-noise saturation.

#include "cavmode/damping.hpp"
#include "cavmode/errors.hpp"
#include "cavmode/floquet.hpp"
#include "cavmode/io.hpp"
#include "cavmode/mode.hpp"
#include "cavmode/ode.hpp"
#include "cavmode/photon_stats.hpp"
#include "cavmode/pulse.hpp"
#include "cavmode/quadrature.hpp"
#include "cavmode/response.hpp"
#include "cavmode/saturation.hpp"
#include "cavmode/thermo.hpp"
#include "cavmode/units.hpp"
