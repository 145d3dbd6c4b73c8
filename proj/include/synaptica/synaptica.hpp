#ifndef SYNAPTICA_SYNAPTICA_HPP
#define SYNAPTICA_SYNAPTICA_HPP

// Umbrella header: the whole library.
#include "synaptica/audit.hpp"
#include "synaptica/calculus.hpp"
#include "synaptica/core.hpp"
#include "synaptica/field_of_sets.hpp"
#include "synaptica/io.hpp"
#include "synaptica/lattice.hpp"
#include "synaptica/spectral.hpp"

#endif
