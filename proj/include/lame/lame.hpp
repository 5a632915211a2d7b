#ifndef LAME_LAME_HPP
#define LAME_LAME_HPP

// Umbrella header: series coefficients, convergence domain, ratio-limit
// bounds, elliptic change of variable, and the divergence experiment.

#include "lame/convergence.hpp"
#include "lame/elliptic.hpp"
#include "lame/errors.hpp"
#include "lame/experiment.hpp"
#include "lame/perron.hpp"
#include "lame/recurrence.hpp"

#endif // LAME_LAME_HPP
