#pragma once

#include "qndsim/common.hpp"
#include "qndsim/statevector.hpp"
#include "qndsim/observables.hpp"
#include "qndsim/circuits.hpp"
#include "qndsim/rng.hpp"
#include "qndsim/random_states.hpp"
#include "qndsim/sampling.hpp"
