// Umbrella header: exact simulation of entanglement dynamics in driven
// spin-1/2 Ising chains.
#pragma once

#include "spinchain/domino.hpp"
#include "spinchain/evolution.hpp"
#include "spinchain/hilbert.hpp"
#include "spinchain/model.hpp"
#include "spinchain/observables.hpp"
#include "spinchain/scenario.hpp"
#include "spinchain/states.hpp"
#include "spinchain/timeseries.hpp"
#include "spinchain/types.hpp"
