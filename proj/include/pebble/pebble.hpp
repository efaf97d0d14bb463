#pragma once

#include "pebble/error.hpp"
#include "pebble/graph.hpp"
#include "pebble/family_spec.hpp"
#include "pebble/distribution.hpp"
#include "pebble/state_table.hpp"
#include "pebble/solver.hpp"
#include "pebble/witness.hpp"
#include "pebble/parallel.hpp"
#include "pebble/exact.hpp"
#include "pebble/formulas.hpp"
#include "pebble/extremal.hpp"
#include "pebble/tree_catalog.hpp"
