#pragma once

// Umbrella header.

#include "ndmech/ast.hpp"
#include "ndmech/choice_map.hpp"
#include "ndmech/dynamics.hpp"
#include "ndmech/errors.hpp"
#include "ndmech/gcl.hpp"
#include "ndmech/parse.hpp"
#include "ndmech/state_set.hpp"
#include "ndmech/state_space.hpp"
#include "ndmech/transformer.hpp"
#include "ndmech/varspace.hpp"
