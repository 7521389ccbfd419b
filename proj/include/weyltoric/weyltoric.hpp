#pragma once

#include "weyltoric/characters.hpp"
#include "weyltoric/int_matrix.hpp"
#include "weyltoric/invariants.hpp"
#include "weyltoric/numeric.hpp"
#include "weyltoric/poly.hpp"
#include "weyltoric/poset.hpp"
#include "weyltoric/root_system.hpp"
#include "weyltoric/sublattice.hpp"
