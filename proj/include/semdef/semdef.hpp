#pragma once

#include "semdef/bounds.hpp"
#include "semdef/constructions.hpp"
#include "semdef/errors.hpp"
#include "semdef/graph.hpp"
#include "semdef/labeling.hpp"
#include "semdef/solver.hpp"
