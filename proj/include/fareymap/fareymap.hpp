#pragma once

// Umbrella header for the fareymap library.

#include "fareymap/errors.hpp"
#include "fareymap/export.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/graph.hpp"
#include "fareymap/map.hpp"
#include "fareymap/metrics.hpp"
#include "fareymap/modular.hpp"
#include "fareymap/petrie.hpp"
#include "fareymap/psl2.hpp"
#include "fareymap/render.hpp"
#include "fareymap/verify.hpp"
