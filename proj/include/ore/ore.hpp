#pragma once

#include "ore/algebra.hpp"
#include "ore/bc_dependence.hpp"
#include "ore/centralizer.hpp"
#include "ore/coeff_poly.hpp"
#include "ore/degree.hpp"
#include "ore/error.hpp"
#include "ore/format.hpp"
#include "ore/matrix.hpp"
#include "ore/ore_ring.hpp"
#include "ore/parser.hpp"
#include "ore/random.hpp"
#include "ore/rational.hpp"
#include "ore/serialize.hpp"
#include "ore/sigma_delta.hpp"
