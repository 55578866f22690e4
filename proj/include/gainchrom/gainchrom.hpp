#pragma once

#include "gainchrom/chromatic.hpp"
#include "gainchrom/combinatorics.hpp"
#include "gainchrom/errors.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/families.hpp"
#include "gainchrom/gain_graph.hpp"
#include "gainchrom/identities.hpp"
#include "gainchrom/set_partition.hpp"
