#ifndef MEKR_MEKR_HPP
#define MEKR_MEKR_HPP

#include "mekr/bijection.hpp"
#include "mekr/bitset.hpp"
#include "mekr/combinatorics.hpp"
#include "mekr/compression.hpp"
#include "mekr/families.hpp"
#include "mekr/graph.hpp"
#include "mekr/io.hpp"
#include "mekr/multiset.hpp"
#include "mekr/solver.hpp"

#endif
