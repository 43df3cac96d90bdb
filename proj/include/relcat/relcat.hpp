#ifndef RELCAT_RELCAT_HPP
#define RELCAT_RELCAT_HPP

#include "relation.hpp"
#include "finite_map.hpp"
#include "chains.hpp"
#include "cocartesian.hpp"
#include "permutability.hpp"
#include "algebra.hpp"
#include "corpus.hpp"
#include "text_io.hpp"
#include "random.hpp"
#include "oracles.hpp"
#include "instance.hpp"
#include "catalog.hpp"
#include "harness.hpp"

#endif  // RELCAT_RELCAT_HPP
