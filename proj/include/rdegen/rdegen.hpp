#pragma once

// Umbrella header: combinatorics of k-subsets, block-diagonal weight
// matrices and their matching fields, the induced degree-2 fiber
// structure on the Pluecker ring, tableau transfer maps, the exact
// elimination oracle, and the survey driver.

#include "rdegen/errors.hpp"
#include "rdegen/subsets.hpp"
#include "rdegen/matching_field.hpp"
#include "rdegen/ideal.hpp"
#include "rdegen/tableaux.hpp"
#include "rdegen/linalg.hpp"
#include "rdegen/oracle.hpp"
#include "rdegen/survey.hpp"
