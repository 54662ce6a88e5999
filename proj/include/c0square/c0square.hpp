#pragma once

// Umbrella header.

#include "c0square/analysis.hpp"
#include "c0square/blaschke_product.hpp"
#include "c0square/complex_polynomial.hpp"
#include "c0square/corpus.hpp"
#include "c0square/errors.hpp"
#include "c0square/model_operator.hpp"
#include "c0square/oracle.hpp"
#include "c0square/projection_pair.hpp"
#include "c0square/rational_function.hpp"
#include "c0square/rng.hpp"
#include "c0square/theta_function.hpp"
