#pragma once

#include "tetra/scalar.hpp"
#include "tetra/errors.hpp"
#include "tetra/band.hpp"
#include "tetra/matrix.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/core.hpp"
#include "tetra/factorization.hpp"
#include "tetra/polynomials.hpp"
#include "tetra/tncheck.hpp"
#include "tetra/darboux.hpp"
#include "tetra/families.hpp"
