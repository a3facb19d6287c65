#pragma once

#include "algebra.hpp"
#include "exact.hpp"
#include "expm.hpp"
#include "half_int.hpp"
#include "harmonics.hpp"
#include "matrix.hpp"
#include "quadrature.hpp"
