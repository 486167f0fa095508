#pragma once

#include "errors.hpp"
#include "gauss_kernels.hpp"
#include "local_fields.hpp"
#include "moebius.hpp"
#include "padic.hpp"
#include "primes.hpp"
#include "product_verifier.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "special_functions.hpp"
#include "symbols.hpp"
