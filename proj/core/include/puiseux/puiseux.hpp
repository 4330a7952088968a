#pragma once

#include "puiseux/constructions.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/expr.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/limits.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/spec.hpp"
