#ifndef INTAPPROX_INTAPPROX_HPP
#define INTAPPROX_INTAPPROX_HPP

#include "intapprox/approximation.hpp"
#include "intapprox/bench.hpp"
#include "intapprox/compression.hpp"
#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"
#include "intapprox/generators.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/interval_function.hpp"
#include "intapprox/interval_poset.hpp"
#include "intapprox/linalg.hpp"
#include "intapprox/matrix.hpp"
#include "intapprox/mobius.hpp"
#include "intapprox/module.hpp"
#include "intapprox/pmod.hpp"

#endif  // INTAPPROX_INTAPPROX_HPP
