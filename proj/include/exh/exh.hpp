#pragma once

#include "exh/convert.hpp"
#include "exh/demyanov.hpp"
#include "exh/error.hpp"
#include "exh/eval.hpp"
#include "exh/family.hpp"
#include "exh/io.hpp"
#include "exh/kernels.hpp"
#include "exh/payoff.hpp"
#include "exh/polytope.hpp"
#include "exh/reduce.hpp"
#include "exh/sampler.hpp"
#include "exh/tolerances.hpp"
#include "exh/verify.hpp"
