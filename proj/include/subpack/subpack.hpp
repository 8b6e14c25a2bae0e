#pragma once

#include "subpack/bench.hpp"
#include "subpack/closed_form.hpp"
#include "subpack/genfunc.hpp"
#include "subpack/numeric.hpp"
#include "subpack/params.hpp"
#include "subpack/recursion.hpp"
#include "subpack/suite.hpp"
#include "subpack/sweep.hpp"
#include "subpack/verifier.hpp"
