#pragma once

#include "sl2wt/arithmetic.hpp"
#include "sl2wt/functors.hpp"
#include "sl2wt/fusion.hpp"
#include "sl2wt/io.hpp"
#include "sl2wt/local_cat.hpp"
#include "sl2wt/pipeline.hpp"
#include "sl2wt/sl2_oracle.hpp"
#include "sl2wt/weight_cat.hpp"
