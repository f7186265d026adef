#pragma once

#include "lambdakit/binary_matrix.hpp"
#include "lambdakit/classifier.hpp"
#include "lambdakit/count.hpp"
#include "lambdakit/enumerator.hpp"
#include "lambdakit/error.hpp"
#include "lambdakit/formulas.hpp"
#include "lambdakit/profile_dp.hpp"
#include "lambdakit/render.hpp"
#include "lambdakit/verify.hpp"
