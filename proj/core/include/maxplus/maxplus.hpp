#pragma once

#include "maxplus/error.hpp"
#include "maxplus/kernel.hpp"
#include "maxplus/kernel_io.hpp"
#include "maxplus/martin.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/paths.hpp"
#include "maxplus/star.hpp"
#include "maxplus/value.hpp"
#include "maxplus/lq/contour.hpp"
#include "maxplus/lq/flow.hpp"
#include "maxplus/lq/harmonic.hpp"
#include "maxplus/lq/kernel.hpp"
