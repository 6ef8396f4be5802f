#pragma once

#include "arimat/arimatroid.hpp"
#include "arimat/canonical.hpp"
#include "arimat/circuitgraph.hpp"
#include "arimat/errors.hpp"
#include "arimat/exactla.hpp"
#include "arimat/int_matrix.hpp"
#include "arimat/matrix_io.hpp"
#include "arimat/oracle.hpp"
#include "arimat/toric.hpp"
