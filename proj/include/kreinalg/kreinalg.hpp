#pragma once

// Umbrella header for the whole library.

#include "kreinalg/cli.hpp"
#include "kreinalg/decomposition.hpp"
#include "kreinalg/eigen.hpp"
#include "kreinalg/errors.hpp"
#include "kreinalg/form.hpp"
#include "kreinalg/json_io.hpp"
#include "kreinalg/matrix.hpp"
#include "kreinalg/operators.hpp"
#include "kreinalg/pencil.hpp"
#include "kreinalg/random.hpp"
#include "kreinalg/solve.hpp"
#include "kreinalg/sweep.hpp"
#include "kreinalg/uncertainty.hpp"
#include "kreinalg/wavepacket.hpp"
