#pragma once

// Convenience umbrella: pulls in every public module header.

#include "dhs/config.hpp"
#include "dhs/csv.hpp"
#include "dhs/fft.hpp"
#include "dhs/grid_signal.hpp"
#include "dhs/hardy.hpp"
#include "dhs/index_functions.hpp"
#include "dhs/peak_model.hpp"
#include "dhs/peaks_deconv.hpp"
#include "dhs/quadrature.hpp"
#include "dhs/random.hpp"
#include "dhs/report.hpp"
#include "dhs/runner.hpp"
#include "dhs/scales.hpp"
#include "dhs/sharpen.hpp"
#include "dhs/spectral.hpp"
#include "dhs/verify.hpp"
