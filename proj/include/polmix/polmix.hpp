#pragma once

// Umbrella header.

#include "polmix/constants.hpp"
#include "polmix/model.hpp"
#include "polmix/jacobi.hpp"
#include "polmix/polariton.hpp"
#include "polmix/spectra.hpp"
#include "polmix/sweep.hpp"
#include "polmix/csv.hpp"
#include "polmix/config.hpp"
#include "polmix/presets.hpp"
