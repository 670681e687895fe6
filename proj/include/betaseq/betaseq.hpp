#pragma once

#include "config.hpp"
#include "discrepancy.hpp"
#include "io.hpp"
#include "measure.hpp"
#include "monna.hpp"
#include "numeration.hpp"
#include "odometer.hpp"
#include "qmc.hpp"
#include "sequence.hpp"
