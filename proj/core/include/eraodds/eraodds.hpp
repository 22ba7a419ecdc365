#pragma once

#include "eraodds/analysis.hpp"
#include "eraodds/detrend.hpp"
#include "eraodds/dilution.hpp"
#include "eraodds/error.hpp"
#include "eraodds/population.hpp"
#include "eraodds/rankings.hpp"
#include "eraodds/report.hpp"
#include "eraodds/tailprob.hpp"
