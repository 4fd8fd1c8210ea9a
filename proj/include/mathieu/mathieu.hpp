#pragma once

#include "mathieu/errors.hpp"
#include "mathieu/params.hpp"
#include "mathieu/special.hpp"
#include "mathieu/coefficients.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/series.hpp"
#include "mathieu/criteria.hpp"
#include "mathieu/thresholds.hpp"
#include "mathieu/inequalities.hpp"
#include "mathieu/parallel.hpp"
#include "mathieu/disk.hpp"
#include "mathieu/theorems.hpp"
#include "mathieu/explorer.hpp"
