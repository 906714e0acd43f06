#pragma once

#include "roughheston/critical_moments.hpp"
#include "roughheston/errors.hpp"
#include "roughheston/explosion_bounds.hpp"
#include "roughheston/heston.hpp"
#include "roughheston/implied_vol.hpp"
#include "roughheston/kernels.hpp"
#include "roughheston/mittag_leffler.hpp"
#include "roughheston/model.hpp"
#include "roughheston/riccati.hpp"
#include "roughheston/table.hpp"
#include "roughheston/volterra.hpp"
