#pragma once

#include "rauzy/cache.hpp"
#include "rauzy/diagram.hpp"
#include "rauzy/errors.hpp"
#include "rauzy/geometry.hpp"
#include "rauzy/induction.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/rational.hpp"
#include "rauzy/spin.hpp"
#include "rauzy/theorem.hpp"
#include "rauzy/version.hpp"
