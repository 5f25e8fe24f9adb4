#pragma once

#include "tripow/bell.hpp"
#include "tripow/corollary.hpp"
#include "tripow/error.hpp"
#include "tripow/expr.hpp"
#include "tripow/matrix.hpp"
#include "tripow/presets.hpp"
#include "tripow/rational.hpp"
#include "tripow/series.hpp"
#include "tripow/suites.hpp"
#include "tripow/verify.hpp"
