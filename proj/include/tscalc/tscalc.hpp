#pragma once

#include "tscalc/core.hpp"
#include "tscalc/timescale.hpp"
#include "tscalc/scale_io.hpp"
#include "tscalc/expfun.hpp"
#include "tscalc/trigfun.hpp"
#include "tscalc/dynamics.hpp"
#include "tscalc/qcalc.hpp"
#include "tscalc/liegroup.hpp"
