#pragma once

#include "circprime/arith.hpp"
#include "circprime/circle_map.hpp"
#include "circprime/claims.hpp"
#include "circprime/errors.hpp"
#include "circprime/limits.hpp"
#include "circprime/natural.hpp"
#include "circprime/pseudoprime.hpp"
#include "circprime/report.hpp"
