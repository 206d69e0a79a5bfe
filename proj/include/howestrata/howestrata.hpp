#pragma once

#include "howestrata/integer.hpp"
#include "howestrata/howe.hpp"
#include "howestrata/hasse.hpp"
#include "howestrata/diophantine.hpp"
#include "howestrata/strata.hpp"
