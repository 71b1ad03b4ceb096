#pragma once

#include "fgmod/cohomology.hpp"
#include "fgmod/expression.hpp"
#include "fgmod/oracle.hpp"
#include "fgmod/verify.hpp"
