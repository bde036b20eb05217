#ifndef XGBM_DENSITY_HPP
#define XGBM_DENSITY_HPP
#include "xgbm/types.hpp"
#endif
