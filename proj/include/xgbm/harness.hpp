#ifndef XGBM_HARNESS_HPP
#define XGBM_HARNESS_HPP
#include "xgbm/types.hpp"
#endif
