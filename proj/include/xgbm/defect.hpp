#ifndef XGBM_DEFECT_HPP
#define XGBM_DEFECT_HPP
#include "xgbm/types.hpp"
#endif
