#ifndef XGBM_MC_HPP
#define XGBM_MC_HPP
#include "xgbm/types.hpp"
#endif
