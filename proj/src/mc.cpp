#include "xgbm/mc.hpp"
