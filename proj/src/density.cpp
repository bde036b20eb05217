#include "xgbm/density.hpp"
