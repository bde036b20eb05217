#include "xgbm/harness.hpp"
