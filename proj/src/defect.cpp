#include "xgbm/defect.hpp"
