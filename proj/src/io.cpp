#include "fbl/common.hpp"
