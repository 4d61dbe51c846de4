#include "kolab/grid.hpp"
