#include "kolab/simulate.hpp"
