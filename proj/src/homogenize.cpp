#include "kolab/homogenize.hpp"
