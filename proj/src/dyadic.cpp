#include "kolab/dyadic.hpp"
