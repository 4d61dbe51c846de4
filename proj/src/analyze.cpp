#include "kolab/analyze.hpp"
