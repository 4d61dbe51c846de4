#include "kolab/io.hpp"
