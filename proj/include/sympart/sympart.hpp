#ifndef SYMPART_SYMPART_HPP
#define SYMPART_SYMPART_HPP

#include "sympart/partitions.hpp"
#include "sympart/qseries.hpp"
#include "sympart/rational.hpp"
#include "sympart/series.hpp"
#include "sympart/symmetric.hpp"

#endif
