#ifndef EKNIGHT_EKNIGHT_HPP
#define EKNIGHT_EKNIGHT_HPP

#include "eknight/board.hpp"
#include "eknight/construct.hpp"
#include "eknight/corpus.hpp"
#include "eknight/dot.hpp"
#include "eknight/feasibility.hpp"
#include "eknight/search.hpp"
#include "eknight/tour.hpp"

#endif  // EKNIGHT_EKNIGHT_HPP
