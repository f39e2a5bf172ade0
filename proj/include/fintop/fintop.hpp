#pragma once

// Umbrella header.

#include "fintop/asphericity.hpp"
#include "fintop/board.hpp"
#include "fintop/cellular.hpp"
#include "fintop/coloring.hpp"
#include "fintop/common.hpp"
#include "fintop/corpus.hpp"
#include "fintop/covering.hpp"
#include "fintop/homology.hpp"
#include "fintop/io.hpp"
#include "fintop/models.hpp"
#include "fintop/pi1.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"
#include "fintop/smith.hpp"
