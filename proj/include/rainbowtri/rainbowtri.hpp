#pragma once

#include "rainbowtri/coloring.hpp"
#include "rainbowtri/constructions.hpp"
#include "rainbowtri/errors.hpp"
#include "rainbowtri/graph.hpp"
#include "rainbowtri/graph6.hpp"
#include "rainbowtri/matching.hpp"
#include "rainbowtri/planarity.hpp"
#include "rainbowtri/rainbow.hpp"
#include "rainbowtri/search.hpp"
#include "rainbowtri/triangulation.hpp"
#include "rainbowtri/turan.hpp"
#include "rainbowtri/version.hpp"
