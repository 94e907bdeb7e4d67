#pragma once

#include "singtaut/cech.hpp"
#include "singtaut/classify.hpp"
#include "singtaut/cycle.hpp"
#include "singtaut/dtilde.hpp"
#include "singtaut/fedder.hpp"
#include "singtaut/graph.hpp"
#include "singtaut/modp.hpp"
#include "singtaut/star_cohomology.hpp"
#include "singtaut/tangent.hpp"
#include "singtaut/taut.hpp"
