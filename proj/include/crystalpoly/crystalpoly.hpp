#pragma once

#include "crystalpoly/braid.hpp"
#include "crystalpoly/builtins.hpp"
#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal.hpp"
#include "crystalpoly/crystal_graph.hpp"
#include "crystalpoly/polyhedral.hpp"
#include "crystalpoly/special.hpp"
#include "crystalpoly/tensor.hpp"
#include "crystalpoly/types.hpp"
#include "crystalpoly/zcrystal.hpp"
