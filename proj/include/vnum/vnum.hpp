#pragma once

#include "vnum/asymptotics.hpp"
#include "vnum/engine.hpp"
#include "vnum/error.hpp"
#include "vnum/graph.hpp"
#include "vnum/graph_text.hpp"
#include "vnum/monomial.hpp"
#include "vnum/text.hpp"
