#pragma once

#include "dynamo/activation.hpp"
#include "dynamo/decomposition.hpp"
#include "dynamo/error.hpp"
#include "dynamo/gadgets.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/oracle.hpp"
#include "dynamo/ordering.hpp"
#include "dynamo/rational.hpp"
#include "dynamo/solver.hpp"
#include "dynamo/strong_solver.hpp"
