#pragma once

#include "mbs/betweenness.hpp"
#include "mbs/constructions.hpp"
#include "mbs/enumeration.hpp"
#include "mbs/errors.hpp"
#include "mbs/geodesics.hpp"
#include "mbs/graph.hpp"
#include "mbs/io.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/metrizability.hpp"
#include "mbs/parallel.hpp"
#include "mbs/rational.hpp"
#include "mbs/recognition.hpp"
#include "mbs/simplex.hpp"
#include "mbs/weighted_graph.hpp"
