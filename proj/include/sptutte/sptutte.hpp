#pragma once

// Exact Potts model partition function (multivariate Tutte polynomial) on
// series-parallel graphs, in linear time via decomposition trees, with a
// brute-force oracle, polynomial-in-q recovery, a seeded random SP-graph
// generator, and a wide-exponent float lane for benchmarking.

#include "sptutte/errors.hpp"
#include "sptutte/rational.hpp"
#include "sptutte/scaled_double.hpp"
#include "sptutte/graph.hpp"
#include "sptutte/graph_io.hpp"
#include "sptutte/generator.hpp"
#include "sptutte/reduction.hpp"
#include "sptutte/sp_tree.hpp"
#include "sptutte/evaluate.hpp"
#include "sptutte/poly.hpp"
#include "sptutte/oracle.hpp"
