#pragma once

#include "automaton.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "geodesic.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "linear_solver.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"
