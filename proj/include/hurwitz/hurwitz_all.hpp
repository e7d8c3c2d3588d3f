#ifndef HURWITZ_HURWITZ_ALL_HPP
#define HURWITZ_HURWITZ_ALL_HPP

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/class_table.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/finite_group.hpp"
#include "hurwitz/format.hpp"
#include "hurwitz/graph.hpp"
#include "hurwitz/graph_builders.hpp"
#include "hurwitz/graph_count.hpp"
#include "hurwitz/graph_moves.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/power_series.hpp"
#include "hurwitz/presentation.hpp"
#include "hurwitz/rat_matrix.hpp"
#include "hurwitz/ratfunc.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/work_cap.hpp"

#endif  // HURWITZ_HURWITZ_ALL_HPP
