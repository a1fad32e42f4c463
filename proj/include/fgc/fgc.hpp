#ifndef FGC_FGC_HPP
#define FGC_FGC_HPP

#include "fgc/arborescence.hpp"
#include "fgc/cuts.hpp"
#include "fgc/digraph.hpp"
#include "fgc/errors.hpp"
#include "fgc/exact.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"
#include "fgc/io.hpp"
#include "fgc/matroid.hpp"
#include "fgc/matroid_intersection.hpp"
#include "fgc/max_flow.hpp"
#include "fgc/min_cut.hpp"
#include "fgc/reduction.hpp"
#include "fgc/solver.hpp"
#include "fgc/union_find.hpp"

#endif  // FGC_FGC_HPP
