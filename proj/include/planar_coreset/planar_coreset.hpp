#ifndef PLANAR_CORESET_PLANAR_CORESET_HPP_
#define PLANAR_CORESET_PLANAR_CORESET_HPP_

#include "planar_coreset/clique.hpp"
#include "planar_coreset/coreset.hpp"
#include "planar_coreset/errors.hpp"
#include "planar_coreset/generators.hpp"
#include "planar_coreset/graph.hpp"
#include "planar_coreset/hitting_set.hpp"
#include "planar_coreset/io.hpp"
#include "planar_coreset/kcenter.hpp"
#include "planar_coreset/lower_bounds.hpp"
#include "planar_coreset/set_system.hpp"
#include "planar_coreset/structures.hpp"

#endif  // PLANAR_CORESET_PLANAR_CORESET_HPP_
