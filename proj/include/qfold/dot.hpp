#pragma once

#include <string>

#include "qfold/crystal.hpp"
#include "qfold/quiver.hpp"

namespace qf {

// digraph with vertex labels "(i,r)" and one edge per orientation arrow;
// the automorphism is recorded in vertex tooltips.
std::string quiver_dot(const Quiver& q);
std::string framed_quiver_dot(const FramedQuiver& f);

// vertex label = weight coordinates, edge label = the index i'.
std::string crystal_dot(const Crystal& b);

} // namespace qf
