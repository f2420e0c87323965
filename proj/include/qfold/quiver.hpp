#pragma once

#include <string>
#include <vector>

#include "qfold/cartan.hpp"
#include "qfold/report.hpp"

namespace qf {

// Finite quiver with an admissible automorphism.  Arrows are stored as the
// full set H with the opposite-orientation involution bar(h) = h ^ 1; even
// indices form the orientation Omega.
struct Quiver {
  struct Arrow {
    int src = 0;
    int dst = 0;
  };

  int nv = 0;
  std::vector<Arrow> H;        // size 2m, arrow h and bar(h) = h^1 adjacent
  std::vector<int> a_vertex;   // vertex permutation
  std::vector<int> a_arrow;    // arrow permutation, commutes with bar
  int order = 1;               // o = order of a

  // Orbit bookkeeping (derived from a_vertex).
  std::vector<int> orbit_of;               // vertex -> orbit index
  std::vector<std::vector<int>> orbits;    // orbit index -> vertices
  std::vector<std::string> vertex_name;    // "(i',r)" labels for display

  static int bar(int h) { return h ^ 1; }
  bool in_omega(int h) const { return (h & 1) == 0; }
  int arrow_count() const { return static_cast<int>(H.size()); }
  // Unoriented arrows (pairs {h, bar h}) joining the two vertex orbits.
  long unoriented_between(int orbit_a, int orbit_b) const;
  void rebuild_orbits();
};

// Deterministic quiver with admissible automorphism realizing the datum:
// orbit for i' = {(i',r) : 0 <= r < s_i}, a cyclic on each orbit, and
// between orbits i' != j' exactly -c_{i'j'} s_{i'} unoriented arrows laid
// out in free a-orbits; Omega points from the smaller orbit index to the
// larger.  o = lcm of the orbit sizes.
Quiver fold_from_cartan(const CartanData& cd);

// Checks every structural clause; the report lists each violated one.
Report validate_admissible(const Quiver& q);

// Orbit counting inverse: I' = orbits, c_{i'j'} = -(unoriented arrows)/s_i'.
// Errors: NonIntegerEntry, NotAdmissible (loops or failed validation).
CartanData cartan_from_quiver(const Quiver& q);

// N-framed quiver: framing vertices i^k with arrows i -> i^k, a extended by
// a(i^k) = a(i)^k; omega[k] gives the a-invariant framing dimension vector
// indexed by orbit (one value per I' element).
struct FramedQuiver {
  Quiver base;
  int N = 0;
  std::vector<std::vector<long>> omega; // per framing copy, per orbit
  std::vector<Weight> lambda;           // dominant weight attached per copy
};

// omega entries are per-orbit values; a per-vertex form is also accepted and
// must be constant on orbits (error NonInvariantFraming otherwise).
FramedQuiver frame(const Quiver& q, int N, const std::vector<std::vector<long>>& omega);

// Materialized framed quiver with the automorphism extended by a(i^k) = a(i)^k.
Quiver full_quiver(const FramedQuiver& f);

// Underlying symmetric datum of the quiver (forget a): one index per vertex,
// c_xy = -(unoriented arrows between x and y).
CartanData unfolded_cartan(const Quiver& q);

} // namespace qf
