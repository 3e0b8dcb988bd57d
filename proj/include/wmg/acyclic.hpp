// Synthesis of acyclic (finite-run) behaviours via lattice embeddings and
// separating regions.
//
// A deterministic, persistent, totally reachable acyclic transition system
// embeds into the integer lattice by mapping each state to the Parikh
// vector of any path reaching it.  Synthesis succeeds exactly when the
// embedded point set contains every lattice point of its convex hull and
// every (state, disabled label) instance admits a separating region
//   value(x) = k + h * x_gain - l * x_loss  >= 0 on all points,
// with value >= l wherever `loss` is enabled and value < l at the instance.
// Each region becomes one place; counter places (one per label, weight one,
// no output) are appended only when distinct states would otherwise carry
// identical markings.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"

namespace wmg {

using LatticePoint = std::vector<long long>;

std::string point_to_string(const LatticePoint& point);  // "(1,2)"

struct LatticePointSet {
  std::vector<std::string> labels;  // dimension i counts labels[i]
  std::set<LatticePoint> points;

  int dimension() const { return static_cast<int>(labels.size()); }
  bool contains(const LatticePoint& p) const { return points.count(p) > 0; }
};

// Maps every state to its Parikh distance from the initial state.  Errors
// mirror parikh_distances; two states mapping to the same point error with
// InconsistentDistances (the embedding must be injective).
LatticePointSet embed(const Lts& lts);

struct ConvexityResult {
  bool convex = true;
  LatticePoint witness;  // a hull lattice point missing from the set

  explicit operator bool() const { return convex; }
};

// Checks that every integer point of the convex hull belongs to the set.
// Candidate points are scanned over the bounding box in lexicographic
// order; hull membership is an exact-rational feasibility LP.
ConvexityResult check_lattice_convex(const LatticePointSet& points);

// k + h * x_gain - l * x_loss, integer, coprime, with l >= 1 and h, k >= 0.
struct WmgRegion {
  std::optional<std::string> gain_label;
  std::string loss_label;
  long long k = 0;  // initial tokens
  long long h = 0;  // weight produced per gain firing
  long long l = 1;  // weight consumed per loss firing

  long long value_at(const LatticePoint& point,
                     const LatticePointSet& set) const;
  // The region separates (forbids) `loss` at `point` when value < l.
  bool separates(const LatticePoint& point, const LatticePointSet& set) const;
};

// Finds a region forbidding `label` at `point` while keeping every point
// non-negative and never blocking an arc of the set.  Gain candidates are
// tried in order (no gain first, then each other label); within one
// candidate the solution minimizes (l, h, k) lexicographically, so the
// output is canonical.  Errors: NoRegionExists.
WmgRegion find_separating_region(const LatticePointSet& points,
                                 const LatticePoint& point,
                                 const std::string& label);

struct AcyclicSynthesis {
  System system;
  std::vector<WmgRegion> regions;           // in solving order
  std::vector<std::string> counter_labels;  // labels given counter places
};

// Full pipeline: structural properties, acyclicity, embedding, lattice
// convexity, separation in lexicographic (state, label) order with region
// reuse, counter places for marking collisions, and certification of the
// result's reachability graph against the input.  Errors:
// PropertyBViolated, NotAcyclic, InconsistentDistances, NonConvex,
// NoRegionExists, CertificationFailed.
AcyclicSynthesis synthesize_acyclic(const Lts& lts);

}  // namespace wmg
