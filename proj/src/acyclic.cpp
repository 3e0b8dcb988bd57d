#include "wmg/acyclic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "wmg/lp.hpp"

namespace wmg {

namespace {

int dimension_of(const LatticePointSet& set, const std::string& label) {
  auto it = std::find(set.labels.begin(), set.labels.end(), label);
  if (it == set.labels.end()) {
    fail(ErrorCode::LabelAbsent, "label '" + label + "' is not a dimension");
  }
  return static_cast<int>(it - set.labels.begin());
}

bool lts_has_cycle(const Lts& lts) {
  std::vector<int> color(lts.num_states(), 0);
  std::function<bool(int)> visit = [&](int s) -> bool {
    color[s] = 1;
    for (const auto& [l, t] : lts.out(s)) {
      if (color[t] == 1) return true;
      if (color[t] == 0 && visit(t)) return true;
    }
    color[s] = 2;
    return false;
  };
  for (int s = 0; s < lts.num_states(); ++s) {
    if (color[s] == 0 && visit(s)) return true;
  }
  return false;
}

// Per-state lattice points (by state index) plus the point set.
std::pair<LatticePointSet, std::vector<LatticePoint>> embed_states(
    const Lts& lts) {
  auto distances = parikh_distances(lts);
  LatticePointSet set;
  set.labels = lts.labels();
  std::vector<LatticePoint> state_points(lts.num_states());
  std::map<LatticePoint, std::string> owner;
  for (int s = 0; s < lts.num_states(); ++s) {
    const ParikhVector& p = distances.at(lts.state_name(s));
    LatticePoint point;
    for (const auto& label : set.labels) point.push_back(p.at(label));
    auto [it, inserted] = owner.emplace(point, lts.state_name(s));
    if (!inserted) {
      fail(ErrorCode::InconsistentDistances,
           "states '" + it->second + "' and '" + lts.state_name(s) +
               "' embed to the same point " + point_to_string(point),
           point_to_string(point));
    }
    set.points.insert(point);
    state_points[s] = std::move(point);
  }
  return {std::move(set), std::move(state_points)};
}

}  // namespace

std::string point_to_string(const LatticePoint& point) {
  std::string s = "(";
  for (size_t i = 0; i < point.size(); ++i) {
    s += (i ? "," : "") + std::to_string(point[i]);
  }
  return s + ")";
}

LatticePointSet embed(const Lts& lts) { return embed_states(lts).first; }

ConvexityResult check_lattice_convex(const LatticePointSet& set) {
  if (set.points.size() <= 1) return {};
  int dim = set.dimension();
  LatticePoint lo(dim), hi(dim);
  bool first = true;
  for (const auto& p : set.points) {
    for (int d = 0; d < dim; ++d) {
      lo[d] = first ? p[d] : std::min(lo[d], p[d]);
      hi[d] = first ? p[d] : std::max(hi[d], p[d]);
    }
    first = false;
  }

  // Convex-combination feasibility: q is in the hull iff some lambda >= 0
  // has sum(lambda) = 1 and sum(lambda_i * p_i) = q.
  std::vector<LatticePoint> points(set.points.begin(), set.points.end());
  int num_points = static_cast<int>(points.size());
  auto in_hull = [&](const LatticePoint& q) {
    std::vector<LinearConstraint> rows;
    for (int d = 0; d < dim; ++d) {
      LinearConstraint row;
      row.equality = true;
      row.rhs = Rat(q[d]);
      for (int i = 0; i < num_points; ++i) row.coeff.push_back(Rat(points[i][d]));
      rows.push_back(std::move(row));
    }
    LinearConstraint sum;
    sum.equality = true;
    sum.rhs = Rat(1);
    sum.coeff.assign(num_points, Rat(1));
    rows.push_back(std::move(sum));
    return solve_lp(num_points, rows).feasible;
  };

  // Scan the bounding box in lexicographic order so the witness (the first
  // hull point missing from the set) is canonical.
  LatticePoint q = lo;
  for (;;) {
    if (!set.contains(q) && in_hull(q)) {
      return {false, q};
    }
    int d = dim - 1;
    while (d >= 0 && q[d] == hi[d]) {
      q[d] = lo[d];
      --d;
    }
    if (d < 0) break;
    ++q[d];
  }
  return {};
}

long long WmgRegion::value_at(const LatticePoint& point,
                              const LatticePointSet& set) const {
  long long value = k - l * point[dimension_of(set, loss_label)];
  if (gain_label) value += h * point[dimension_of(set, *gain_label)];
  return value;
}

bool WmgRegion::separates(const LatticePoint& point,
                          const LatticePointSet& set) const {
  return value_at(point, set) < l;
}

WmgRegion find_separating_region(const LatticePointSet& set,
                                 const LatticePoint& point,
                                 const std::string& label) {
  int li = dimension_of(set, label);
  if (!set.contains(point)) {
    fail(ErrorCode::PreconditionViolated,
         "point " + point_to_string(point) + " is not in the set");
  }

  // Variables (k, h, l) >= 0.  `gain` < 0 encodes a region with no input
  // transition (h pinned to zero).
  auto try_gain = [&](int gain) -> std::optional<WmgRegion> {
    std::vector<LinearConstraint> rows;
    auto coeff_at = [&](const LatticePoint& p) {
      return std::vector<Rat>{Rat(1), Rat(gain >= 0 ? p[gain] : 0),
                              Rat(-p[li])};
    };
    rows.push_back({{Rat(0), Rat(0), Rat(1)}, Rat(1), false});  // l >= 1
    if (gain < 0) {
      rows.push_back({{Rat(0), Rat(1), Rat(0)}, Rat(0), true});  // h == 0
    }
    for (const auto& p : set.points) {
      rows.push_back({coeff_at(p), Rat(0), false});  // value >= 0 everywhere
      LatticePoint next = p;
      ++next[li];
      if (set.contains(next)) {
        // value >= l wherever the label must stay enabled.
        auto c = coeff_at(p);
        c[2] -= Rat(1);
        rows.push_back({std::move(c), Rat(0), false});
      }
    }
    {
      // Separation: value <= l - 1 at the forbidden point.
      auto c = coeff_at(point);
      for (auto& x : c) x = -x;
      c[2] += Rat(1);
      rows.push_back({std::move(c), Rat(1), false});
    }

    // Lexicographically minimize (l, h, k) for a canonical result.
    std::vector<Rat> values(3);
    static const int order[3] = {2, 1, 0};
    for (int step = 0; step < 3; ++step) {
      std::vector<Rat> objective(3, Rat(0));
      objective[order[step]] = Rat(1);
      LpResult r = solve_lp(3, rows, objective);
      if (!r.feasible) return std::nullopt;
      values[order[step]] = r.objective;
      std::vector<Rat> pin(3, Rat(0));
      pin[order[step]] = Rat(1);
      rows.push_back({std::move(pin), r.objective, true});
    }

    // Scale to the coprime integer representative.  Scaling up preserves
    // every constraint (the strict separation margin only grows); dividing
    // by the gcd preserves them because all quantities stay integral.
    long long denom = 1;
    for (const Rat& v : values) denom = lcm_ll(denom, v.den());
    long long k = (values[0] * Rat(denom)).num();
    long long h = (values[1] * Rat(denom)).num();
    long long l = (values[2] * Rat(denom)).num();
    long long g = gcd_ll(gcd_ll(k, h), l);
    if (g > 1) {
      k /= g;
      h /= g;
      l /= g;
    }
    WmgRegion region;
    if (gain >= 0) {
      assert(h > 0);  // otherwise the gain-free attempt would have succeeded
      region.gain_label = set.labels[gain];
    }
    region.loss_label = label;
    region.k = k;
    region.h = h;
    region.l = l;
    return region;
  };

  if (auto region = try_gain(-1)) return *region;
  for (int gain = 0; gain < set.dimension(); ++gain) {
    if (gain == li) continue;
    if (auto region = try_gain(gain)) return *region;
  }
  fail(ErrorCode::NoRegionExists,
       "no region forbids '" + label + "' at " + point_to_string(point),
       point_to_string(point) + " " + label);
}

AcyclicSynthesis synthesize_acyclic(const Lts& lts) {
  PropertyReport report = check_basic_properties(lts);
  if (!report.all()) {
    fail(ErrorCode::PropertyBViolated, report.first_failure());
  }
  if (lts_has_cycle(lts)) {
    fail(ErrorCode::NotAcyclic, "the input has a cycle");
  }
  auto [set, state_points] = embed_states(lts);
  ConvexityResult convex = check_lattice_convex(set);
  if (!convex) {
    fail(ErrorCode::NonConvex,
         "hull point " + point_to_string(convex.witness) +
             " is missing from the embedding",
         point_to_string(convex.witness));
  }

  // Separation instances in lexicographic (state, label) order, reusing any
  // region that already forbids the label at the state's point.
  std::vector<int> order(lts.num_states());
  for (int i = 0; i < lts.num_states(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lts.state_name(a) < lts.state_name(b);
  });

  AcyclicSynthesis result;
  int num_labels = static_cast<int>(lts.labels().size());
  for (int s : order) {
    for (int l = 0; l < num_labels; ++l) {
      if (lts.enables(s, l)) continue;
      const std::string& label = lts.label_name(l);
      const LatticePoint& p = state_points[s];
      bool covered = false;
      for (const auto& region : result.regions) {
        if (region.loss_label == label && region.separates(p, set)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      try {
        result.regions.push_back(find_separating_region(set, p, label));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoRegionExists) throw;
        fail(ErrorCode::NoRegionExists,
             "no region separates label '" + label + "' at state '" +
                 lts.state_name(s) + "' " + point_to_string(p),
             lts.state_name(s) + " " + label);
      }
    }
  }

  // Counter places: only when two states would carry identical markings.
  std::vector<std::vector<long long>> signatures(lts.num_states());
  for (int s = 0; s < lts.num_states(); ++s) {
    for (const auto& region : result.regions) {
      signatures[s].push_back(region.value_at(state_points[s], set));
    }
  }
  for (;;) {
    std::map<std::vector<long long>, int> seen;
    int s1 = -1, s2 = -1;
    for (int s : order) {
      auto [it, inserted] = seen.emplace(signatures[s], s);
      if (!inserted) {
        s1 = it->second;
        s2 = s;
        break;
      }
    }
    if (s1 < 0) break;
    int dim = -1;
    for (int d = 0; d < num_labels && dim < 0; ++d) {
      if (state_points[s1][d] != state_points[s2][d]) dim = d;
    }
    assert(dim >= 0);  // the embedding is injective
    result.counter_labels.push_back(lts.label_name(dim));
    for (int s = 0; s < lts.num_states(); ++s) {
      signatures[s].push_back(state_points[s][dim]);
    }
  }

  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  for (size_t i = 0; i < result.regions.size(); ++i) {
    const WmgRegion& region = result.regions[i];
    PlaceDescriptor desc;
    if (region.gain_label) {
      desc.input = *region.gain_label;
      desc.in_weight = region.h;
    }
    desc.output = region.loss_label;
    desc.out_weight = region.l;
    desc.initial_tokens = region.k;
    places.emplace_back("p" + std::to_string(i + 1), desc);
  }
  for (const auto& label : result.counter_labels) {
    PlaceDescriptor desc;
    desc.input = label;
    desc.in_weight = 1;
    places.emplace_back("c_" + label, desc);
  }
  result.system = build_system(places, lts.labels());

  try {
    Lts rg = reachability_graph(result.system, lts.num_states());
    IsoResult iso = lts_isomorphic(rg, lts);
    if (!iso) {
      fail(ErrorCode::CertificationFailed,
           "the synthesized net does not reproduce the input: " + iso.detail);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundExceeded) throw;
    fail(ErrorCode::CertificationFailed,
         "the synthesized net reaches more markings than the input has "
         "states");
  }
  return result;
}

}  // namespace wmg
