#ifndef CIRCDIST_FAMILY_HPP_
#define CIRCDIST_FAMILY_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "circdist/distinguishing.hpp"
#include "circdist/error.hpp"
#include "circdist/graph.hpp"

namespace circdist {

struct FamilyMember {
  CmpSpec spec;
  std::size_t target_d = 0;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

/// Same-order circulants C(m_i, p_i) with D(C(m_i, p_i)) = d_i.
struct FamilyPlan {
  std::vector<std::size_t> targets;
  std::vector<FamilyMember> members;
  std::size_t order = 0;
  /// order / base, where base is prod(m_i) for the product construction and
  /// lcm(m_i) for the minimal-order search.
  std::size_t scaling_k = 1;
  /// Some member is a plain cycle (m = 1). Its value comes from the cycle
  /// case of the closed form rather than the m >= 2 circulant argument.
  bool has_cycle_member = false;

  friend bool operator==(const FamilyPlan&, const FamilyPlan&) = default;
};

/// Throws unless targets are strictly increasing, each >= 2, at least two of them.
inline void validate_targets(std::span<const std::size_t> targets) {
  if (targets.size() < 2) throw ValidationError("need at least two target values");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 2) throw ValidationError("target values must be >= 2");
    if (i > 0 && targets[i] <= targets[i - 1]) {
      throw ValidationError("target values must be strictly increasing");
    }
  }
}

namespace detail {

inline std::size_t checked_multiply(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw ValidationError("family order overflows");
  }
  return a * b;
}

// Members whose closed-form value is m + 1.
inline bool in_m_plus_one_regime(std::size_t m, std::size_t p) {
  return p >= 2 && p != 4 && (m >= 2 || p >= 6);
}

inline FamilyPlan make_plan(std::span<const std::size_t> targets, std::size_t order, std::size_t scaling_k) {
  FamilyPlan plan{{targets.begin(), targets.end()}, {}, order, scaling_k, false};
  for (std::size_t d : targets) {
    const std::size_t m = d - 1;
    plan.members.push_back({CmpSpec{m, order / m}, d});
    plan.has_cycle_member = plan.has_cycle_member || m == 1;
  }
  return plan;
}

}  // namespace detail

/// Re-checks a plan against the closed form: common order, and
/// cmp_distinguishing_formula(m_i, p_i) == d_i for every member.
inline bool plan_is_valid(const FamilyPlan& plan) {
  if (plan.members.size() != plan.targets.size()) return false;
  for (std::size_t i = 0; i < plan.members.size(); ++i) {
    const auto& member = plan.members[i];
    if (member.spec.order() != plan.order || member.target_d != plan.targets[i]) return false;
    if (!in_cmp_formula_domain(member.spec) || cmp_distinguishing_formula(member.spec) != member.target_d) {
      return false;
    }
  }
  return true;
}

/// m_i = d_i - 1, p_i = prod_{j != i} m_j, scaled by the least k >= 1 that puts
/// every (m_i, k p_i) in the m+1 regime of the closed form.
inline FamilyPlan build_connected_family(std::span<const std::size_t> targets) {
  validate_targets(targets);
  std::size_t base = 1;
  for (std::size_t d : targets) base = detail::checked_multiply(base, d - 1);

  for (std::size_t k = 1;; ++k) {
    const bool ok = std::all_of(targets.begin(), targets.end(), [&](std::size_t d) {
      const std::size_t m = d - 1;
      return detail::in_m_plus_one_regime(m, k * (base / m));
    });
    if (ok) return detail::make_plan(targets, detail::checked_multiply(k, base), k);
  }
}

/// Smallest n such that every m_i = d_i - 1 divides n and C(m_i, n/m_i) has
/// distinguishing number d_i. Searches the multiples of lcm(m_i) upwards.
inline FamilyPlan minimal_common_order(std::span<const std::size_t> targets) {
  validate_targets(targets);
  std::size_t base = 1;
  for (std::size_t d : targets) base = std::lcm(base, d - 1);

  for (std::size_t k = 1;; ++k) {
    const std::size_t n = detail::checked_multiply(k, base);
    const bool ok = std::all_of(targets.begin(), targets.end(), [&](std::size_t d) {
      const CmpSpec spec{d - 1, n / (d - 1)};
      return in_cmp_formula_domain(spec) && cmp_distinguishing_formula(spec) == d;
    });
    if (ok) return detail::make_plan(targets, n, k);
  }
}

// ---------------------------------------------------------------------------
// Disconnected construction

struct DisconnectedMember {
  Graph graph;
  std::size_t target_d = 0;
  /// e.g. "K_3 + P_2", "K_5", "P_4".
  std::string description;
};

struct DisconnectedPlan {
  std::vector<std::size_t> targets;
  std::vector<DisconnectedMember> members;
  std::size_t order = 0;
};

/// n = d_r; member r is K_{d_r}, member i < r is K_{d_i} + P_{n - d_i}, except
/// that member 1 is P_4 when d_1 = 2 and n = 4 (K_2 + P_2 would have two
/// isomorphic components).
inline DisconnectedPlan build_disconnected_family(std::span<const std::size_t> targets) {
  validate_targets(targets);
  const std::size_t n = targets.back();
  DisconnectedPlan plan{{targets.begin(), targets.end()}, {}, n};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::size_t d = targets[i];
    if (i + 1 == targets.size()) {
      plan.members.push_back({complete_graph(d), d, "K_" + std::to_string(d)});
    } else if (i == 0 && d == 2 && n == 4) {
      plan.members.push_back({path_graph(4), d, "P_4"});
    } else {
      plan.members.push_back({disjoint_union(complete_graph(d), path_graph(n - d)), d,
                              "K_" + std::to_string(d) + " + P_" + std::to_string(n - d)});
    }
  }
  return plan;
}

}  // namespace circdist

#endif  // CIRCDIST_FAMILY_HPP_
