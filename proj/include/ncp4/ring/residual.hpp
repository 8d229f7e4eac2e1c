#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ncp4/ring/series.hpp"

namespace ncp4 {

/// What a check reports about a residual series: how far it is certified,
/// how many leading coefficients vanish and how large the rest is.
struct ResidualProfile {
  int reliable_order = -1;
  /// First order with a nonzero coefficient; reliable_order + 1 when none.
  int vanishing_order = 0;
  double max_residual = 0.0;
  std::vector<double> by_order;
  std::string first_nonzero;

  bool vanishes() const { return vanishing_order > reliable_order; }
};

template <Scalar T>
ResidualProfile profile(const Series<T>& r, double tol = 0.0) {
  ResidualProfile p;
  p.reliable_order = r.order();
  p.vanishing_order = r.order() + 1;
  for (int k = 0; k <= r.order(); ++k) {
    const auto& c = r.coeff(static_cast<std::size_t>(k));
    const double m = c.max_abs();
    p.by_order.push_back(m);
    p.max_residual = std::max(p.max_residual, m);
    if (p.vanishing_order > k && !c.is_zero(tol)) {
      p.vanishing_order = k;
      std::ostringstream os;
      os << "t^" << k << ": " << c;
      p.first_nonzero = os.str();
    }
  }
  return p;
}

/// Joint profile of several residual components (all must vanish).
inline ResidualProfile combine(const std::vector<ResidualProfile>& parts) {
  ResidualProfile p;
  if (parts.empty()) return p;
  p.reliable_order = parts.front().reliable_order;
  for (const auto& q : parts) p.reliable_order = std::min(p.reliable_order, q.reliable_order);
  p.vanishing_order = p.reliable_order + 1;
  p.by_order.assign(static_cast<std::size_t>(std::max(p.reliable_order + 1, 0)), 0.0);
  for (const auto& q : parts) {
    p.max_residual = std::max(p.max_residual, q.max_residual);
    for (std::size_t k = 0; k < p.by_order.size() && k < q.by_order.size(); ++k)
      p.by_order[k] = std::max(p.by_order[k], q.by_order[k]);
    if (q.vanishing_order < p.vanishing_order) {
      p.vanishing_order = q.vanishing_order;
      p.first_nonzero = q.first_nonzero;
    }
  }
  return p;
}

template <Scalar T>
ResidualProfile profile_all(const std::vector<Series<T>>& rs, double tol = 0.0) {
  std::vector<ResidualProfile> parts;
  parts.reserve(rs.size());
  for (const auto& r : rs) parts.push_back(profile(r, tol));
  return combine(parts);
}

}  // namespace ncp4
