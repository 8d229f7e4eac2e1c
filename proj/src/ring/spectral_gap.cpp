#include <Eigen/Eigenvalues>

#include <limits>

#include "ncp4/ring/sylvester.hpp"

namespace ncp4 {

SpectralGap spectral_gap(const std::vector<double>& a, const std::vector<double>& b, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXd ma(n, n), mb(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      ma(i, j) = a[static_cast<std::size_t>(i * n + j)];
      mb(i, j) = b[static_cast<std::size_t>(i * n + j)];
    }
  const Eigen::VectorXcd ea = Eigen::EigenSolver<Eigen::MatrixXd>(ma, false).eigenvalues();
  const Eigen::VectorXcd eb = Eigen::EigenSolver<Eigen::MatrixXd>(mb, false).eigenvalues();
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) gap = std::min(gap, std::abs(ea(i) + eb(j)));
  return {gap};
}

}  // namespace ncp4
