#include "agscale/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace agscale {

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels) {
  using Rule = boost::math::quadrature::gauss<double, 10>;
  const auto& abscissa = Rule::abscissa();  // positive half, ascending
  const auto& weight = Rule::weights();

  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * 10);
  rule.weights.reserve(static_cast<std::size_t>(panels) * 10);
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      rule.nodes.push_back(mid - half * abscissa[i]);
      rule.weights.push_back(half * weight[i]);
      rule.nodes.push_back(mid + half * abscissa[i]);
      rule.weights.push_back(half * weight[i]);
    }
  }
  return rule;
}

}  // namespace agscale
