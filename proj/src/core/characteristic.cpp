#include "characteristic.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace {

struct ScaledHyp {
  complexd sinh_v, cosh_v;  // sinh/cosh scaled by exp(-|Re r|)
};

ScaledHyp scaled_hyp(complexd r) {
  const double s = std::abs(r.real());
  const complexd ep = std::exp(r - s);   // |e^{r-s}| <= 1
  const complexd em = std::exp(-r - s);  // |e^{-r-s}| <= 1
  return {0.5 * (ep - em), 0.5 * (ep + em)};
}

}  // namespace

complexd char_equal_speed(complexd lambda, const SystemParams& p) {
  if (p.a != 1.0) throw std::invalid_argument("char_equal_speed needs a == 1");
  if (lambda == complexd{0.0, 0.0})
    throw std::invalid_argument("lambda must be nonzero");
  const complexd r1 = lambda * std::sqrt(1.0 + complexd{0.0, 1.0} * p.b / lambda);
  const complexd r2 = lambda * std::sqrt(1.0 - complexd{0.0, 1.0} * p.b / lambda);
  const auto h1 = scaled_hyp(r1);
  const auto h2 = scaled_hyp(r2);
  const complexd pref = std::pow(lambda + p.frac.eta, p.frac.alpha - 1.0);
  return 2.0 * p.frac.gamma * pref * h1.sinh_v * h2.sinh_v +
         (r1 / lambda) * h1.cosh_v * h2.sinh_v +
         (r2 / lambda) * h1.sinh_v * h2.cosh_v;
}

complexd char_general_speed(complexd lambda, const SystemParams& p) {
  if (p.a == 1.0)
    throw std::invalid_argument("char_general_speed needs a != 1");
  if (lambda == complexd{0.0, 0.0})
    throw std::invalid_argument("lambda must be nonzero");
  const double a = p.a;
  const complexd inner =
      std::sqrt(1.0 - 4.0 * a * p.b * p.b / ((a - 1.0) * (a - 1.0) * lambda * lambda));
  const complexd r1 = lambda * std::sqrt(((a + 1.0) + (a - 1.0) * inner) / (2.0 * a));
  const complexd r2 = lambda * std::sqrt(((a + 1.0) - (a - 1.0) * inner) / (2.0 * a));
  const auto h1 = scaled_hyp(r1);
  const auto h2 = scaled_hyp(r2);
  const complexd pref = std::pow(lambda + p.frac.eta, p.frac.alpha - 1.0);
  const complexd l2 = lambda * lambda;
  const complexd det =
      -a * p.frac.gamma * lambda * pref * (r1 * r1 - r2 * r2) * h1.sinh_v * h2.sinh_v -
      r1 * (a * r1 * r1 - l2) * h1.cosh_v * h2.sinh_v +
      r2 * (a * r2 * r2 - l2) * h1.sinh_v * h2.cosh_v;
  return det / ((a - 1.0) * l2 * lambda);
}

complexd characteristic(complexd lambda, const SystemParams& p) {
  return p.a == 1.0 ? char_equal_speed(lambda, p)
                    : char_general_speed(lambda, p);
}

}  // namespace fracwave
