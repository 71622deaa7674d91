#include "bhc/smoothing.hpp"

namespace bhc {

static void check_mu(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("smoothing: mu must be positive");
}

double smooth_value(const Gauge& g, const Vector& x, const Vector& a, double mu) {
  check_mu(mu);
  // Factored as mu/2*(||z||^2 - d(z)^2), z = (x-a)/mu, to limit cancellation
  // when mu is tiny.
  Vector z = (x - a) / mu;
  return 0.5 * mu * (z.squaredNorm() - g.distance_sq(z));
}

Vector smooth_gradient(const Gauge& g, const Vector& x, const Vector& a, double mu) {
  check_mu(mu);
  return g.project((x - a) / mu);
}

}  // namespace bhc
