#ifndef BHC_SMOOTHING_HPP
#define BHC_SMOOTHING_HPP

#include "bhc/gauge.hpp"

namespace bhc {

// Nesterov smoothing of phi(x) = sigma_F(x - a):
//   phi_mu(x) = (mu/2) * ( ||(x-a)/mu||^2 - d((x-a)/mu; F)^2 )
// Satisfies phi_mu(x) <= sigma_F(x-a) <= phi_mu(x) + (mu/2)*||F||^2.
double smooth_value(const Gauge& g, const Vector& x, const Vector& a, double mu);

// Gradient of phi_mu: P((x-a)/mu; F).  Always lies in F.
Vector smooth_gradient(const Gauge& g, const Vector& x, const Vector& a, double mu);

}  // namespace bhc

#endif
