#include "bhc/gauge.hpp"

#include <cmath>
#include <string>

namespace bhc {

Gauge::Gauge(GaugeKind kind, int dim) : kind_(kind), dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("Gauge: dimension must be positive");
  norm_bound_ = (kind == GaugeKind::EuclideanBall) ? 1.0 : std::sqrt(double(dim));
}

void Gauge::check_dim(const Vector& v, const char* where) const {
  if (v.size() != dim_)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

double Gauge::support(const Vector& x) const {
  check_dim(x, "Gauge::support");
  if (kind_ == GaugeKind::EuclideanBall) return x.norm();
  return x.lpNorm<1>();
}

Vector Gauge::project(const Vector& z) const {
  check_dim(z, "Gauge::project");
  if (kind_ == GaugeKind::EuclideanBall) {
    double nz = z.norm();
    if (nz > 1.0) return z / nz;
    return z;
  }
  return z.cwiseMax(-1.0).cwiseMin(1.0);
}

double Gauge::distance_sq(const Vector& z) const {
  check_dim(z, "Gauge::distance_sq");
  return (z - project(z)).squaredNorm();
}

Vector Gauge::subgradient(const Vector& x, const Vector& a) const {
  check_dim(x, "Gauge::subgradient");
  check_dim(a, "Gauge::subgradient");
  Vector d = x - a;
  if (kind_ == GaugeKind::EuclideanBall) {
    double nd = d.norm();
    if (nd == 0.0) return Vector::Zero(dim_);
    return d / nd;
  }
  // sign(0) = 0
  return d.unaryExpr([](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); });
}

Gauge make_gauge(const std::string& name, int dim) {
  if (name == "l2") return Gauge(GaugeKind::EuclideanBall, dim);
  if (name == "l1") return Gauge(GaugeKind::UnitBox, dim);
  throw std::invalid_argument("unknown gauge: " + name + " (expected l2 or l1)");
}

const char* gauge_name(GaugeKind kind) {
  return kind == GaugeKind::EuclideanBall ? "l2" : "l1";
}

}  // namespace bhc
