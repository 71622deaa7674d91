#ifndef BHC_GAUGE_HPP
#define BHC_GAUGE_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace bhc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class GaugeKind { EuclideanBall, UnitBox };

// Distance layer built on the support function sigma_F of a closed bounded
// convex set F with 0 in its interior.  The ball gives the l2 norm, the box
// the l1 norm.  Objects are immutable; all operations are pure.
class Gauge {
 public:
  Gauge(GaugeKind kind, int dim);

  GaugeKind kind() const { return kind_; }
  int dim() const { return dim_; }
  // ||F|| = sup{ ||f|| : f in F }
  double norm_bound() const { return norm_bound_; }

  // sigma_F(x) = sup{ <x,y> : y in F }
  double support(const Vector& x) const;

  // Euclidean projection of z onto F.
  Vector project(const Vector& z) const;

  // Squared Euclidean distance from z to F; zero iff z in F.
  double distance_sq(const Vector& z) const;

  // A fixed element of the subdifferential of x -> sigma_F(x - a) at x.
  // Ball: (x-a)/||x-a||, or 0 at x = a.  Box: componentwise sign(x-a).
  Vector subgradient(const Vector& x, const Vector& a) const;

 private:
  void check_dim(const Vector& v, const char* where) const;

  GaugeKind kind_;
  int dim_;
  double norm_bound_;
};

Gauge make_gauge(const std::string& name, int dim);  // "l2" | "l1"
const char* gauge_name(GaugeKind kind);

}  // namespace bhc

#endif
