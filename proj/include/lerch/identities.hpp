#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lerch/engine.hpp"

namespace lerch {

// Residuals |lhs - rhs| of the identities Phi satisfies. Phi values are
// computed through the dispatcher at min(tol, 1e-13): the residuals are
// absolute, and a^{-n} or 1/z factors would otherwise amplify the
// evaluation error past the thresholds below.

/// Phi(z,n,a+1) = (Phi(z,n,a) - a^{-n}) / z.
double residual_shift(Complex z, int n, Complex a, double tol = 1e-12);

struct LadderResidual {
  std::optional<double> down;  // order lowering, needs n >= 2
  double up = 0.0;             // order raising
};

/// down = |Phi(z,n-1,a) - a Phi(z,n,a) - z dPhi/dz|,
/// up   = |Phi(z,n+1,a) + (1/n) dPhi/da|,
/// derivatives by central differences with one Richardson step,
/// h = 1e-5 max(1, |x|).
LadderResidual residual_s_ladder(Complex z, int n, Complex a,
                                 double tol = 1e-12);

/// |z d/dz Phi(z,n+1,a) + a Phi(z,n+1,a) - Phi(z,n,a)|, the mixed
/// z/a differential equation reduced to first-order form.
double residual_pde(Complex z, int n, Complex a, double tol = 1e-12);

/// |Phi(z,n,a) + (-1)^n z^{-1} Phi(1/z,n,1-a) - trig_term|; the two Phi
/// values come from the dispatcher on opposite sides of the unit circle.
double residual_symmetry(Complex z, int n, Complex a, double tol = 1e-13);

/// |zeta(n,a) + (-1)^n zeta(n,1-a) - (-1)^{n-1} pi/(n-1)! d^{n-1}cot(pi a)|.
double residual_hurwitz_reflection(int n, Complex a, double tol = 1e-15);

/// |psi^(m)(a) - (-1)^m psi^(m)(1-a) + pi d^m cot(pi a)|.
double residual_polygamma_reflection(int m, Complex a, double tol = 1e-15);

/// |phi_pv - phi_series|.
double residual_theorem1(const LerchQuery& q, double tol = 1e-11);

// ---------------------------------------------------------------------------
// Seeded grids and the certification driver.

/// Deterministic uniform doubles from a 64-bit seed, identical on every
/// platform (std::uniform_real_distribution is not).
class GridRng {
 public:
  explicit GridRng(std::uint64_t seed) : state_(seed) {}
  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// z in the cut disc off (0,1), n in 1..5, a in [0.05,0.95] x [-0.5,0.5].
std::vector<LerchQuery> symmetry_grid(std::uint64_t seed, std::size_t count);
/// z in the cut disc, a satisfying the principal-value conditions.
std::vector<LerchQuery> theorem1_grid(std::uint64_t seed, std::size_t count);
/// Alternates |z| in [0.2, 0.8] and |z| in [1.25, 4], off the real axis.
std::vector<LerchQuery> identity_web_grid(std::uint64_t seed,
                                          std::size_t count);
/// (order, a) pairs with a in (0,1) x (-0.5, 0.5) away from the integers.
struct ReflectionPoint {
  int order;
  Complex a;
};
std::vector<ReflectionPoint> reflection_grid(std::uint64_t seed,
                                             std::size_t count, int min_order,
                                             int max_order);

enum class Suite { All, Symmetry, Recurrences, Reflections, Theorem1 };
Suite suite_from_string(const std::string& name);

struct CheckRecord {
  std::string identity;
  LerchQuery point;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;  // error text when the residual could not be computed
};

/// Residual thresholds per identity.
inline constexpr double kShiftThreshold = 1e-10;
inline constexpr double kLadderThreshold = 1e-6;
inline constexpr double kPdeThreshold = 1e-6;
inline constexpr double kSymmetryThreshold = 1e-9;
inline constexpr double kReflectionThreshold = 1e-9;
inline constexpr double kTheorem1Threshold = 1e-8;
inline constexpr double kHurwitzSpotThreshold = 1e-10;

/// Evaluates every identity of `suite` on `grid` seeded points. Points are
/// processed in parallel; records come back in a fixed order.
std::vector<CheckRecord> run_suite(Suite suite, std::size_t grid,
                                   std::uint64_t seed, double tol);

}  // namespace lerch
