#include "lerch/identities.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>

#include "lerch/batch.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

namespace {

constexpr double kInnerTol = 1e-13;

// Inner evaluations are not required to certify their own tolerance: a
// route whose estimate is dominated by rounding in a large trig term can
// still be accurate, and the residual is the measurement that matters.
Complex value(Complex z, int n, Complex a, double tol) {
  return phi({z, n, a}, std::min(tol, kInnerTol)).value;
}

/// Central difference with one Richardson step: (4 D(h/2) - D(h)) / 3.
Complex derivative(const std::function<Complex(Complex)>& f, Complex x) {
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  auto central = [&](double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }  // (-1)^n

}  // namespace

double residual_shift(Complex z, int n, Complex a, double tol) {
  const Complex lhs = value(z, n, a + 1.0, tol);
  const Complex rhs = (value(z, n, a, tol) - 1.0 / ipow(a, n)) / z;
  return std::abs(lhs - rhs);
}

LadderResidual residual_s_ladder(Complex z, int n, Complex a, double tol) {
  LadderResidual out;
  if (n >= 2) {
    const Complex dz =
        derivative([&](Complex x) { return value(x, n, a, tol); }, z);
    out.down = std::abs(value(z, n - 1, a, tol) - a * value(z, n, a, tol) - z * dz);
  }
  const Complex da = derivative([&](Complex x) { return value(z, n, x, tol); }, a);
  out.up = std::abs(value(z, n + 1, a, tol) + da / static_cast<double>(n));
  return out;
}

double residual_pde(Complex z, int n, Complex a, double tol) {
  const Complex dz =
      derivative([&](Complex x) { return value(x, n + 1, a, tol); }, z);
  return std::abs(z * dz + a * value(z, n + 1, a, tol) - value(z, n, a, tol));
}

double residual_symmetry(Complex z, int n, Complex a, double tol) {
  const SymmetryRelation rel = symmetry_transform({z, n, a});
  const Complex own = value(z, n, a, tol);
  const Complex other = value(rel.partner.z, n, rel.partner.a, tol);
  return std::abs(own + parity(n) / z * other - rel.trig_term);
}

double residual_hurwitz_reflection(int n, Complex a, double tol) {
  const Complex lhs =
      hurwitz_zeta(n, a, tol) + parity(n) * hurwitz_zeta(n, 1.0 - a, tol);
  const Complex rhs =
      -parity(n) * kPi / factorial(n - 1) * cot_pi_derivative(n - 1, a);
  return std::abs(lhs - rhs);
}

double residual_polygamma_reflection(int m, Complex a, double tol) {
  return std::abs(polygamma(m, a, tol) - parity(m) * polygamma(m, 1.0 - a, tol) +
                  kPi * cot_pi_derivative(m, a));
}

double residual_theorem1(const LerchQuery& q, double tol) {
  const Complex pv = phi_pv(q, tol).value;
  const Complex series = phi_series(q, std::min(tol, kInnerTol)).value;
  return std::abs(pv - series);
}

// ---------------------------------------------------------------------------

std::uint64_t GridRng::next() {
  // splitmix64
  std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ULL);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double GridRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int GridRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

namespace {

/// Angle in (-pi, pi) at least `margin` away from 0 and from +-pi.
double off_axis_angle(GridRng& rng, double margin) {
  const double theta = rng.uniform(margin, kPi - margin);
  return rng.uniform(0.0, 1.0) < 0.5 ? -theta : theta;
}

}  // namespace

std::vector<LerchQuery> symmetry_grid(std::uint64_t seed, std::size_t count) {
  GridRng rng(seed);
  std::vector<LerchQuery> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = rng.uniform(0.1, 0.9);
    const double theta = off_axis_angle(rng, 0.05);
    const int n = rng.integer(1, 5);
    const Complex a{rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5)};
    out.push_back({std::polar(r, theta), n, a});
  }
  return out;
}

std::vector<LerchQuery> theorem1_grid(std::uint64_t seed, std::size_t count) {
  GridRng rng(seed);
  std::vector<LerchQuery> out;
  out.reserve(count);
  while (out.size() < count) {
    const double r = rng.uniform(0.15, 0.85);
    const double theta = rng.uniform(-kPi + 0.05, kPi - 0.05);
    const int n = rng.integer(1, 5);
    const Complex a{rng.uniform(-1.0, 0.95), rng.uniform(-1.0, 1.0)};
    const Complex z = std::polar(r, theta);
    const Complex dir = std::polar(1.0, std::arg(-std::log(z)));
    if (distance_to_integer(a) < 0.05) continue;
    if (-((a - 1.0) * dir).real() < 0.2) continue;
    out.push_back({z, n, a});
  }
  return out;
}

std::vector<LerchQuery> identity_web_grid(std::uint64_t seed,
                                          std::size_t count) {
  GridRng rng(seed);
  std::vector<LerchQuery> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = (i % 2 == 0) ? rng.uniform(0.2, 0.8) : rng.uniform(1.25, 4.0);
    const double theta = off_axis_angle(rng, 0.2);
    const int n = rng.integer(1, 4);
    const Complex a{rng.uniform(0.2, 0.8), rng.uniform(-0.3, 0.3)};
    out.push_back({std::polar(r, theta), n, a});
  }
  return out;
}

std::vector<ReflectionPoint> reflection_grid(std::uint64_t seed,
                                             std::size_t count, int min_order,
                                             int max_order) {
  GridRng rng(seed);
  std::vector<ReflectionPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int order = rng.integer(min_order, max_order);
    const Complex a{rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5)};
    out.push_back({order, a});
  }
  return out;
}

Suite suite_from_string(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "symmetry") return Suite::Symmetry;
  if (name == "recurrences") return Suite::Recurrences;
  if (name == "reflections") return Suite::Reflections;
  if (name == "theorem1") return Suite::Theorem1;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

struct Task {
  std::string identity;
  LerchQuery point;
  double threshold;
  std::function<double()> residual;
};

CheckRecord run_task(const Task& task) {
  CheckRecord rec;
  rec.identity = task.identity;
  rec.point = task.point;
  rec.threshold = task.threshold;
  try {
    rec.residual = task.residual();
    rec.pass = std::isfinite(rec.residual) && rec.residual <= task.threshold;
  } catch (const std::exception& e) {
    rec.residual = std::numeric_limits<double>::quiet_NaN();
    rec.note = e.what();
  }
  return rec;
}

void add_symmetry(std::vector<Task>& tasks, std::size_t grid,
                  std::uint64_t seed, double tol) {
  for (const auto& q : symmetry_grid(seed, grid)) {
    tasks.push_back({"symmetry", q, kSymmetryThreshold,
                     [q, tol] { return residual_symmetry(q.z, q.n, q.a, tol); }});
  }
}

void add_recurrences(std::vector<Task>& tasks, std::size_t grid,
                     std::uint64_t seed, double tol) {
  for (const auto& q : identity_web_grid(seed, grid)) {
    tasks.push_back({"shift", q, kShiftThreshold,
                     [q, tol] { return residual_shift(q.z, q.n, q.a, tol); }});
    if (q.n >= 2) {
      tasks.push_back({"ladder_down", q, kLadderThreshold, [q, tol] {
                         return *residual_s_ladder(q.z, q.n, q.a, tol).down;
                       }});
    }
    tasks.push_back({"ladder_up", q, kLadderThreshold, [q, tol] {
                       return residual_s_ladder(q.z, q.n, q.a, tol).up;
                     }});
    tasks.push_back({"pde", q, kPdeThreshold,
                     [q, tol] { return residual_pde(q.z, q.n, q.a, tol); }});
  }
}

void add_reflections(std::vector<Task>& tasks, std::size_t grid,
                     std::uint64_t seed, double tol) {
  tasks.push_back({"hurwitz_spot", {1.0, 2, 0.25}, kHurwitzSpotThreshold, [tol] {
                     const Complex sum =
                         hurwitz_zeta(2, 0.25, tol) + hurwitz_zeta(2, 0.75, tol);
                     return std::abs(sum - 2.0 * kPi * kPi);
                   }});
  for (const auto& p : reflection_grid(seed, grid, 2, 6)) {
    tasks.push_back({"hurwitz_reflection", {1.0, p.order, p.a},
                     kReflectionThreshold, [p, tol] {
                       return residual_hurwitz_reflection(p.order, p.a, tol);
                     }});
  }
  for (const auto& p : reflection_grid(seed + 1, grid, 1, 3)) {
    tasks.push_back({"polygamma_reflection", {1.0, p.order, p.a},
                     kReflectionThreshold, [p, tol] {
                       return residual_polygamma_reflection(p.order, p.a, tol);
                     }});
  }
}

void add_theorem1(std::vector<Task>& tasks, std::size_t grid,
                  std::uint64_t seed, double tol) {
  for (const auto& q : theorem1_grid(seed, grid)) {
    tasks.push_back({"theorem1", q, kTheorem1Threshold,
                     [q, tol] { return residual_theorem1(q, tol); }});
  }
}

}  // namespace

std::vector<CheckRecord> run_suite(Suite suite, std::size_t grid,
                                   std::uint64_t seed, double tol) {
  std::vector<Task> tasks;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Symmetry) add_symmetry(tasks, grid, seed, tol);
  if (all || suite == Suite::Recurrences) add_recurrences(tasks, grid, seed, tol);
  if (all || suite == Suite::Reflections) add_reflections(tasks, grid, seed, tol);
  if (all || suite == Suite::Theorem1) add_theorem1(tasks, grid, seed, tol);
  return batch::parallel_map(tasks.size(),
                             [&](std::size_t i) { return run_task(tasks[i]); });
}

}  // namespace lerch
