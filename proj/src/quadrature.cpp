#include "lerch/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace lerch {

namespace {

// 15-point Kronrod abscissae (non-negative half) and weights; every other
// abscissa, starting from index 1, is a 7-point Gauss node.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Piece {
  std::function<Complex(double)> f;
  double lo;
  double hi;
};

struct Panel {
  std::size_t piece;
  double lo;
  double hi;
  Complex value;
  double err;
  bool at_floor;  // error estimate is the rounding floor; bisection cannot help
};

Panel gauss_kronrod(const Piece& piece, std::size_t index, double lo,
                    double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = piece.f(center);
  Complex kronrod = kKronrod[7] * fc;
  Complex gauss = kGauss[3] * fc;
  double resabs = kKronrod[7] * std::abs(fc);
  for (int k = 0; k < 7; ++k) {
    const double dx = half * kNodes[static_cast<std::size_t>(k)];
    const Complex f1 = piece.f(center - dx);
    const Complex f2 = piece.f(center + dx);
    kronrod += kKronrod[static_cast<std::size_t>(k)] * (f1 + f2);
    resabs += kKronrod[static_cast<std::size_t>(k)] * (std::abs(f1) + std::abs(f2));
    if (k % 2 == 1) gauss += kGauss[static_cast<std::size_t>(k / 2)] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  resabs *= std::abs(half);
  const double floor = 50.0 * kEps * resabs;
  double err = std::abs(kronrod - gauss);
  const bool at_floor = err <= floor;
  err = std::max(err, floor);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
  return {index, lo, hi, kronrod, err, at_floor};
}

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.err < b.err; }
};

/// Globally adaptive bisection over all pieces sharing one error budget.
EvalResult adaptive(const std::vector<Piece>& pieces, int initial_per_piece,
                    double tol, double extra_err,
                    const QuadratureOptions& options) {
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  std::vector<Panel> done;
  Complex total{};
  double total_err = extra_err;
  std::int64_t evaluations = 0;

  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto& piece = pieces[p];
    if (!(piece.hi > piece.lo)) continue;
    const int parts = std::max(1, initial_per_piece);
    const double width = (piece.hi - piece.lo) / parts;
    for (int i = 0; i < parts; ++i) {
      const double lo = piece.lo + i * width;
      const double hi = (i + 1 == parts) ? piece.hi : lo + width;
      Panel panel = gauss_kronrod(piece, p, lo, hi);
      evaluations += 15;
      total += panel.value;
      total_err += panel.err;
      queue.push(panel);
    }
  }

  bool converged = true;
  int panels = static_cast<int>(queue.size());
  while (!queue.empty() &&
         total_err > tol * std::max(1.0, std::abs(total))) {
    if (panels >= options.max_panels) {
      converged = false;
      break;
    }
    Panel worst = queue.top();
    if (!std::isfinite(worst.err)) {
      // A singular point inside the panel.
      converged = false;
      break;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const double floor_width =
        1e-12 * std::max({1.0, std::abs(worst.lo), std::abs(worst.hi)});
    if (worst.at_floor || !(worst.hi - worst.lo > floor_width)) {
      // Rounding-limited or too narrow to resolve: keep it as it is.
      queue.pop();
      done.push_back(worst);
      continue;
    }
    queue.pop();
    const auto& piece = pieces[worst.piece];
    Panel left = gauss_kronrod(piece, worst.piece, worst.lo, mid);
    Panel right = gauss_kronrod(piece, worst.piece, mid, worst.hi);
    evaluations += 30;
    ++panels;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
  }

  // Reassemble in a fixed order so the result is reproducible bit for bit.
  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& a, const Panel& b) {
    return a.piece != b.piece ? a.piece < b.piece : a.lo < b.lo;
  });
  Complex sum{};
  double err = extra_err;
  for (const auto& panel : done) {
    sum += panel.value;
    err += panel.err;
  }

  EvalResult out;
  out.value = sum;
  out.err_estimate = err;
  out.method = Method::Quadrature;
  out.work = evaluations;
  out.converged = converged && std::isfinite(err) &&
                  err <= tol * std::max(1.0, std::abs(sum));
  return out;
}

/// Pushes T out until the sampled integrand magnitude bounds the tail.
std::pair<double, double> truncation_point(const RayIntegrand& f,
                                           Complex direction, double start,
                                           double tol) {
  double end = start;
  double tail = 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    double peak = 0.0;
    for (double s : {1.0, 1.1, 1.25}) {
      const double v = std::abs(f.evaluate(end * s * direction));
      peak = std::max(peak, std::isfinite(v) ? v : std::numeric_limits<double>::infinity());
    }
    tail = peak / f.decay_rate;
    if (tail <= 0.25 * tol) break;
    end *= 1.25;
  }
  return {end, tail};
}

int initial_panels(double length) {
  return std::clamp(static_cast<int>(std::ceil(length)), 4, 4096);
}

}  // namespace

EvalResult integrate_segment(const std::function<Complex(double)>& f,
                             double lo, double hi, double tol,
                             const QuadratureOptions& options) {
  std::vector<Piece> pieces{{f, lo, hi}};
  return adaptive(pieces, 1, tol, 0.0, options);
}

EvalResult integrate_ray(const RayIntegrand& f, double tol,
                         const QuadratureOptions& options) {
  if (!(f.decay_rate > 0.0)) {
    throw LerchError(ErrorKind::Domain, "integrate_ray: decay_rate must be > 0");
  }
  const Complex direction = std::polar(1.0, f.direction);
  const double start =
      (std::log(1.0 / tol) + options.truncation_safety) / f.decay_rate;
  const auto [end, tail] = truncation_point(f, direction, start, tol);

  std::vector<Piece> pieces{
      {[&f, direction](double s) { return f.evaluate(s * direction) * direction; },
       0.0, end}};
  return adaptive(pieces, initial_panels(end), 0.5 * tol, tail, options);
}

EvalResult pv_integrate_ray(const RayIntegrand& f, const PoleSpec& pole,
                            double tol, const QuadratureOptions& options) {
  if (pole.order != 1) {
    throw std::invalid_argument("pv_integrate_ray: only simple poles");
  }
  if (!(f.decay_rate > 0.0)) {
    throw LerchError(ErrorKind::Domain,
                     "pv_integrate_ray: decay_rate must be > 0");
  }
  const Complex direction = std::polar(1.0, f.direction);
  // Coordinates of the pole along and across the ray.
  const Complex local = pole.location * std::conj(direction);
  const double radius = local.real();
  if (std::abs(local.imag()) > 1e-10 * std::max(1.0, std::abs(pole.location)) ||
      radius <= 0.0) {
    throw LerchError(ErrorKind::PoleOffRay,
                     "declared pole does not lie on the integration ray");
  }
  const double delta = std::min(0.5 * radius, 1.0);
  const Complex t0 = radius * direction;

  double start =
      (std::log(1.0 / tol) + options.truncation_safety) / f.decay_rate;
  start = std::max(start, radius + delta + 1.0 / f.decay_rate);
  const auto [end, tail] = truncation_point(f, direction, start, tol);

  // Folded integrand f(t0 + u) + f(t0 - u): even and regular in u, but
  // rounding in the pole position makes it noisy as u -> 0.
  auto folded = [&f, direction, t0](double u) {
    const Complex g = f.evaluate(t0 + u * direction) + f.evaluate(t0 - u * direction);
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
      throw LerchError(ErrorKind::ToleranceNotMet,
                       "folded integrand is not finite at u = " + std::to_string(u));
    }
    return g * direction;
  };
  // On [0, core] integrate the even interpolant through u = core * {1, 2, 3, 4}
  // instead of sampling next to the pole.
  const double core = 0.01 * delta;
  std::array<Complex, 4> samples;
  for (int i = 0; i < 4; ++i) samples[static_cast<std::size_t>(i)] = folded((i + 1) * core);
  const Complex core4 = core * (26267.0 / 18900.0 * samples[0] - 2434.0 / 4725.0 * samples[1] +
                                701.0 / 4900.0 * samples[2] - 586.0 / 33075.0 * samples[3]);
  const Complex core3 = core * (239.0 / 180.0 * samples[0] - 88.0 / 225.0 * samples[1] +
                                19.0 / 300.0 * samples[2]);
  const double core_err = std::abs(core4 - core3) + 8.0 * kEps * std::abs(core4);

  std::vector<Piece> pieces;
  auto along = [&f, direction](double s) { return f.evaluate(s * direction) * direction; };
  pieces.push_back({along, 0.0, radius - delta});
  pieces.push_back({folded, core, delta});
  pieces.push_back({along, radius + delta, end});

  // Panel density follows the length of each piece.
  std::vector<Piece> split;
  for (auto& piece : pieces) {
    const int parts = initial_panels(piece.hi - piece.lo);
    const double width = (piece.hi - piece.lo) / parts;
    for (int i = 0; i < parts; ++i) {
      const double lo = piece.lo + i * width;
      split.push_back({piece.f, lo, (i + 1 == parts) ? piece.hi : lo + width});
    }
  }
  EvalResult out = adaptive(split, 1, 0.5 * tol, tail + core_err, options);
  out.value += core4;
  out.work += 8;
  return out;
}

}  // namespace lerch
