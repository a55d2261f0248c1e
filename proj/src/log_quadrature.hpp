#pragma once

// Adaptive quadrature of exp(E(x)) over the real line, for exponents E whose
// real part is unimodal (concave in practice). The integration window is cut
// where Re E falls kCutoff below its maximum and split into unit-scale panels,
// each integrated with adaptive 21-point Gauss-Kronrod.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <type_traits>

namespace rydephase::detail {

template <class Value>
struct LogQuadratureResult {
  Value value{};
  double error = 0.0;  // summed Kronrod error estimates
  double l1 = 0.0;     // ∫|integrand|
};

inline constexpr double kCutoff = 46.0;  // e^{-46} ≈ 1e-20
inline constexpr double kPanelWidth = 2.0;
inline constexpr unsigned kMaxDepth = 18;

template <class LogFn>
double real_part_of(LogFn& log_fn, double x) {
  using R = std::invoke_result_t<LogFn&, double>;
  if constexpr (std::is_floating_point_v<R>) {
    return log_fn(x);
  } else {
    return log_fn(x).real();
  }
}

template <class LogFn>
double locate_peak(LogFn& log_fn, double guess) {
  auto f = [&](double x) { return real_part_of(log_fn, x); };
  // bracket by expanding steps until the function decreases on both sides
  double step = 1.0;
  double lo = guess - step, hi = guess + step;
  while (f(lo) > f(guess)) {
    hi = guess;
    guess = lo;
    step *= 2.0;
    lo = guess - step;
  }
  while (f(hi) > f(guess)) {
    lo = guess;
    guess = hi;
    step *= 2.0;
    hi = guess + step;
  }
  // golden-section refinement
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-10 * (1.0 + std::abs(a)); ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

template <class LogFn>
double locate_cutoff(LogFn& log_fn, double peak, double peak_value, double direction) {
  double step = 1.0;
  double x = peak;
  while (true) {
    x = peak + direction * step;
    const double v = real_part_of(log_fn, x);
    if (!(v > peak_value - kCutoff)) return x;
    step *= 1.5;
    if (step > 1e4) return x;
  }
}

template <class LogFn>
auto integrate_log(LogFn log_fn, double guess, double rel_tol) {
  using R = std::invoke_result_t<LogFn&, double>;
  using boost::math::quadrature::gauss_kronrod;

  const double peak = locate_peak(log_fn, guess);
  const double peak_value = real_part_of(log_fn, peak);
  const double left = locate_cutoff(log_fn, peak, peak_value, -1.0);
  const double right = locate_cutoff(log_fn, peak, peak_value, +1.0);

  auto integrand = [&](double x) -> R { return std::exp(log_fn(x)); };

  LogQuadratureResult<R> out;
  const int panels = std::max(1, static_cast<int>(std::ceil((right - left) / kPanelWidth)));
  for (int k = 0; k < panels; ++k) {
    const double a = left + (right - left) * k / panels;
    const double b = left + (right - left) * (k + 1) / panels;
    double err = 0.0, l1 = 0.0;
    out.value += gauss_kronrod<double, 21>::integrate(integrand, a, b, kMaxDepth, rel_tol, &err, &l1);
    out.error += err;
    out.l1 += l1;
  }
  return out;
}

template <class LogFn>
LogQuadratureResult<double> integrate_log_real(LogFn log_fn, double guess, double rel_tol) {
  return integrate_log(std::move(log_fn), guess, rel_tol);
}

}  // namespace rydephase::detail
