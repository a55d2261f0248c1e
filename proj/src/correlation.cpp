#include "rydephase/correlation.hpp"

#include <cmath>
#include <string>

#include "rydephase/errors.hpp"

namespace rydephase {

ExcitationDistribution ExcitationDistribution::from_probabilities(std::vector<double> probs) {
  if (probs.empty()) throw InvalidArgumentError("excitation distribution needs at least one entry");
  double total = 0.0, mean = 0.0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    if (!(probs[m] >= 0.0)) throw InvalidArgumentError("excitation probabilities must be non-negative");
    total += probs[m];
    mean += static_cast<double>(m) * probs[m];
  }
  if (std::abs(total - 1.0) > kMaxTruncationTail)
    throw InvalidArgumentError("excitation probabilities sum to " + std::to_string(total) + ", not 1");
  return ExcitationDistribution(std::move(probs), mean);
}

ExcitationDistribution poisson_amplitudes(double mean, int m_max) {
  if (!(mean > 0.0) || !std::isfinite(mean)) throw InvalidArgumentError("Poisson mean must be positive");
  if (m_max < 0) throw InvalidArgumentError("m_max must be non-negative");

  auto term = [mean](int m) { return std::exp(-mean + m * std::log(mean) - std::lgamma(m + 1.0)); };
  // tail P(m > k), summed upward from k+1 until negligible
  auto tail_beyond = [&](int k) {
    double tail = 0.0;
    for (int m = k + 1;; ++m) {
      const double t = term(m);
      tail += t;
      if (m > mean && t < 1e-18 * tail) break;
      if (m > k + 10000) break;
    }
    return tail;
  };

  const double tail = tail_beyond(m_max);
  if (tail >= kMaxTruncationTail) {
    int required = m_max + 1;
    while (tail_beyond(required) >= kMaxTruncationTail) ++required;
    throw TruncationError("Poisson(" + std::to_string(mean) + ") truncated at m_max=" + std::to_string(m_max) +
                              " drops tail mass " + std::to_string(tail) + "; need m_max >= " +
                              std::to_string(required),
                          required);
  }
  std::vector<double> probs(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) probs[static_cast<std::size_t>(m)] = term(m);
  return ExcitationDistribution(std::move(probs), mean);
}

namespace {

CorrelationTerms closure_terms(const ExcitationDistribution& dist, double p_abs, int m_max) {
  if (!(p_abs >= 0.0) || p_abs > 1.0)
    throw InvalidArgumentError("|P| must lie in [0, 1], got " + std::to_string(p_abs));
  CorrelationTerms terms;
  terms.denominator = dist.probability(1);  // |P|^0 = 1 at m = 1
  for (int m = 2; m <= m_max; ++m) {
    const double weight = dist.probability(m);
    const double power = std::pow(p_abs, m * (m - 1));
    terms.numerator += weight * m * (m - 1) * power;
    terms.denominator += weight * m * power;
  }
  return terms;
}

}  // namespace

CorrelationSeries g2_series(const ExcitationDistribution& dist, std::span<const double> p_abs, int m_max) {
  if (m_max < 1 || m_max > dist.m_max())
    throw InvalidArgumentError("m_max must lie in [1, " + std::to_string(dist.m_max()) + "]");
  CorrelationSeries out;
  out.g2.reserve(p_abs.size());
  out.components.reserve(p_abs.size());
  for (double p : p_abs) {
    const CorrelationTerms terms = closure_terms(dist, p, m_max);
    out.components.push_back(terms);
    out.g2.push_back(terms.denominator > 0.0 ? terms.numerator / (terms.denominator * terms.denominator) : 0.0);
  }
  return out;
}

double g2_longtime(const ExcitationDistribution& dist, double p_abs) {
  const double c1 = dist.probability(1);
  const double two_excitation = dist.probability(2) * 2.0 * p_abs * p_abs;
  const double denominator = c1 + two_excitation;
  return two_excitation / (denominator * denominator);
}

CorrelationSeries g2_double_only(const ExcitationDistribution& dist, std::span<const double> p_abs) {
  return g2_series(dist, p_abs, 2);
}

double apply_background(double g2, double g2_bg) {
  if (!(g2_bg >= 0.0) || g2_bg > 1.0)
    throw InvalidArgumentError("background g2 must lie in [0, 1], got " + std::to_string(g2_bg));
  return (1.0 - g2_bg) * g2 + g2_bg;
}

}  // namespace rydephase
