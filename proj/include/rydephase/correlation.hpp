#pragma once

#include <span>
#include <vector>

namespace rydephase {

// Largest tail mass P(m > m_max) a truncated distribution may drop.
inline constexpr double kMaxTruncationTail = 1e-9;

//---------------------------------------------------------------------------//
/*!
 * Spin-wave excitation-number probabilities |c_m|², m = 0..m_max.
 *
 * Never renormalized after truncation: construction fails unless the
 * discarded tail is below kMaxTruncationTail.
 */
class ExcitationDistribution {
 public:
  static ExcitationDistribution from_probabilities(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  double probability(int m) const { return m <= m_max() ? probs_[static_cast<std::size_t>(m)] : 0.0; }
  int m_max() const { return static_cast<int>(probs_.size()) - 1; }
  double mean() const { return mean_; }

 private:
  friend ExcitationDistribution poisson_amplitudes(double mean, int m_max);
  ExcitationDistribution(std::vector<double> probs, double mean) : probs_(std::move(probs)), mean_(mean) {}

  std::vector<double> probs_;
  double mean_;
};

// Poisson |c_m|² = e^{-λ} λ^m / m!; throws TruncationError (carrying the
// smallest admissible m_max) when the tail beyond m_max exceeds 1e-9.
ExcitationDistribution poisson_amplitudes(double mean, int m_max);

struct CorrelationTerms {
  double numerator = 0.0;
  double denominator = 0.0;  // before squaring
};

struct CorrelationSeries {
  std::vector<double> grid;  // optional; filled by callers that know the grid
  std::vector<double> g2;
  std::vector<CorrelationTerms> components;
};

/// Pair correlation from the multi-excitation closure
///   g² = Σ_{m≥2} |c_m|² m(m-1) |P|^{m(m-1)} / [Σ_{m≥1} |c_m|² m |P|^{m(m-1)}]²,
/// with sums truncated at m_max (≤ dist.m_max()).
CorrelationSeries g2_series(const ExcitationDistribution& dist, std::span<const double> p_abs, int m_max);

// Two-excitation long-time form |c₂|²2|P|² / [|c₁|² + |c₂|²2|P|²]².
double g2_longtime(const ExcitationDistribution& dist, double p_abs);

// g2_series truncated to single and double excitations.
CorrelationSeries g2_double_only(const ExcitationDistribution& dist, std::span<const double> p_abs);

// Photodetection background: g² → (1 - g²_bg) g² + g²_bg.
double apply_background(double g2, double g2_bg);

}  // namespace rydephase
