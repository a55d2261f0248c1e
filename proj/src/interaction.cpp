#include "rydephase/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "rydephase/errors.hpp"

namespace rydephase {

PotentialSpec::PotentialSpec(int alpha, double c_over_hbar) : alpha_(alpha), c_over_hbar_(c_over_hbar) {
  if (alpha != 3 && alpha != 6)
    throw InvalidArgumentError("interaction exponent must be 3 or 6, got " + std::to_string(alpha));
  if (!(c_over_hbar > 0.0) || !std::isfinite(c_over_hbar))
    throw InvalidArgumentError("interaction coefficient must be positive");
}

double PotentialSpec::shift_at(double separation) const {
  if (!(separation >= kMinSeparationUm))
    throw DegenerateGeometryError("separation below " + std::to_string(kMinSeparationUm) + " um");
  return c_over_hbar_ / std::pow(separation, alpha_);
}

CoefficientModel CoefficientModel::scaling_law(int alpha, int anchor_n, double anchor_value) {
  CoefficientModel m;
  m.kind = CoefficientKind::scaling_law;
  m.alpha = alpha;
  m.anchor_n = anchor_n;
  m.anchor_value = anchor_value;
  m.exponent = default_scaling_exponent(alpha);
  m.validate();
  return m;
}

CoefficientModel CoefficientModel::from_table(int alpha, std::vector<CoefficientRow> rows,
                                              double quantum_defect) {
  CoefficientModel m;
  m.kind = CoefficientKind::table;
  m.alpha = alpha;
  m.quantum_defect = quantum_defect;
  m.table = std::move(rows);
  if (!m.table.empty()) {
    m.anchor_n = m.table.front().n;
    m.anchor_value = m.table.front().c_over_hbar;
  }
  m.validate();
  return m;
}

void CoefficientModel::validate() const {
  if (alpha != 3 && alpha != 6) throw InvalidArgumentError("coefficient model exponent must be 3 or 6");
  if (kind == CoefficientKind::scaling_law) {
    if (!(anchor_value > 0.0)) throw InvalidArgumentError("anchor value must be positive");
    if (!(anchor_n > quantum_defect)) throw InvalidArgumentError("anchor level must exceed the quantum defect");
    return;
  }
  if (table.empty()) throw InvalidArgumentError("coefficient table is empty");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!(table[i].c_over_hbar > 0.0))
      throw InvalidArgumentError("coefficient table values must be positive (row n=" +
                                 std::to_string(table[i].n) + ")");
    if (i > 0 && table[i].n <= table[i - 1].n)
      throw InvalidArgumentError("coefficient table rows must be strictly increasing in n");
  }
}

double default_scaling_exponent(int alpha) {
  switch (alpha) {
    case 3: return 4.0;
    case 6: return 11.0;
    default: throw InvalidArgumentError("interaction exponent must be 3 or 6");
  }
}

double pairwise_shift(const Vec3& r1, const Vec3& r2, const PotentialSpec& pot) {
  const double dx = r1[0] - r2[0], dy = r1[1] - r2[1], dz = r1[2] - r2[2];
  const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (r < kMinSeparationUm) throw DegenerateGeometryError("coincident atoms in pairwise_shift");
  return pot.shift_at(r);
}

double coefficient_for_level(int n, const CoefficientModel& model) {
  if (!(n > model.quantum_defect))
    throw InvalidArgumentError("level n=" + std::to_string(n) + " must exceed the quantum defect");
  if (model.kind == CoefficientKind::scaling_law) {
    const double ratio = (n - model.quantum_defect) / (model.anchor_n - model.quantum_defect);
    return model.anchor_value * std::pow(ratio, model.exponent);
  }
  const auto& rows = model.table;
  if (rows.empty() || n < rows.front().n || n > rows.back().n)
    throw OutOfRangeError("level n=" + std::to_string(n) + " outside the coefficient table");
  auto hi = std::lower_bound(rows.begin(), rows.end(), n,
                             [](const CoefficientRow& row, int level) { return row.n < level; });
  if (hi->n == n) return hi->c_over_hbar;
  auto lo = hi - 1;
  // linear in the effective quantum number n - δ
  const double x0 = lo->n - model.quantum_defect, x1 = hi->n - model.quantum_defect;
  const double w = ((n - model.quantum_defect) - x0) / (x1 - x0);
  return (1.0 - w) * lo->c_over_hbar + w * hi->c_over_hbar;
}

PotentialSpec potential_for_level(int n, const CoefficientModel& model) {
  return PotentialSpec(model.alpha, coefficient_for_level(n, model));
}

double characteristic_frequency(const PotentialSpec& pot, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgumentError("sigma must be positive");
  return pot.c_over_hbar() / std::pow(sigma, pot.alpha());
}

std::vector<CoefficientRow> load_coefficient_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient table " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgumentError("coefficient table " + path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,c_over_hbar_2pi_MHz_um_alpha")
    throw InvalidArgumentError("coefficient table header must be 'n,c_over_hbar_2pi_MHz_um_alpha', got '" +
                               line + "'");
  std::vector<CoefficientRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n_field, c_field, extra;
    if (!std::getline(fields, n_field, ',') || !std::getline(fields, c_field, ',') ||
        std::getline(fields, extra, ','))
      throw InvalidArgumentError("coefficient table line " + std::to_string(line_no) +
                                 ": expected two comma-separated columns");
    try {
      std::size_t used_n = 0, used_c = 0;
      const int n = std::stoi(n_field, &used_n);
      const double c = std::stod(c_field, &used_c);
      if (used_n != n_field.size() || used_c != c_field.size()) throw std::invalid_argument("trailing");
      rows.push_back({n, two_pi_mhz(c)});
    } catch (const std::logic_error&) {
      throw InvalidArgumentError("coefficient table line " + std::to_string(line_no) + ": cannot parse '" +
                                 line + "'");
    }
  }
  return rows;
}

}  // namespace rydephase
