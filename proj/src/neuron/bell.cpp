#include "qsnn/neuron/bell.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <string>

namespace qsnn {

Vector spin_vector(bool up) {
  Vector v = Vector::Zero(2);
  v(up ? 1 : 0) = 1.0;
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vector bell_vector(BellLabel label) {
  const double s = 1.0 / std::numbers::sqrt2;
  Vector v = Vector::Zero(4);
  switch (label) {
    case BellLabel::kPhiPlus: v(3) = s; v(0) = s; break;
    case BellLabel::kPhiMinus: v(3) = s; v(0) = -s; break;
    case BellLabel::kPsiPlus: v(1) = s; v(2) = s; break;
    case BellLabel::kPsiMinus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

StateVector bell_state(BellLabel label) { return StateVector::from_amplitudes(bell_vector(label)); }

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::kPsiPlus: return "Psi+";
    case BellLabel::kPsiMinus: return "Psi-";
    case BellLabel::kPhiPlus: return "Phi+";
    case BellLabel::kPhiMinus: return "Phi-";
  }
  return "?";
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "phi+") return BellLabel::kPhiPlus;
  if (lower == "phi-") return BellLabel::kPhiMinus;
  if (lower == "psi+") return BellLabel::kPsiPlus;
  if (lower == "psi-") return BellLabel::kPsiMinus;
  return std::nullopt;
}

}  // namespace qsnn
