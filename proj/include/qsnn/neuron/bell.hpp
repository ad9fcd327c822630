#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qsnn/core/state.hpp"

namespace qsnn {

/// Ordering follows (Psi+, Psi-, Phi+, Phi-).
enum class BellLabel { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::kPsiPlus, BellLabel::kPsiMinus, BellLabel::kPhiPlus, BellLabel::kPhiMinus};

/// Phi+- = (|up up> +- |down down>)/sqrt(2), Psi+- = (|down up> +- |up down>)/sqrt(2).
Vector bell_vector(BellLabel label);
StateVector bell_state(BellLabel label);

std::string_view to_string(BellLabel label);

/// Accepts "Phi+", "Phi-", "Psi+", "Psi-" (case-insensitive).
std::optional<BellLabel> parse_bell_label(std::string_view text);

/// Single-qubit |down> or |up>.
Vector spin_vector(bool up);

/// Kronecker product of two column vectors.
Vector kron(const Vector& a, const Vector& b);

}  // namespace qsnn
