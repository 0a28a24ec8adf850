#pragma once

#include <optional>
#include <string>

#include "qrcss/css.hpp"

namespace qrcss {

enum class Gate { H, S, T };

std::string to_string(Gate g);

/// Transversal-gate verdict. Diagonal-gate logical action is the relative
/// phase between the logical basis states, reported exactly in units of
/// pi/4 (all amplitudes live in Z[e^{i*pi/4}], so eighths of a half-turn are
/// exact); no floating point is involved anywhere.
///
/// Inputs are expected to pass validate_css (in particular k = 1); both
/// methods answer the same question there and always agree.
struct GateReport {
    Gate gate = Gate::S;
    bool preserves_codespace = false;
    std::optional<unsigned> relative_phase_eighths;  // diagonal gates, when preserved
    bool hadamard_action = false;                    // H: logical basis swap confirmed
    enum class Method { Algebraic, Statevector } method = Method::Algebraic;
};

/// Algebraic criterion for the transversal gate diag(1, e^{i*pi/2^(level-1)}):
/// level 2 = S, level 3 = T. Codespace preservation is divisibility of the
/// X-stabilizer span plus phase constancy on the logical coset.
GateReport check_transversal_diagonal(const CssCode& q, unsigned level);

/// Transversal Hadamard preserves the codespace exactly when the X- and
/// Z-stabilizer spans coincide.
GateReport check_transversal_hadamard(const CssCode& q);

/// Independent oracle: builds the logical basis states over their coset
/// supports (2^rank terms) and applies the transversal gate exactly —
/// per-basis-state eighth-of-turn phases for diagonal gates, a character sum
/// over the dual span for H. Exact integer arithmetic throughout.
GateReport statevector_oracle(const CssCode& q, Gate g, size_t max_n = 25);

}  // namespace qrcss
