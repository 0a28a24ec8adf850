#pragma once

#include <string>
#include <vector>

#include "qrcss/bits.hpp"
#include "qrcss/classical.hpp"

namespace qrcss {

/// CSS stabilizer code with one designated logical pair. Stabilizer matrices
/// are kept full row rank; k is always recomputed from ranks, never trusted
/// from inputs.
struct CssCode {
    size_t n = 0;
    BitMatrix sx;   // X-stabilizer generators
    BitMatrix sz;   // Z-stabilizer generators
    BitVector lx;   // logical-X representative
    BitVector lz;   // logical-Z representative
    size_t k = 0;
    std::string label;
};

/// Self-dual doubly even classical code -> CSS code on n-1 qubits with
/// S_X = S_Z = generator of the punctured code's dual and all-ones logicals.
CssCode css_from_self_dual(const ClassicalCode& sd);

struct CssCheck {
    std::string name;
    bool pass = false;
};

/// Diagnostic validation result; validate_css never throws.
struct CssValidation {
    bool all_pass = false;
    size_t recomputed_k = 0;
    std::vector<CssCheck> checks;

    bool check(const std::string& name) const;
};

CssValidation validate_css(const CssCode& q);

/// Distillation overhead exponent log_d(n/k).
double gamma_exponent(const CssCode& q, size_t d);

}  // namespace qrcss
