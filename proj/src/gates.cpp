#include "qrcss/gates.hpp"

#include <bit>
#include <stdexcept>

#include "qrcss/divisibility.hpp"

namespace qrcss {

std::string to_string(Gate g) {
    switch (g) {
        case Gate::H: return "H";
        case Gate::S: return "S";
        case Gate::T: return "T";
    }
    return "?";
}

namespace {

// visit all elements of rowspace(m) in Gray-code order
template <typename Fn>
void for_each_span_element(const BitMatrix& m, Fn&& fn) {
    BitMatrix basis = rref(m).mat;
    size_t r = basis.rows();
    if (r > 30) throw std::invalid_argument("span enumeration too large");
    BitVector cur(m.cols());
    fn(cur);
    for (uint64_t i = 1; i < (uint64_t(1) << r); i++) {
        cur ^= basis.row(size_t(std::countr_zero(i)));
        fn(cur);
    }
}

unsigned phase_eighths(size_t weight, unsigned level) {
    // transversal diag(1, e^{i*pi/2^(level-1)}) puts phase e^{i*pi*w/2^(level-1)}
    // on a weight-w basis state; in eighths of pi: w * 2^(3-level) mod 8
    return unsigned((weight << (3 - level)) % 8);
}

GateReport statevector_diagonal(const CssCode& q, unsigned level) {
    GateReport rep;
    rep.gate = level == 2 ? Gate::S : Gate::T;
    rep.method = GateReport::Method::Statevector;

    const unsigned mod = 1u << level;
    bool zero_ok = true, one_ok = true;
    size_t c1 = q.lx.weight() % mod;  // forced by the s = 0 term
    for_each_span_element(q.sx, [&](const BitVector& s) {
        if (s.weight() % mod != 0) zero_ok = false;
        if ((s ^ q.lx).weight() % mod != c1) one_ok = false;
    });
    rep.preserves_codespace = zero_ok && one_ok;
    if (rep.preserves_codespace) rep.relative_phase_eighths = phase_eighths(c1, level);
    return rep;
}

GateReport statevector_hadamard(const CssCode& q) {
    GateReport rep;
    rep.gate = Gate::H;
    rep.method = GateReport::Method::Statevector;

    // H^(x)n maps a coset-uniform state to a +-1-weighted sum over the dual
    // span: image of |0L> has coefficient +1 on every u with sx u = 0, and
    // image of |1L> has coefficient (-1)^(u . lx). Codespace membership means
    // support contained in span(sx) u (lx + span(sx)) with per-coset constant
    // coefficients.
    BitMatrix dual_basis = kernel_basis(q.sx);
    SpanReducer sx_span(q.sx);

    size_t n_dual = 0, cnt_s = 0, cnt_l = 0;
    bool leak = false;
    bool sign_s_set = false, sign_l_set = false;
    int sign_s = 0, sign_l = 0;  // (-1)^(u.lx) on each part, must be constant
    bool sign_const = true;

    for_each_span_element(dual_basis, [&](const BitVector& u) {
        n_dual++;
        int sg = overlap2(u, q.lx) % 2 ? -1 : 1;
        if (sx_span.contains(u)) {
            cnt_s++;
            if (!sign_s_set) {
                sign_s = sg;
                sign_s_set = true;
            } else if (sign_s != sg) {
                sign_const = false;
            }
        } else if (sx_span.contains(u ^ q.lx)) {
            cnt_l++;
            if (!sign_l_set) {
                sign_l = sg;
                sign_l_set = true;
            } else if (sign_l != sg) {
                sign_const = false;
            }
        } else {
            leak = true;
        }
    });

    size_t coset_size = uint64_t(1) << sx_span.rank();
    bool parts_whole = (cnt_s == 0 || cnt_s == coset_size) && (cnt_l == 0 || cnt_l == coset_size);
    rep.preserves_codespace = !leak && parts_whole && sign_const && cnt_s > 0 && cnt_l > 0;
    if (rep.preserves_codespace) {
        // logical matrix columns: |0L> -> (+1, +1), |1L> -> (sign_s, sign_l);
        // the Hadamard pattern is sign_s = +1, sign_l = -1
        rep.hadamard_action = sign_s == 1 && sign_l == -1;
    }
    return rep;
}

}  // namespace

GateReport check_transversal_diagonal(const CssCode& q, unsigned level) {
    if (level != 2 && level != 3)
        throw std::invalid_argument("check_transversal_diagonal: level must be 2 (S) or 3 (T)");
    GateReport rep;
    rep.gate = level == 2 ? Gate::S : Gate::T;
    rep.method = GateReport::Method::Algebraic;

    bool divisible = level == 2 ? is_doubly_even_span(q.sx).passed
                                : is_triply_even_span(q.sx).passed;
    bool coset_ok = divisible &&
                    logical_overlap_divisibility(q.sx, q.lx, 1u << (level - 1));
    rep.preserves_codespace = divisible && coset_ok;
    if (rep.preserves_codespace)
        rep.relative_phase_eighths = phase_eighths(q.lx.weight() % (1u << level), level);
    return rep;
}

GateReport check_transversal_hadamard(const CssCode& q) {
    GateReport rep;
    rep.gate = Gate::H;
    rep.method = GateReport::Method::Algebraic;
    rep.preserves_codespace = rowspace_equal(q.sx, q.sz);
    rep.hadamard_action = rep.preserves_codespace;
    return rep;
}

GateReport statevector_oracle(const CssCode& q, Gate g, size_t max_n) {
    if (q.n > max_n)
        throw std::invalid_argument("statevector_oracle: code too large for exact enumeration");
    switch (g) {
        case Gate::S: return statevector_diagonal(q, 2);
        case Gate::T: return statevector_diagonal(q, 3);
        case Gate::H: return statevector_hadamard(q);
    }
    throw std::invalid_argument("statevector_oracle: unknown gate");
}

}  // namespace qrcss
