#include "qrcss/css.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcss {

CssCode css_from_self_dual(const ClassicalCode& sd) {
    if (!is_self_dual(sd)) throw std::invalid_argument("css_from_self_dual: input not self-dual");
    if (!is_doubly_even_classical(sd))
        throw std::invalid_argument("css_from_self_dual: input not doubly even");
    // type-II lengths are multiples of 8; anything else cannot reach here
    ClassicalCode c = puncture(sd, sd.n - 1);
    ClassicalCode cperp = dual(c);

    CssCode q;
    q.n = c.n;
    q.sx = cperp.generator;
    q.sz = cperp.generator;
    q.lx = BitVector::ones(q.n);
    q.lz = BitVector::ones(q.n);
    q.k = q.n - rank(q.sx) - rank(q.sz);
    q.label = "[[" + std::to_string(q.n) + ",1]] from " + sd.label;
    return q;
}

bool CssValidation::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.pass;
    return false;
}

CssValidation validate_css(const CssCode& q) {
    CssValidation v;
    auto add = [&](const std::string& name, bool pass) { v.checks.push_back({name, pass}); };

    bool shapes = q.sx.cols() == q.n && q.sz.cols() == q.n && q.lx.size() == q.n &&
                  q.lz.size() == q.n;
    add("shapes", shapes);
    if (!shapes) {
        v.all_pass = false;
        return v;
    }

    bool comm = true;
    for (size_t i = 0; i < q.sx.rows() && comm; i++)
        for (size_t j = 0; j < q.sz.rows(); j++)
            if (overlap2(q.sx.row(i), q.sz.row(j)) % 2 != 0) {
                comm = false;
                break;
            }
    add("sx commutes with sz", comm);

    size_t rx = rank(q.sx), rz = rank(q.sz);
    add("sx full row rank", rx == q.sx.rows());
    add("sz full row rank", rz == q.sz.rows());

    bool lx_comm = true;
    for (size_t j = 0; j < q.sz.rows(); j++)
        if (overlap2(q.lx, q.sz.row(j)) % 2 != 0) lx_comm = false;
    add("lx commutes with sz", lx_comm);

    bool lz_comm = true;
    for (size_t j = 0; j < q.sx.rows(); j++)
        if (overlap2(q.lz, q.sx.row(j)) % 2 != 0) lz_comm = false;
    add("lz commutes with sx", lz_comm);

    add("lx anticommutes with lz", overlap2(q.lx, q.lz) % 2 == 1);
    add("lx not in stabilizer span", !rowspace_contains(q.sx, q.lx));
    add("lz not in stabilizer span", !rowspace_contains(q.sz, q.lz));

    v.recomputed_k = q.n - rx - rz;
    add("k matches ranks", q.k == v.recomputed_k);
    add("k = 1", v.recomputed_k == 1);

    v.all_pass = true;
    for (const auto& c : v.checks) v.all_pass = v.all_pass && c.pass;
    return v;
}

double gamma_exponent(const CssCode& q, size_t d) {
    if (d < 2) throw std::invalid_argument("gamma_exponent: need d >= 2");
    if (q.k < 1) throw std::invalid_argument("gamma_exponent: need k >= 1");
    return std::log(double(q.n) / double(q.k)) / std::log(double(d));
}

}  // namespace qrcss
