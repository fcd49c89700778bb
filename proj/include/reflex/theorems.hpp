#ifndef REFLEX_THEOREMS_HPP
#define REFLEX_THEOREMS_HPP

// Checkers for the two structural statements about exterior powers of a
// simple reflection representation:
//   (1) the powers wedge^d V, 0 <= d <= n, are simple and pairwise non-isomorphic;
//   (2) wedge^{d1} V1 ~ wedge^{d2} V2 with 1 <= d <= n - 1 forces d1 = d2,
//       n1 = n2 and V1 ~ V2.

#include <optional>
#include <string>
#include <vector>

#include "reflex/lifting.hpp"

namespace reflex {

template <ExactField F>
struct Theorem1Report {
    SimplicityCertificate<F> base;
    std::vector<SimplicityCertificate<F>> powers;     // index d = 0..n
    std::vector<std::vector<std::size_t>> hom_dims;   // hom(wedge^d, wedge^e)
    bool passed = false;
};

template <ExactField F>
Theorem1Report<F> check_theorem1(const ReflectionRep<F>& rep) {
    Theorem1Report<F> out;
    out.base = is_simple(rep);
    if (out.base.verdict != Simplicity::Simple)
        throw TheoremInapplicable(std::string("base representation is ") + to_string(out.base.verdict));
    const std::size_t n = rep.dim();
    std::vector<MatrixRep<F>> powers;
    for (std::size_t d = 0; d <= n; ++d) {
        powers.push_back(as_matrix_rep(exterior_power(rep, d)));
        out.powers.push_back(is_simple(powers.back()));
    }
    out.passed = true;
    for (const auto& c : out.powers)
        if (!c.simple()) out.passed = false;
    out.hom_dims.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t d = 0; d <= n; ++d)
        for (std::size_t e = d; e <= n; ++e) {
            const auto h = hom_space(powers[d], powers[e]).dim();
            out.hom_dims[d][e] = h;
            out.hom_dims[e][d] = e == d ? h : hom_space(powers[e], powers[d]).dim();
            if (d != e && (out.hom_dims[d][e] != 0 || out.hom_dims[e][d] != 0)) out.passed = false;
            if (d == e && h != 1) out.passed = false;
        }
    return out;
}

template <ExactField F>
struct Theorem2Report {
    std::size_t n1 = 0, d1 = 0, n2 = 0, d2 = 0;
    std::size_t hom_dim = 0;       // exterior powers
    std::size_t base_hom_dim = 0;  // degree one
    bool isomorphic = false;
    bool rigidity = false;         // binomial rigidity of (n1, d1) and (n2, d2)
    bool consistent = false;       // findings agree with the statement
    std::optional<Matrix<F>> psi;
    std::optional<LiftResult<F>> lift;
    std::string conclusion;
};

template <ExactField F>
Theorem2Report<F> check_theorem2(const ReflectionRep<F>& rep1, std::size_t d1, const ReflectionRep<F>& rep2,
                                 std::size_t d2, const LiftOptions<F>& opts = {}) {
    Theorem2Report<F> out{rep1.dim(), d1, rep2.dim(), d2};
    if (d1 < 1 || d1 + 1 > rep1.dim() || d2 < 1 || d2 + 1 > rep2.dim())
        throw InputError("degrees must satisfy 1 <= d <= n - 1");
    if (rep1.size() != rep2.size()) throw InputError("representations have different generator counts");
    if (!(rep1.field() == rep2.field())) throw InputError("representations live over different fields");
    for (const auto* r : {&rep1, &rep2}) {
        const auto c = is_simple(*r);
        if (c.verdict != Simplicity::Simple)
            throw TheoremInapplicable(std::string("a base representation is ") + to_string(c.verdict));
    }
    out.rigidity = binom_rigidity(static_cast<long>(out.n1), static_cast<long>(d1), static_cast<long>(out.n2),
                                  static_cast<long>(d2));
    const auto e1 = as_matrix_rep(exterior_power(rep1, d1));
    const auto e2 = as_matrix_rep(exterior_power(rep2, d2));
    const auto hom = hom_space(e1, e2);
    out.hom_dim = hom.dim();
    out.base_hom_dim = rep1.dim() == rep2.dim() ? hom_space(as_matrix_rep(rep1), as_matrix_rep(rep2)).dim() : 0;
    const bool expect_iso = out.base_hom_dim > 0 && d1 == d2 && out.n1 == out.n2;
    if (out.hom_dim == 0) {
        out.consistent = !expect_iso;
        out.conclusion = "not isomorphic";
        return out;
    }
    out.isomorphic = true;
    if (out.hom_dim != 1) {
        out.consistent = false;
        out.conclusion = "hom space of dimension " + std::to_string(out.hom_dim) + " between simple modules";
        return out;
    }
    out.psi = hom.basis.front();
    out.lift = lift_isomorphism(rep1, rep2, d1, d2, *out.psi, opts);
    out.consistent = expect_iso && out.rigidity;
    out.conclusion = "isomorphic; lifted to degree one";
    return out;
}

}  // namespace reflex

#endif
