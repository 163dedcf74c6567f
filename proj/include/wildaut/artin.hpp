/*
   Copyright 2026 The wildaut authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WILDAUT_ARTIN_HPP
#define WILDAUT_ARTIN_HPP

#include <optional>

#include "wildaut/poly.hpp"

namespace wildaut {

// p-adic split k = i * p^j with gcd(i, p) = 1
inline void split_p_part(i64 k, fp_t p, i64* i, unsigned* j) {
    *j = 0;
    *i = k;
    while (*i % p == 0) {
        *i /= p;
        ++*j;
    }
}

inline bool is_p_power(i64 k, fp_t p, unsigned* j = nullptr) {
    if (k < 1) return false;
    unsigned jj = 0;
    while (k % p == 0) {
        k /= p;
        ++jj;
    }
    if (j) *j = jj;
    return k == 1;
}

// ---- reduced representative ----

template <class D>
struct ASReduction {
    UP<D> red;            // p-power-free representative, constant dropped
    UP<D> witness;        // Q with f = red + Q^p - Q + constant
    typename D::C constant;
};

template <class D>
ASReduction<D> artin_schreier_reduce(const UP<D>& f) {
    fp_t p = f.dom.p();
    ASReduction<D> out{up_zero(f.dom), up_zero(f.dom), f.dom.zero()};
    for (auto& [k, c] : f.t) {
        if (k == 0) {
            out.constant = f.dom.add(out.constant, c);
            continue;
        }
        i64 i;
        unsigned j;
        split_p_part(k, p, &i, &j);
        if (j == 0) {
            up_add_term(out.red, i, c);
            continue;
        }
        typename D::C root = f.dom.p_root_iter(c, j);
        up_add_term(out.red, i, root);
        for (unsigned u = 0; u < j; ++u)
            out.witness = up_add(out.witness, up_pow_p(up_mono(f.dom, i, root), u));
    }
    UP<D> recon = up_add(out.red, up_sub(up_pow_p(out.witness, 1), out.witness));
    up_add_term(recon, 0, out.constant);
    check_internal(recon == f, "reduction witness identity failed");
    return out;
}

// conductor and genus; requires red(f) != 0
struct CoverInvariants {
    i64 conductor;
    i64 genus;
};

template <class D>
CoverInvariants cover_invariants_of_reduced(const UP<D>& red) {
    require(!red.is_zero(), ErrKind::degenerate_cover, "reducible cover: red(f) = 0");
    i64 m = red.deg();
    require(m >= 1, ErrKind::degenerate_cover, "degenerate cover: conductor 0");
    fp_t p = red.dom.p();
    return CoverInvariants{m, (m - 1) * static_cast<i64>(p - 1) / 2};
}

// ---- the decomposition Delta(f) = F + (Id - F) P_f ----

template <class D>
struct Decomposition {
    i64 m;
    BP<D> delta;
    BP<D> big_f;  // X-exponents of the form i p^{n(i)}
    BP<D> p_f;    // deg_X <= (m-1)/p, no constant term in X
};

inline i64 top_exponent(i64 i, i64 m, fp_t p, unsigned* n_out = nullptr) {
    i64 t = i;
    unsigned n = 0;
    while (t * static_cast<i64>(p) < m) {
        t *= p;
        ++n;
    }
    if (n_out) *n_out = n;
    return t;
}

template <class D>
void require_reduced(const UP<D>& f) {
    fp_t p = f.dom.p();
    require(!f.is_zero(), ErrKind::degenerate_cover, "zero polynomial");
    require(f.deg() % p != 0, ErrKind::domain, "degree divisible by p");
    for (auto& [k, c] : f.t)
        require(k >= 1 && k % p != 0, ErrKind::domain, "input not reduced");
}

template <class D>
Decomposition<D> decompose(const UP<D>& f) {
    require_reduced(f);
    fp_t p = f.dom.p();
    i64 m = f.deg();
    Decomposition<D> out{m, bp_delta(f), bp_zero(f.dom), bp_zero(f.dom)};
    for (auto& [kx, a] : out.delta.t) {
        i64 i;
        unsigned j;
        split_p_part(kx, p, &i, &j);
        unsigned n;
        i64 top = top_exponent(i, m, p, &n);
        check_internal(j <= n, "monomial above the top exponent");
        if (j == n) {
            for (auto& [ky, c] : a.t) bp_add_term(out.big_f, kx, ky, c);
        } else {
            UP<D> raised = up_pow_p(a, n - j);
            for (auto& [ky, c] : raised.t) bp_add_term(out.big_f, top, ky, c);
            for (unsigned u = 0; u + j < n; ++u) {
                UP<D> part = up_pow_p(a, u);
                i64 px = kx;
                for (unsigned v = 0; v < u; ++v) px *= p;
                for (auto& [ky, c] : part.t) bp_add_term(out.p_f, px, ky, c);
            }
        }
    }
    // structural invariants of the unique decomposition
    i64 bound = (m - 1) / p;
    check_internal(out.p_f.t.count(0) == 0, "P_f has a constant X-term");
    check_internal(out.p_f.deg_x() <= bound, "P_f exceeds the X-degree bound");
    for (auto& [kx, a] : out.big_f.t) {
        i64 i;
        unsigned j;
        split_p_part(kx, p, &i, &j);
        check_internal(kx < m && kx * static_cast<i64>(p) >= m, "F exponent not a top exponent");
        (void)i;
        (void)j;
    }
    BP<D> recon = bp_add(out.big_f, bp_sub(out.p_f, bp_pow_p(out.p_f, 1)));
    check_internal(recon == out.delta, "decomposition identity failed");
    return out;
}

// Truncated-series route to P_f; must agree with decompose() coefficientwise.
template <class D>
BP<D> pf_by_series(const UP<D>& f) {
    require_reduced(f);
    i64 m = f.deg();
    i64 bound = (m - 1) / static_cast<i64>(f.dom.p());
    BP<D> target = bp_trunc_x(bp_delta(f), bound);
    BP<D> acc = target;
    for (int iter = 0; iter < 128; ++iter) {
        BP<D> nxt = bp_trunc_x(bp_add(target, bp_pow_p(acc, 1)), bound);
        if (nxt == acc) return acc;
        acc = std::move(nxt);
    }
    check_internal(false, "geometric series did not stabilize");
    return acc;
}

// ---- additive polynomials ----

// (is_additive, is_separable)
std::pair<bool, bool> check_additive_separable(const UP<FDom>& u);

// monic gcd of the Y-coefficients of F(X,Y); postconditions asserted
UP<FDom> additive_polynomial(const Decomposition<FDom>& dec);

// f = X * R(X) with R additive? Returns R on success. Requires f reduced.
std::optional<UP<FDom>> is_x_times_additive(const UP<FDom>& f);

// Shape of the top coefficient: a_{m-1} in lc(f)*m*Y + (Y k[Y])^p
bool top_coefficient_shape_ok(const Decomposition<FDom>& dec, const FElem& lead);

}  // namespace wildaut

#endif
