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

#include "wildaut/realize.hpp"

#include <numeric>

namespace wildaut {

namespace {
i64 ipow_i(i64 b, unsigned e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

fp_t inv_mod(fp_t a, fp_t p) {
    for (fp_t c = 1; c < p; ++c)
        if (c * a % p == 1) return c;
    check_internal(false, "inverse of zero residue");
    return 0;
}
}  // namespace

UP<FDom> linearized_ad_closed_form(unsigned n, const std::vector<FElem>& t, const Field* K) {
    fp_t p = K->p;
    UP<FDom> ad = up_zero(FDom{K});
    for (unsigned i = 0; i <= n; ++i) {
        FElem ti = (i == n) ? K->one() : embed(t[i], K);
        if (ti.is_zero()) continue;
        up_add_term(ad, ipow_i(p, n - i), K->frob_iter(ti, (n - i) % K->e));
        up_add_term(ad, ipow_i(p, n + i), K->frob_iter(ti, n % K->e));
    }
    return ad;
}

Realization realize_linearized(fp_t p, unsigned n, const std::vector<FElem>& t) {
    require(n >= 1 && t.size() == n, ErrKind::usage, "need parameter values t_0..t_{n-1}");
    require(is_prime_u64(p), ErrKind::usage, "p must be prime");
    const Field* K = t[0].F;
    for (auto& x : t) require(x.F == K, ErrKind::usage, "parameters must share one field");
    require(K->p == p, ErrKind::usage, "characteristic mismatch");
    require(p > 2 || t[0].is_zero(), ErrKind::domain,
            "p = 2 requires t_0 = 0 (type III.b family)");
    Realization out;
    out.field = K;
    out.f = up_zero(FDom{K});
    for (unsigned i = 0; i < n; ++i) up_add_term(out.f, 1 + ipow_i(p, i), t[i]);
    up_add_term(out.f, 1 + ipow_i(p, n), K->one());
    out.expected_ad = linearized_ad_closed_form(n, t, K);
    out.target = (p > 2) ? "extraspecial type I" : "extraspecial type III.b";
    return out;
}

BP<FDom> witt_cocycle(fp_t p) {
    require(p > 2, ErrKind::domain, "the Witt cocycle construction needs p > 2");
    const Field* K = Field::get(p, 1);
    BP<FDom> c = bp_zero(FDom{K});
    for (fp_t i = 1; i < p; ++i) {
        // (-1)^{i-1} / i
        fp_t v = inv_mod(i, p);
        if (i % 2 == 0) v = (p - v) % p;
        bp_add_term(c, static_cast<i64>(i), static_cast<i64>(p - i), K->from_int(v));
    }
    check_internal(c == bp_transpose(c), "Witt cocycle is not symmetric");
    check_internal(c.coeff_x(0).is_zero(), "Witt cocycle has a constant column");
    return c;
}

Realization realize_cyclic_p2(fp_t p) {
    require(p > 2, ErrKind::domain, "p^2-cyclic construction needs p > 2");
    const Field* K = Field::get(p, 1);
    Realization out;
    out.field = K;
    out.f = up_zero(FDom{K});
    for (fp_t i = 1; i < p; ++i)
        up_add_term(out.f, static_cast<i64>(p) + static_cast<i64>(p - 1) * i,
                    K->from_int(inv_mod(i, p)));
    // cross-check f_1 = c(X^p, -X)
    BP<FDom> c = witt_cocycle(p);
    UP<FDom> direct = up_zero(FDom{K});
    for (auto& [kx, u] : c.t)
        for (auto& [ky, cc] : u.t) {
            FElem coef = (ky % 2) ? K->neg(cc) : cc;  // (X^p)^kx * (-X)^ky
            up_add_term(direct, static_cast<i64>(p) * kx + ky, coef);
        }
    check_internal(direct == out.f, "f_1 differs from c(X^p, -X)");
    out.checks.push_back("f_1 = c(X^p, -X)");
    out.expected_ad = up_zero(FDom{K});
    up_add_term(out.expected_ad, p, K->one());
    up_add_term(out.expected_ad, 1, K->from_int(-1));
    out.target = "cyclic of order p^2";
    return out;
}

Realization realize_type_II(fp_t p, unsigned n) {
    require(p > 2 && n >= 1, ErrKind::domain, "type II construction needs p > 2, n >= 1");
    const Field* K4 = Field::get(p, 4 * n);
    i64 q = ipow_i(p, n);
    u64 q2m1 = static_cast<u64>(q) * q - 1;
    // first theta in canonical order with theta^{q^2-1} = -1
    FElem theta = K4->zero();
    FElem minus1 = K4->from_int(-1);
    bool found = false;
    for (u64 i = 1; i < K4->size_fits() && !found; ++i) {
        FElem cand = K4->element_at(i);
        if (K4->pow(cand, q2m1) == minus1) {
            theta = cand;
            found = true;
        }
    }
    check_internal(found, "no admissible theta in F_{q^4}");
    // S = A + A^p + ... + A^{p^{n-1}} with A = theta X^q - theta^q X
    UP<FDom> A = up_zero(FDom{K4});
    up_add_term(A, q, theta);
    up_add_term(A, 1, K4->neg(K4->pow(theta, static_cast<u64>(q))));
    UP<FDom> S = up_zero(FDom{K4});
    for (unsigned j = 0; j < n; ++j) S = up_add(S, up_pow_p(A, j));
    // S^p - S = theta^q (X^{q^2} + X)
    UP<FDom> lhs = up_sub(up_pow_p(S, 1), S);
    UP<FDom> rhs = up_zero(FDom{K4});
    FElem tq = K4->pow(theta, static_cast<u64>(q));
    up_add_term(rhs, q * q, tq);
    up_add_term(rhs, 1, tq);
    check_internal(lhs == rhs, "S^p - S identity failed");

    Realization out;
    out.field = K4;
    UP<FDom> f1 = up_embed(realize_cyclic_p2(p).f, K4);
    out.f = up_compose(f1, S);
    up_add_term(out.f, 1 + q, K4->one());  // + f_2 = X^{1+q}
    out.expected_ad = up_zero(FDom{K4});
    up_add_term(out.expected_ad, q * q, K4->one());
    up_add_term(out.expected_ad, 1, K4->one());
    out.target = "extraspecial type II";
    out.checks.push_back("S^p - S = theta^q (X^{q^2} + X)");
    return out;
}

Realization realize_type_II_family(fp_t p, unsigned n, const std::vector<FElem>& t) {
    require(p > 2 && n >= 1 && t.size() == n, ErrKind::domain,
            "family needs p > 2 and n specialized parameters");
    const Field* K = t[0].F;
    for (auto& x : t) require(x.F == K, ErrKind::usage, "parameters must share one field");
    i64 q = ipow_i(p, n);
    std::vector<FElem> tq;
    for (auto& x : t) tq.push_back(K->pow(x, static_cast<u64>(q)));
    UP<FDom> ad2 = linearized_ad_closed_form(n, tq, K);
    // alpha from the additive relation; theta = alpha^{p^{2n}}
    UP<FDom> rel = up_zero(FDom{K});
    up_add_term(rel, ipow_i(p, 2 * n), K->one());
    up_add_term(rel, 1, K->one());
    for (unsigned i = 1; i < n; ++i) {
        if (t[i].is_zero()) continue;
        up_add_term(rel, ipow_i(p, n + i), K->frob_iter(t[i], n % K->e));
        up_add_term(rel, ipow_i(p, n - i), K->frob_iter(t[i], (n - i) % K->e));
    }
    RootSpace rs = root_basis(rel);
    check_internal(rs.count() > 1, "no nonzero root for the theta relation");
    FElem alpha = rs.roots[1];
    for (auto& y : rs.roots)
        if (!y.is_zero() && canonical_less(y, alpha)) alpha = y;
    const Field* L = rs.big;
    check_internal(up_eval(up_embed(rel, L), alpha).is_zero(), "theta relation root check");
    FElem theta = L->frob_iter(alpha, (2 * n) % L->e);
    // solve S^p - S = theta * Ad_{f_2}
    UP<FDom> target = up_scale(up_embed(ad2, L), theta);
    UP<FDom> S = up_zero(FDom{L});
    FElem prev = L->zero();
    for (unsigned k = 0; k < 2 * n; ++k) {
        FElem gk = target.coeff(ipow_i(p, k));
        FElem sk = (k == 0) ? L->neg(gk) : L->sub(L->frob(prev), gk);
        up_add_term(S, ipow_i(p, k), sk);
        prev = sk;
    }
    check_internal(L->frob(prev) == target.coeff(ipow_i(p, 2 * n)),
                   "theta*Ad_{f_2} is not in the image of F - Id");
    check_internal(up_sub(up_pow_p(S, 1), S) == target, "S solve failed");

    Realization out;
    out.field = L;
    UP<FDom> f2 = up_zero(FDom{L});
    for (unsigned i = 0; i < n; ++i) up_add_term(f2, 1 + ipow_i(p, i), embed(tq[i], L));
    up_add_term(f2, 1 + q, L->one());
    UP<FDom> f1 = up_embed(realize_cyclic_p2(p).f, L);
    out.f = up_add(up_compose(f1, S), f2);
    out.expected_ad = up_embed(ad2, L);
    out.target = "extraspecial type II (family)";
    out.checks.push_back("theta relation verified by evaluation");
    out.checks.push_back("theta * Ad_{f_2} = S^p - S");
    return out;
}

SaturatedRealization realize_saturated(fp_t p, unsigned n, const UP<FDom>& S_F, SaturatedBase base,
                                       const AnalyzeOptions& opt) {
    auto [addv, sep] = check_additive_separable(S_F);
    require(addv && sep, ErrKind::domain, "S_F must be additive and separable");
    require(S_F.lc() == S_F.dom.K->one(), ErrKind::domain, "S_F must be monic");
    i64 q = ipow_i(p, n);
    require(S_F.deg() > 0 && S_F.deg() < q * q, ErrKind::domain,
            "S_F must be a proper nonzero divisor");
    const Field* K = S_F.dom.K;
    require(K->p == p, ErrKind::usage, "characteristic mismatch");
    {
        UP<FDom> full = up_zero(FDom{K});
        up_add_term(full, q * q, K->one());
        up_add_term(full, 1, K->one());
        require(up_divrem(full, S_F).second.is_zero(), ErrKind::domain,
                "S_F does not divide Y^{q^2} + Y");
    }
    Realization real;
    UP<FDom> base_f;  // the realization whose commutation rule must survive
    if (base == SaturatedBase::type_IIIb) {
        require(p == 2, ErrKind::domain, "type III.b base needs p = 2");
        real.field = K;
        real.f = up_pow(S_F, 7);
        up_add_term(real.f, 1 + q, K->one());
        base_f = up_zero(FDom{K});
        up_add_term(base_f, 1 + q, K->one());
        real.target = "saturated subgroup of a type III.b closure";
    } else if (base == SaturatedBase::type_I) {
        require(p > 2, ErrKind::domain, "type I base needs p > 2");
        unsigned ell = (p == 3) ? 4 : 2;
        real.field = K;
        real.f = up_pow(S_F, ell + 1);
        up_add_term(real.f, 1 + q, K->one());
        base_f = up_zero(FDom{K});
        up_add_term(base_f, 1 + q, K->one());
        real.target = "saturated subgroup of a type I closure";
    } else {
        require(p > 2, ErrKind::domain, "type II base needs p > 2");
        Realization t2 = realize_type_II(p, n);
        unsigned L_e = static_cast<unsigned>(std::lcm<u64, u64>(K->e, t2.field->e));
        require(L_e <= Field::degree_cap(), ErrKind::cap_exceeded, "common field exceeds cap");
        const Field* L = Field::get(p, L_e);
        unsigned ell = (p == 3) ? 4 : 2;
        real.field = L;
        real.f = up_pow(up_embed(S_F, L), ell + 1);
        real.f = up_add(real.f, up_embed(t2.f, L));
        base_f = up_embed(t2.f, L);
        real.target = "saturated subgroup of a type II closure";
    }
    real.expected_ad = up_embed(S_F, real.field);

    CoverAnalysis A = analyze(real.f, opt);
    check_internal(A.ad == real.expected_ad, "Ad of the saturated realization is not S_F");
    real.checks.push_back("Ad_f = S_F");

    // the modification must not change the commutation rule
    Decomposition<FDom> bdec = decompose(artin_schreier_reduce(base_f).red);
    BP<FDom> Pb = bp_embed(bdec.p_f, A.big);
    size_t cnt = A.rs.count();
    u64 pairs = static_cast<u64>(cnt) * cnt;
    Rng rng(opt.seed ^ 0x5a7ULL);
    auto check_pair = [&](size_t i, size_t j) {
        fp_t lhs = epsilon_at(Pb, A.rs.roots[i], A.rs.roots[j]);
        check_internal(lhs == A.group.eps(i, j), "commutation rule differs from the base cover");
    };
    if (pairs <= 4096) {
        for (size_t i = 0; i < cnt; ++i)
            for (size_t j = 0; j < cnt; ++j) check_pair(i, j);
    } else {
        for (int k = 0; k < 512; ++k) check_pair(rng.below(cnt), rng.below(cnt));
    }
    real.checks.push_back("commutation rule equals the base family on Z(S_F)");
    return SaturatedRealization{std::move(real), std::move(A)};
}

Realization realize_D8_family(D8Case which) {
    const Field* F16 = Field::get(2, 4);
    auto mult_order = [&](const FElem& x) -> u64 {
        if (x.is_zero()) return 0;
        FElem cur = x;
        u64 o = 1;
        while (cur != F16->one()) {
            cur = F16->mul(cur, x);
            ++o;
        }
        return o;
    };
    FElem b = F16->zero();
    u64 want = (which == D8Case::case1) ? 5 : 15;
    for (u64 i = 1; i < 16; ++i) {
        FElem cand = F16->element_at(i);
        if (mult_order(cand) == want) {
            b = cand;
            break;
        }
    }
    check_internal(!b.is_zero(), "no primitive root of the requested order in F_16");
    FElem a = F16->zero();
    std::string target;
    switch (which) {
        case D8Case::case1:
            target = "abelian Z/2 x Z/4";
            break;
        case D8Case::case2i:
            a = F16->pow(b, 14);
            target = "elementary abelian (Z/2)^3";
            break;
        case D8Case::case2ii:
            a = F16->pow(b, 4);
            target = "D8";
            break;
        case D8Case::case2iii:
            a = F16->pow(b, 9);
            target = "Q8";
            break;
    }
    // constraint equations 1 + b^5 + b a^6 = 0 and b^2 a^4 + a b^4 + a^7 = 0
    FElem e1 = F16->add(F16->add(F16->one(), F16->pow(b, 5)), F16->mul(b, F16->pow(a, 6)));
    FElem e2 = F16->add(
        F16->add(F16->mul(F16->pow(b, 2), F16->pow(a, 4)), F16->mul(a, F16->pow(b, 4))),
        F16->pow(a, 7));
    check_internal(e1.is_zero() && e2.is_zero(), "conductor-25 constraint equations violated");

    Realization out;
    out.field = F16;
    UP<FDom> sf = up_zero(FDom{F16});
    up_add_term(sf, 4, F16->one());
    up_add_term(sf, 2, a);
    up_add_term(sf, 1, b);
    out.f = up_pow(sf, 7);
    up_add_term(out.f, 5, F16->one());
    out.expected_ad = sf;
    out.target = target;
    out.checks.push_back("constraint equations verified in F_16");
    return out;
}

Realization classic_D8_example() {
    const Field* F2 = Field::get(2, 1);
    Realization out;
    out.field = F2;
    out.f = up_zero(FDom{F2});
    for (i64 k : {3, 7, 19, 35, 41}) up_add_term(out.f, k, F2->one());
    out.expected_ad = up_zero(FDom{F2});
    up_add_term(out.expected_ad, 4, F2->one());
    up_add_term(out.expected_ad, 1, F2->one());
    out.target = "D8";
    return out;
}

}  // namespace wildaut
