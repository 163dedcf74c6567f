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

#include "wildaut/generic.hpp"

#include <algorithm>

namespace wildaut {

namespace {
i64 ipow_i(i64 b, unsigned e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}
}  // namespace

UniversalFamily universal_family(fp_t p, i64 m) {
    require(is_prime_u64(p), ErrKind::usage, "p must be prime");
    require(m >= 2 && m % p != 0, ErrKind::usage, "conductor must be >= 2 and coprime to p");
    UniversalFamily U;
    U.p = p;
    U.m = m;
    std::vector<std::string> names;
    for (i64 i = 1; i < m; ++i)
        if (i % p != 0) {
            U.param_exps.push_back(i);
            names.push_back("t" + std::to_string(i));
        }
    U.A = ParamRing::get(p, names);
    PDom dom{U.A};
    U.f = up_zero(dom);
    for (size_t k = 0; k < U.param_exps.size(); ++k)
        up_add_term(U.f, U.param_exps[k], pr_var(U.A, k));
    up_add_term(U.f, m, pr_const(U.A, 1));
    U.dec = decompose(U.f);

    // top-coefficient shape over the parameter ring: a_{m-1} in mY + (YA[Y])^p
    {
        UP<PDom> a = U.dec.big_f.coeff_x(m - 1);
        check_internal(a.coeff(1) == pr_const(U.A, m % p), "universal a_{m-1} linear term");
        for (auto& [k, c] : a.t) {
            if (k == 1) continue;
            check_internal(k % p == 0 && pr_p_root(c).has_value(),
                           "universal a_{m-1} has a non-p-th-power tail");
        }
        U.checks.push_back("a_{m-1} in mY + (Y A[Y])^p");
    }
    // leading coefficient of a_{j0} when m-1 = l p^s with l > 1, s > 0
    i64 ell = m - 1;
    unsigned s = 0;
    while (ell % p == 0) {
        ell /= p;
        ++s;
    }
    if (ell > 1 && s > 0) {
        i64 j0 = 1 + (ell - 1) * ipow_i(p, s);
        UP<PDom> aj0 = U.dec.big_f.coeff_x(j0);
        check_internal(aj0.deg() == ipow_i(p, s), "a_{j0} degree is not p^s");
        check_internal(aj0.lc() == pr_const(U.A, ell % p), "a_{j0} leading coefficient is not l");
        U.checks.push_back("a_{j0} = l*Y^{p^s} + lower");
    }
    return U;
}

GenericAd generic_additive_polynomial(const UniversalFamily& U) {
    std::vector<const UP<PDom>*> coeffs;
    for (auto& [kx, a] : U.dec.big_f.t) coeffs.push_back(&a);
    check_internal(!coeffs.empty(), "empty universal decomposition");
    std::sort(coeffs.begin(), coeffs.end(),
              [](const UP<PDom>* a, const UP<PDom>* b) { return a->deg() < b->deg(); });
    PDom dom{U.A};
    UP<PDom> g = *coeffs[0];
    UP<PDom> y = up_mono(dom, 1, pr_const(U.A, 1));
    for (size_t i = 1; i < coeffs.size(); ++i) {
        if (g == y) break;
        g = up_gcd_param(g, *coeffs[i]);
    }
    GenericAd out;
    out.monic = !g.is_zero() && g.lc() == pr_const(U.A, 1);
    out.ad = std::move(g);
    return out;
}

SpecializeResult specialize(const UniversalFamily& U, const GenericAd& ad,
                            const std::vector<FElem>& values, const AnalyzeOptions& opt) {
    require(values.size() == U.param_exps.size(), ErrKind::usage,
            "specialization needs one value per parameter");
    const Field* K = values.empty() ? nullptr : values[0].F;
    require(K != nullptr, ErrKind::usage, "parameter-free families have nothing to specialize");
    for (auto& v : values) require(v.F == K, ErrKind::usage, "values must share one field");
    UP<FDom> phif = up_specialize(U.f, values, K);
    SpecializeResult out{analyze(phif, opt), up_specialize(ad.ad, values, K), false, false};
    check_internal(!out.phi_ad.is_zero(), "specialized generic Ad vanished");
    if (ad.monic) out.phi_ad = up_monic(out.phi_ad);
    out.equal = (out.phi_ad == out.analysis.ad);
    if (!out.equal) {
        UP<FDom> rem = up_divrem(out.analysis.ad, up_monic(out.phi_ad)).second;
        check_internal(rem.is_zero(), "specialized generic Ad does not divide the computed Ad");
        out.degenerated = true;
    }
    return out;
}

LinearizedSymbolic linearized_family_symbolic(fp_t p, unsigned n) {
    require(n >= 1, ErrKind::usage, "n >= 1");
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    const ParamRing* A = ParamRing::get(p, names);
    PDom dom{A};
    UP<PDom> f = up_zero(dom);
    unsigned i0 = (p == 2) ? 1 : 0;  // t_0 = 0 is forced for p = 2
    for (unsigned i = i0; i < n; ++i) up_add_term(f, 1 + ipow_i(p, i), pr_var(A, i));
    up_add_term(f, 1 + ipow_i(p, n), pr_const(A, 1));
    Decomposition<PDom> dec = decompose(f);
    check_internal(dec.big_f.t.size() == 1, "linearized family has a single top column");
    LinearizedSymbolic out{dec.big_f.t.begin()->second, up_zero(dom)};
    for (unsigned i = i0; i <= n; ++i) {
        PElem ti = (i == n) ? pr_const(A, 1) : pr_var(A, i);
        up_add_term(out.closed_form, ipow_i(p, n - i), pr_pow_p(ti, n - i));
        up_add_term(out.closed_form, ipow_i(p, n + i), pr_pow_p(ti, n));
    }
    return out;
}

}  // namespace wildaut
