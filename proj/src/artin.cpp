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

#include "wildaut/artin.hpp"

#include <algorithm>

namespace wildaut {

std::pair<bool, bool> check_additive_separable(const UP<FDom>& u) {
    check_internal(!u.is_zero(), "additivity test on zero polynomial");
    fp_t p = u.dom.p();
    bool additive = true;
    for (auto& [k, c] : u.t)
        if (!is_p_power(k, p)) {
            additive = false;
            break;
        }
    bool separable;
    if (additive) {
        separable = !u.coeff(1).is_zero();
    } else {
        UP<FDom> d = up_derivative(u);
        separable = !d.is_zero() && up_gcd(u, d).deg() == 0;
    }
    return {additive, separable};
}

UP<FDom> additive_polynomial(const Decomposition<FDom>& dec) {
    std::vector<const UP<FDom>*> coeffs;
    for (auto& [kx, a] : dec.big_f.t) coeffs.push_back(&a);
    check_internal(!coeffs.empty(), "empty decomposition");
    std::sort(coeffs.begin(), coeffs.end(),
              [](const UP<FDom>* a, const UP<FDom>* b) { return a->deg() < b->deg(); });
    UP<FDom> g = up_zero(dec.big_f.dom);
    for (auto* a : coeffs) {
        g = up_gcd(g, *a);
        if (g.deg() == 1) break;  // gcd can only shrink to Y
    }
    auto [additive, separable] = check_additive_separable(g);
    check_internal(additive && separable, "Ad_f must be additive and separable");
    i64 m = dec.m;
    check_internal(g.deg() <= (m - 1) * (m - 1), "deg Ad_f exceeds (m-1)^2");
    fp_t p = dec.big_f.dom.p();
    if ((m - 1) % p != 0)
        check_internal(g.deg() == 1, "gcd(m-1,p)=1 forces Ad_f = Y");
    return g;
}

std::optional<UP<FDom>> is_x_times_additive(const UP<FDom>& f) {
    require_reduced(f);
    fp_t p = f.dom.p();
    UP<FDom> r = up_zero(f.dom);
    for (auto& [k, c] : f.t) {
        if (k < 2 || !is_p_power(k - 1, p)) return std::nullopt;
        r.t.emplace(k - 1, c);
    }
    return r;
}

bool top_coefficient_shape_ok(const Decomposition<FDom>& dec, const FElem& lead) {
    // a_{m-1}(Y) = lc(f)*m*Y + (p-th powers): the linear coefficient is pinned
    // and every other exponent is divisible by p (coefficients in a perfect
    // field are automatically p-th powers).
    const FDom& dom = dec.big_f.dom;
    fp_t p = dom.p();
    UP<FDom> a = dec.big_f.coeff_x(dec.m - 1);
    if (a.coeff(1) != dom.mul(lead, dom.from_int(dec.m % p))) return false;
    if (a.deg() > (dec.m - 1) * (dec.m - 1)) return false;
    for (auto& [k, c] : a.t)
        if (k != 1 && k % p != 0) return false;
    return true;
}

}  // namespace wildaut
