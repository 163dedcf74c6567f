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

#include "wildaut/poly.hpp"

#include <algorithm>
#include <numeric>

namespace wildaut {

fp_t binom_mod_p(i64 n, i64 k, fp_t p) {
    if (k < 0 || k > n) return 0;
    u64 res = 1;
    while (n || k) {
        u64 nd = static_cast<u64>(n % p), kd = static_cast<u64>(k % p);
        n /= p;
        k /= p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd < p
        u64 num = 1, den = 1;
        for (u64 i = 1; i <= kd; ++i) {
            num = (num * ((nd - kd + i) % p)) % p;
            den = (den * i) % p;
        }
        // invert den
        u64 inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        res = (res * ((num * inv) % p)) % p;
        if (!res) return 0;
    }
    return static_cast<fp_t>(res);
}

std::string FDom::print(const FElem& a, bool* needs_parens) const {
    *needs_parens = false;
    if (K->e == 1 || K->in_prime_field(a)) return std::to_string(a.c.empty() ? 0 : a.c[0]);
    // polynomial in the generator symbol w, decreasing exponents
    std::ostringstream os;
    bool first = true;
    size_t terms = 0;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (!a.c[i]) continue;
        ++terms;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << a.c[i];
            continue;
        }
        if (a.c[i] != 1) os << a.c[i] << "*";
        os << "w";
        if (i > 1) os << "^" << i;
    }
    *needs_parens = true;  // extension literals are always parenthesized in terms
    if (terms == 0) return "0";
    return os.str();
}

PElem PDom::inv(const PElem& a) const {
    require(a.is_constant() && !a.is_zero(), ErrKind::domain,
            "parameter-ring element is not a unit");
    fp_t c = a.t.begin()->second;
    u64 inv = 1, base = c, e = R->p - 2;
    while (e) {
        if (e & 1) inv = (inv * base) % R->p;
        base = (base * base) % R->p;
        e >>= 1;
    }
    return pr_const(R, static_cast<i64>(inv));
}

std::string PDom::print(const PElem& a, bool* needs_parens) const {
    *needs_parens = a.t.size() > 1;
    return pr_print(a);
}

// Y is adjoined as the leading variable "#Y" of an extended ring; pr_gcd then
// computes the primitive gcd with recursive content extraction.
UP<PDom> up_gcd_param(const UP<PDom>& a, const UP<PDom>& b) {
    require(!a.is_zero() && !b.is_zero(), ErrKind::domain,
            "parameter-ring gcd requires nonzero inputs");
    const ParamRing* R = a.dom.R;
    std::vector<std::string> names;
    names.push_back("#Y");
    for (auto& n : R->names) names.push_back(n);
    const ParamRing* RY = ParamRing::get(R->p, names);
    auto lift = [&](const UP<PDom>& f) {
        PElem out = pr_zero(RY);
        for (auto& [k, c] : f.t)
            for (auto& [ev, cc] : c.t) {
                std::vector<unsigned> e2;
                e2.reserve(ev.size() + 1);
                e2.push_back(static_cast<unsigned>(k));
                e2.insert(e2.end(), ev.begin(), ev.end());
                out.t[std::move(e2)] = cc;
            }
        return out;
    };
    PElem g = pr_gcd(lift(a), lift(b));
    UP<PDom> out = up_zero(a.dom);
    for (auto& [ev, c] : g.t) {
        std::vector<unsigned> e2(ev.begin() + 1, ev.end());
        PElem mono{R, {}};
        mono.t[std::move(e2)] = c;
        up_add_term(out, static_cast<i64>(ev[0]), mono);
    }
    return out;
}

PElem up_content_param(const UP<PDom>& f) {
    PElem g = pr_zero(f.dom.R);
    for (auto& [k, c] : f.t) g = pr_gcd(g, c);
    return g;
}

UP<FDom> up_embed(const UP<FDom>& f, const Field* K) {
    if (f.dom.K == K) return f;
    UP<FDom> r = up_zero(FDom{K});
    for (auto& [k, c] : f.t) r.t.emplace(k, embed(c, K));
    return r;
}

UP<FDom> up_specialize(const UP<PDom>& f, const std::vector<FElem>& values, const Field* K) {
    UP<FDom> r = up_zero(FDom{K});
    for (auto& [k, c] : f.t) up_add_term(r, k, pr_eval(c, values, K));
    return r;
}

BP<FDom> bp_embed(const BP<FDom>& f, const Field* K) {
    if (f.dom.K == K) return f;
    BP<FDom> r = bp_zero(FDom{K});
    for (auto& [kx, u] : f.t) r.t.emplace(kx, up_embed(u, K));
    return r;
}

BP<FDom> bp_specialize(const BP<PDom>& f, const std::vector<FElem>& values, const Field* K) {
    BP<FDom> r = bp_zero(FDom{K});
    for (auto& [kx, u] : f.t) {
        UP<FDom> s = up_specialize(u, values, K);
        if (!s.is_zero()) r.t.emplace(kx, std::move(s));
    }
    return r;
}

UP<FDom> up_mulmod(const UP<FDom>& a, const UP<FDom>& b, const UP<FDom>& m) {
    return up_divrem(up_mul(a, b), m).second;
}

UP<FDom> up_powp_mod(const UP<FDom>& h, const UP<FDom>& m) {
    return up_divrem(up_pow_p(h, 1), m).second;
}

UP<FDom> up_powq_mod(const UP<FDom>& h, const UP<FDom>& m) {
    UP<FDom> r = h;
    for (unsigned i = 0; i < m.dom.K->e; ++i) r = up_powp_mod(r, m);
    return r;
}

bool up_squarefree(const UP<FDom>& u) {
    if (u.is_zero()) return false;
    UP<FDom> d = up_derivative(u);
    if (d.is_zero()) return false;
    return up_gcd(u, d).deg() == 0;
}

std::vector<std::pair<i64, i64>> distinct_degree_profile(const UP<FDom>& u) {
    require(up_squarefree(u), ErrKind::domain, "distinct-degree profile requires squarefree input");
    UP<FDom> v = up_monic(u);
    UP<FDom> y = up_mono(u.dom, 1, u.dom.one());
    std::vector<std::pair<i64, i64>> parts;
    UP<FDom> h = up_divrem(y, v).second;  // Y mod v
    i64 d = 0;
    while (v.deg() > 0) {
        ++d;
        if (2 * d > v.deg()) {
            parts.emplace_back(v.deg(), v.deg());
            break;
        }
        h = up_powq_mod(h, v);
        UP<FDom> g = up_gcd(v, up_sub(h, y));
        if (g.deg() > 0) {
            parts.emplace_back(d, g.deg());
            v = up_divrem(v, g).first;
            if (v.deg() > 0) h = up_divrem(h, v).second;
        }
    }
    return parts;
}

}  // namespace wildaut
