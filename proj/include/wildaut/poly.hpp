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

#ifndef WILDAUT_POLY_HPP
#define WILDAUT_POLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wildaut/fq.hpp"
#include "wildaut/param.hpp"

namespace wildaut {

// binomial coefficient mod p by Lucas' theorem
fp_t binom_mod_p(i64 n, i64 k, fp_t p);

// ---- coefficient domains ----

// Field coefficients F_{p^e}.
struct FDom {
    const Field* K = nullptr;
    using C = FElem;
    bool operator==(const FDom& o) const { return K == o.K; }
    fp_t p() const { return K->p; }
    C zero() const { return K->zero(); }
    C one() const { return K->one(); }
    C from_int(i64 v) const { return K->from_int(v); }
    bool is_zero(const C& a) const { return a.is_zero(); }
    bool eq(const C& a, const C& b) const { return a == b; }
    C add(const C& a, const C& b) const { return K->add(a, b); }
    C sub(const C& a, const C& b) const { return K->sub(a, b); }
    C neg(const C& a) const { return K->neg(a); }
    C mul(const C& a, const C& b) const { return K->mul(a, b); }
    C inv(const C& a) const { return K->inv(a); }
    C pow_p(const C& a, unsigned j) const { return K->frob_iter(a, j % K->e); }
    C p_root_iter(const C& a, unsigned j) const {
        return K->frob_iter(a, (K->e - j % K->e) % K->e);
    }
    std::string print(const C& a, bool* needs_parens) const;
};

// Parameter-ring coefficients F_p[t_*]. Frobenius raises parameters to p-th
// powers; inversion exists for constants only.
struct PDom {
    const ParamRing* R = nullptr;
    using C = PElem;
    bool operator==(const PDom& o) const { return R == o.R; }
    fp_t p() const { return R->p; }
    C zero() const { return pr_zero(R); }
    C one() const { return pr_const(R, 1); }
    C from_int(i64 v) const { return pr_const(R, v); }
    bool is_zero(const C& a) const { return a.is_zero(); }
    bool eq(const C& a, const C& b) const { return a == b; }
    C add(const C& a, const C& b) const { return pr_add(a, b); }
    C sub(const C& a, const C& b) const { return pr_sub(a, b); }
    C neg(const C& a) const { return pr_neg(a); }
    C mul(const C& a, const C& b) const { return pr_mul(a, b); }
    C inv(const C& a) const;
    C pow_p(const C& a, unsigned j) const { return pr_pow_p(a, j); }
    C p_root_iter(const C& a, unsigned j) const {
        C r = a;
        for (unsigned u = 0; u < j; ++u) {
            auto t = pr_p_root(r);
            require(t.has_value(), ErrKind::domain, "not reducible over parameter ring");
            r = *t;
        }
        return r;
    }
    std::string print(const C& a, bool* needs_parens) const;
};

// ---- sparse univariate polynomial ----

template <class D>
struct UP {
    D dom;
    std::map<i64, typename D::C> t;  // exponent -> nonzero coefficient

    bool is_zero() const { return t.empty(); }
    i64 deg() const { return t.empty() ? -1 : t.rbegin()->first; }
    typename D::C lc() const { return t.empty() ? dom.zero() : t.rbegin()->second; }
    typename D::C coeff(i64 k) const {
        auto it = t.find(k);
        return it == t.end() ? dom.zero() : it->second;
    }
    bool operator==(const UP& o) const {
        if (!(dom == o.dom) || t.size() != o.t.size()) return false;
        auto a = t.begin();
        auto b = o.t.begin();
        for (; a != t.end(); ++a, ++b)
            if (a->first != b->first || !dom.eq(a->second, b->second)) return false;
        return true;
    }
    bool operator!=(const UP& o) const { return !(*this == o); }
};

template <class D>
UP<D> up_zero(const D& dom) {
    return UP<D>{dom, {}};
}

template <class D>
void up_add_term(UP<D>& f, i64 k, const typename D::C& c) {
    if (f.dom.is_zero(c)) return;
    auto it = f.t.find(k);
    if (it == f.t.end()) {
        f.t.emplace(k, c);
    } else {
        it->second = f.dom.add(it->second, c);
        if (f.dom.is_zero(it->second)) f.t.erase(it);
    }
}

template <class D>
UP<D> up_mono(const D& dom, i64 k, const typename D::C& c) {
    UP<D> f = up_zero(dom);
    up_add_term(f, k, c);
    return f;
}

template <class D>
UP<D> up_add(const UP<D>& a, const UP<D>& b) {
    UP<D> r = a;
    for (auto& [k, c] : b.t) up_add_term(r, k, c);
    return r;
}

template <class D>
UP<D> up_neg(const UP<D>& a) {
    UP<D> r = a;
    for (auto& [k, c] : r.t) c = a.dom.neg(c);
    return r;
}

template <class D>
UP<D> up_sub(const UP<D>& a, const UP<D>& b) {
    return up_add(a, up_neg(b));
}

template <class D>
UP<D> up_scale(const UP<D>& a, const typename D::C& s) {
    UP<D> r = up_zero(a.dom);
    for (auto& [k, c] : a.t) up_add_term(r, k, a.dom.mul(c, s));
    return r;
}

template <class D>
UP<D> up_mul(const UP<D>& a, const UP<D>& b) {
    UP<D> r = up_zero(a.dom);
    for (auto& [ka, ca] : a.t)
        for (auto& [kb, cb] : b.t) up_add_term(r, ka + kb, a.dom.mul(ca, cb));
    return r;
}

// f^{p^j}: exact Frobenius power in characteristic p
template <class D>
UP<D> up_pow_p(const UP<D>& a, unsigned j) {
    if (j == 0) return a;
    i64 q = 1;
    for (unsigned i = 0; i < j; ++i) q *= a.dom.p();
    UP<D> r = up_zero(a.dom);
    for (auto& [k, c] : a.t) r.t.emplace(k * q, a.dom.pow_p(c, j));
    return r;
}

template <class D>
UP<D> up_pow(const UP<D>& a, u64 n) {
    UP<D> r = up_mono(a.dom, 0, a.dom.one());
    UP<D> base = a;
    while (n) {
        if (n & 1) r = up_mul(r, base);
        base = up_mul(base, base);
        n >>= 1;
    }
    return r;
}

template <class D>
typename D::C up_eval(const UP<D>& f, const typename D::C& x) {
    // sparse Horner over descending exponents
    typename D::C acc = f.dom.zero();
    i64 prev = -1;
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        if (prev >= 0) {
            i64 gap = prev - it->first;
            typename D::C xp = x;
            typename D::C pw = f.dom.one();
            i64 n = gap;
            while (n) {
                if (n & 1) pw = f.dom.mul(pw, xp);
                xp = f.dom.mul(xp, xp);
                n >>= 1;
            }
            acc = f.dom.mul(acc, pw);
        }
        acc = f.dom.add(acc, it->second);
        prev = it->first;
    }
    if (prev > 0) {
        typename D::C xp = x;
        typename D::C pw = f.dom.one();
        i64 n = prev;
        while (n) {
            if (n & 1) pw = f.dom.mul(pw, xp);
            xp = f.dom.mul(xp, xp);
            n >>= 1;
        }
        acc = f.dom.mul(acc, pw);
    }
    return acc;
}

template <class D>
UP<D> up_compose(const UP<D>& f, const UP<D>& g) {
    UP<D> acc = up_zero(f.dom);
    i64 prev = -1;
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        if (prev >= 0) acc = up_mul(acc, up_pow(g, static_cast<u64>(prev - it->first)));
        up_add_term(acc, 0, it->second);
        prev = it->first;
    }
    if (prev > 0) acc = up_mul(acc, up_pow(g, static_cast<u64>(prev)));
    return acc;
}

template <class D>
UP<D> up_derivative(const UP<D>& f) {
    UP<D> r = up_zero(f.dom);
    for (auto& [k, c] : f.t) {
        if (k == 0) continue;
        up_add_term(r, k - 1, f.dom.mul(c, f.dom.from_int(k % static_cast<i64>(f.dom.p()))));
    }
    return r;
}

// division with remainder; the divisor's leading coefficient must be a unit
template <class D>
std::pair<UP<D>, UP<D>> up_divrem(const UP<D>& a, const UP<D>& b) {
    check_internal(!b.is_zero(), "polynomial division by zero");
    UP<D> q = up_zero(a.dom), r = a;
    typename D::C linv = a.dom.inv(b.lc());
    i64 db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
        i64 k = r.deg() - db;
        typename D::C qc = a.dom.mul(r.lc(), linv);
        up_add_term(q, k, qc);
        for (auto& [kb, cb] : b.t) up_add_term(r, kb + k, a.dom.neg(a.dom.mul(qc, cb)));
    }
    return {q, r};
}

template <class D>
UP<D> up_monic(const UP<D>& a) {
    if (a.is_zero()) return a;
    return up_scale(a, a.dom.inv(a.lc()));
}

// monic gcd over a field
inline UP<FDom> up_gcd(UP<FDom> a, UP<FDom> b) {
    while (!b.is_zero()) {
        UP<FDom> r = up_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(a);
}

// primitive gcd over a parameter ring via the multivariate machinery: Y is
// adjoined as an extra (leading) variable of the ring.
UP<PDom> up_gcd_param(const UP<PDom>& a, const UP<PDom>& b);

// content of a parameter-ring polynomial (gcd of coefficients)
PElem up_content_param(const UP<PDom>& f);

// map a field polynomial into an extension coefficientwise
UP<FDom> up_embed(const UP<FDom>& f, const Field* K);

// specialize parameters to field values
UP<FDom> up_specialize(const UP<PDom>& f, const std::vector<FElem>& values, const Field* K);

// ---- field-only modular helpers and distinct-degree profile ----

UP<FDom> up_mulmod(const UP<FDom>& a, const UP<FDom>& b, const UP<FDom>& m);
// h^{p} mod m
UP<FDom> up_powp_mod(const UP<FDom>& h, const UP<FDom>& m);
// h^{q} mod m with q = p^e the order of the coefficient field
UP<FDom> up_powq_mod(const UP<FDom>& h, const UP<FDom>& m);

bool up_squarefree(const UP<FDom>& u);

// distinct-degree profile: list of (factor degree d, total degree of the
// degree-d part), ascending in d; parts sum to deg u. Requires u squarefree.
std::vector<std::pair<i64, i64>> distinct_degree_profile(const UP<FDom>& u);

// ---- bivariate polynomials: X-polynomial with Y-polynomial coefficients ----

template <class D>
struct BP {
    D dom;
    std::map<i64, UP<D>> t;  // X-exponent -> coefficient in Y

    bool is_zero() const { return t.empty(); }
    i64 deg_x() const { return t.empty() ? -1 : t.rbegin()->first; }
    UP<D> coeff_x(i64 k) const {
        auto it = t.find(k);
        return it == t.end() ? up_zero(dom) : it->second;
    }
    bool operator==(const BP& o) const {
        if (t.size() != o.t.size()) return false;
        auto a = t.begin();
        auto b = o.t.begin();
        for (; a != t.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }
    bool operator!=(const BP& o) const { return !(*this == o); }
};

template <class D>
BP<D> bp_zero(const D& dom) {
    return BP<D>{dom, {}};
}

template <class D>
void bp_add_term(BP<D>& f, i64 kx, i64 ky, const typename D::C& c) {
    if (f.dom.is_zero(c)) return;
    auto it = f.t.find(kx);
    if (it == f.t.end()) it = f.t.emplace(kx, up_zero(f.dom)).first;
    up_add_term(it->second, ky, c);
    if (it->second.is_zero()) f.t.erase(it);
}

template <class D>
BP<D> bp_add(const BP<D>& a, const BP<D>& b) {
    BP<D> r = a;
    for (auto& [kx, u] : b.t)
        for (auto& [ky, c] : u.t) bp_add_term(r, kx, ky, c);
    return r;
}

template <class D>
BP<D> bp_neg(const BP<D>& a) {
    BP<D> r = a;
    for (auto& [kx, u] : r.t)
        for (auto& [ky, c] : u.t) c = a.dom.neg(c);
    return r;
}

template <class D>
BP<D> bp_sub(const BP<D>& a, const BP<D>& b) {
    return bp_add(a, bp_neg(b));
}

template <class D>
BP<D> bp_pow_p(const BP<D>& a, unsigned j) {
    if (j == 0) return a;
    i64 q = 1;
    for (unsigned i = 0; i < j; ++i) q *= a.dom.p();
    BP<D> r = bp_zero(a.dom);
    for (auto& [kx, u] : a.t) r.t.emplace(kx * q, up_pow_p(u, j));
    return r;
}

template <class D>
BP<D> bp_trunc_x(const BP<D>& a, i64 max_deg) {
    BP<D> r = a;
    for (auto it = r.t.begin(); it != r.t.end();)
        it = (it->first > max_deg) ? r.t.erase(it) : std::next(it);
    return r;
}

// f(X+Y) expanded with Lucas binomials
template <class D>
BP<D> bp_subst_x_plus_y(const UP<D>& f) {
    BP<D> r = bp_zero(f.dom);
    fp_t p = f.dom.p();
    for (auto& [k, c] : f.t) {
        for (i64 j = 0; j <= k; ++j) {
            fp_t b = binom_mod_p(k, j, p);
            if (!b) continue;
            bp_add_term(r, j, k - j, f.dom.mul(c, f.dom.from_int(static_cast<i64>(b))));
        }
    }
    return r;
}

// Delta(f)(X,Y) = f(X+Y) - f(X) - f(Y)
template <class D>
BP<D> bp_delta(const UP<D>& f) {
    BP<D> r = bp_subst_x_plus_y(f);
    for (auto& [k, c] : f.t) {
        bp_add_term(r, k, static_cast<i64>(0), f.dom.neg(c));  // - f(X)
        bp_add_term(r, static_cast<i64>(0), k, f.dom.neg(c));  // - f(Y)
    }
    return r;
}

// substitute X -> X + lambda*Y
template <class D>
BP<D> bp_shift_x(const BP<D>& f, fp_t lambda) {
    if (lambda == 0) return f;
    BP<D> r = bp_zero(f.dom);
    fp_t p = f.dom.p();
    for (auto& [kx, u] : f.t) {
        for (i64 j = 0; j <= kx; ++j) {
            fp_t b = binom_mod_p(kx, j, p);
            if (!b) continue;
            // lambda^(kx-j) * C(kx,j)
            u64 scale = 1;
            for (i64 s = 0; s < kx - j; ++s) scale = (scale * lambda) % p;
            scale = (scale * b) % p;
            if (!scale) continue;
            typename D::C cs = f.dom.from_int(static_cast<i64>(scale));
            for (auto& [ky, c] : u.t) bp_add_term(r, j, ky + (kx - j), f.dom.mul(c, cs));
        }
    }
    return r;
}

// Y -> value; result is a univariate polynomial in X over the same field
inline UP<FDom> bp_eval_y(const BP<FDom>& f, const FElem& y) {
    check_internal(y.F == f.dom.K, "bp_eval_y: field mismatch");
    UP<FDom> r = up_zero(f.dom);
    for (auto& [kx, u] : f.t) up_add_term(r, kx, up_eval(u, y));
    return r;
}

inline FElem bp_eval_xy(const BP<FDom>& f, const FElem& x, const FElem& y) {
    return up_eval(bp_eval_y(f, y), x);
}

template <class D>
BP<D> bp_transpose(const BP<D>& f) {
    BP<D> r = bp_zero(f.dom);
    for (auto& [kx, u] : f.t)
        for (auto& [ky, c] : u.t) bp_add_term(r, ky, kx, c);
    return r;
}

BP<FDom> bp_embed(const BP<FDom>& f, const Field* K);
BP<FDom> bp_specialize(const BP<PDom>& f, const std::vector<FElem>& values, const Field* K);

// ---- printing (canonical text form) ----

template <class D>
std::string up_print(const UP<D>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        if (!first) os << "+";
        first = false;
        bool parens = false;
        std::string lit = f.dom.print(it->second, &parens);
        bool is_one = lit == "1";
        if (it->first == 0) {
            os << (parens ? "(" + lit + ")" : lit);
            continue;
        }
        if (!is_one) os << (parens ? "(" + lit + ")" : lit) << "*";
        os << var;
        if (it->first > 1) os << "^" << it->first;
    }
    return os.str();
}

template <class D>
std::string bp_print(const BP<D>& f, const std::string& xvar, const std::string& yvar) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        for (auto jt = it->second.t.rbegin(); jt != it->second.t.rend(); ++jt) {
            if (!first) os << "+";
            first = false;
            bool parens = false;
            std::string lit = f.dom.print(jt->second, &parens);
            bool is_one = lit == "1";
            bool have_var = it->first > 0 || jt->first > 0;
            if (!is_one || !have_var) {
                os << (parens ? "(" + lit + ")" : lit);
                if (have_var) os << "*";
            }
            if (it->first > 0) {
                os << xvar;
                if (it->first > 1) os << "^" << it->first;
                if (jt->first > 0) os << "*";
            }
            if (jt->first > 0) {
                os << yvar;
                if (jt->first > 1) os << "^" << jt->first;
            }
        }
    }
    return os.str();
}

using FPoly = UP<FDom>;
using FBiPoly = BP<FDom>;
using PPoly = UP<PDom>;
using PBiPoly = BP<PDom>;

}  // namespace wildaut

#endif
