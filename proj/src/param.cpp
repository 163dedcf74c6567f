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

#include "wildaut/param.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace wildaut {

struct ParamRegistry {
    std::mutex mu;
    std::map<std::pair<fp_t, std::vector<std::string>>, std::unique_ptr<ParamRing>> rings;
    static ParamRegistry& inst() {
        static ParamRegistry r;
        return r;
    }
};

const ParamRing* ParamRing::get(fp_t p, std::vector<std::string> names) {
    require(is_prime_u64(p), ErrKind::usage, "p must be prime");
    auto& reg = ParamRegistry::inst();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto key = std::make_pair(p, names);
    auto it = reg.rings.find(key);
    if (it != reg.rings.end()) return it->second.get();
    auto r = std::unique_ptr<ParamRing>(new ParamRing());
    r->p = p;
    r->names = std::move(names);
    const ParamRing* out = r.get();
    reg.rings.emplace(std::move(key), std::move(r));
    return out;
}

bool PElem::is_constant() const {
    if (t.empty()) return true;
    if (t.size() > 1) return false;
    const auto& ev = t.begin()->first;
    return std::all_of(ev.begin(), ev.end(), [](unsigned x) { return x == 0; });
}

PElem pr_zero(const ParamRing* R) { return PElem{R, {}}; }

PElem pr_const(const ParamRing* R, i64 v) {
    PElem r{R, {}};
    i64 m = v % static_cast<i64>(R->p);
    if (m < 0) m += R->p;
    if (m) r.t[std::vector<unsigned>(R->k(), 0)] = static_cast<fp_t>(m);
    return r;
}

PElem pr_var(const ParamRing* R, size_t idx) {
    check_internal(idx < R->k(), "parameter index out of range");
    PElem r{R, {}};
    std::vector<unsigned> ev(R->k(), 0);
    ev[idx] = 1;
    r.t[std::move(ev)] = 1;
    return r;
}

namespace {
void add_term(PElem& r, const std::vector<unsigned>& ev, u64 c) {
    fp_t p = r.R->p;
    c %= p;
    if (!c) return;
    auto it = r.t.find(ev);
    if (it == r.t.end()) {
        r.t.emplace(ev, static_cast<fp_t>(c));
    } else {
        it->second = static_cast<fp_t>((it->second + c) % p);
        if (!it->second) r.t.erase(it);
    }
}
}  // namespace

PElem pr_add(const PElem& a, const PElem& b) {
    check_internal(a.R == b.R, "parameter ring mismatch");
    PElem r = a;
    for (auto& [ev, c] : b.t) add_term(r, ev, c);
    return r;
}
PElem pr_sub(const PElem& a, const PElem& b) { return pr_add(a, pr_neg(b)); }
PElem pr_neg(const PElem& a) {
    PElem r = a;
    for (auto& [ev, c] : r.t) c = static_cast<fp_t>((a.R->p - c) % a.R->p);
    return r;
}
PElem pr_mul(const PElem& a, const PElem& b) {
    check_internal(a.R == b.R, "parameter ring mismatch");
    PElem r{a.R, {}};
    std::vector<unsigned> ev(a.R->k());
    for (auto& [ea, ca] : a.t)
        for (auto& [eb, cb] : b.t) {
            for (size_t i = 0; i < ev.size(); ++i) ev[i] = ea[i] + eb[i];
            add_term(r, ev, static_cast<u64>(ca) * cb);
        }
    return r;
}
PElem pr_scale(const PElem& a, fp_t c) {
    PElem r{a.R, {}};
    for (auto& [ev, cc] : a.t) add_term(r, ev, static_cast<u64>(cc) * (c % a.R->p));
    return r;
}
PElem pr_pow_p(const PElem& a, unsigned j) {
    if (j == 0) return a;
    u64 q = 1;
    for (unsigned i = 0; i < j; ++i) q *= a.R->p;
    PElem r{a.R, {}};
    for (auto& [ev, c] : a.t) {
        auto e2 = ev;
        for (auto& x : e2) x = static_cast<unsigned>(x * q);
        r.t[std::move(e2)] = c;  // c^{p^j} = c in F_p
    }
    return r;
}
std::optional<PElem> pr_p_root(const PElem& a) {
    PElem r{a.R, {}};
    for (auto& [ev, c] : a.t) {
        auto e2 = ev;
        for (auto& x : e2) {
            if (x % a.R->p) return std::nullopt;
            x /= a.R->p;
        }
        r.t[std::move(e2)] = c;
    }
    return r;
}

// ---------- gcd machinery ----------

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

size_t main_var(const PElem& a) {
    size_t v = npos;
    for (auto& [ev, c] : a.t)
        for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i] && i < v) v = i;
    return v;
}

// view as univariate in variable v: degree -> coefficient (v stripped)
std::map<unsigned, PElem> to_uni(const PElem& a, size_t v) {
    std::map<unsigned, PElem> out;
    for (auto& [ev, c] : a.t) {
        auto e2 = ev;
        unsigned d = e2[v];
        e2[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, pr_zero(a.R)).first;
        add_term(it->second, e2, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

PElem from_uni(const ParamRing* R, size_t v, const std::map<unsigned, PElem>& u) {
    PElem r = pr_zero(R);
    for (auto& [d, coeff] : u)
        for (auto& [ev, c] : coeff.t) {
            auto e2 = ev;
            e2[v] += d;
            add_term(r, e2, c);
        }
    return r;
}

fp_t fpinv(fp_t a, fp_t p) {
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    check_internal(r == 1, "fpinv of non-unit");
    return static_cast<fp_t>((t % p + p) % p);
}

PElem content_wrt(const std::map<unsigned, PElem>& u) {
    PElem g;
    bool first = true;
    for (auto& [d, c] : u) {
        g = first ? c : pr_gcd(g, c);
        first = false;
    }
    return g;
}

// pseudo-remainder of a by b in the shared main variable
std::map<unsigned, PElem> prem_uni(std::map<unsigned, PElem> a,
                                   const std::map<unsigned, PElem>& b) {
    unsigned db = b.rbegin()->first;
    const PElem lb = b.rbegin()->second;
    while (!a.empty() && a.rbegin()->first >= db) {
        unsigned da = a.rbegin()->first;
        PElem la = a.rbegin()->second;
        std::map<unsigned, PElem> na;
        for (auto& [d, c] : a) {
            if (d == da) continue;
            PElem t = pr_mul(lb, c);
            if (!t.is_zero()) na[d] = std::move(t);
        }
        for (auto& [d, c] : b) {
            if (d == db) continue;
            unsigned nd = d + (da - db);
            PElem term = pr_mul(la, c);
            auto it = na.find(nd);
            if (it == na.end()) {
                term = pr_neg(term);
                if (!term.is_zero()) na[nd] = std::move(term);
            } else {
                it->second = pr_sub(it->second, term);
                if (it->second.is_zero()) na.erase(it);
            }
        }
        a = std::move(na);
    }
    return a;
}

PElem normalize_lead(const PElem& a) {
    if (a.is_zero()) return a;
    fp_t lead = a.t.rbegin()->second;  // lex-largest exponent vector
    if (lead == 1) return a;
    return pr_scale(a, fpinv(lead, a.R->p));
}

}  // namespace

PElem pr_gcd(const PElem& a, const PElem& b) {
    if (a.is_zero()) return normalize_lead(b);
    if (b.is_zero()) return normalize_lead(a);
    check_internal(a.R == b.R, "ring mismatch in gcd");
    if (a.is_constant() || b.is_constant()) return pr_const(a.R, 1);
    size_t va = main_var(a), vb = main_var(b);
    size_t v = std::min(va, vb);
    if (va != vb) {
        const PElem& with_v = (va == v) ? a : b;
        const PElem& other = (va == v) ? b : a;
        auto u = to_uni(with_v, v);
        return pr_gcd(content_wrt(u), other);
    }
    auto ua = to_uni(a, v), ub = to_uni(b, v);
    PElem ca = content_wrt(ua), cb = content_wrt(ub);
    PElem cg = pr_gcd(ca, cb);
    for (auto& [d, c] : ua) c = pr_divexact(c, ca);
    for (auto& [d, c] : ub) c = pr_divexact(c, cb);
    // primitive PRS in v
    if (ua.rbegin()->first < ub.rbegin()->first) std::swap(ua, ub);
    while (!ub.empty()) {
        auto r = prem_uni(ua, ub);
        ua = std::move(ub);
        ub = std::move(r);
        if (!ub.empty()) {
            PElem c = content_wrt(ub);
            for (auto& [d, cc] : ub) cc = pr_divexact(cc, c);
        }
    }
    if (ua.rbegin()->first == 0) return normalize_lead(cg);  // coprime primitive parts
    PElem prim = from_uni(a.R, v, ua);
    return normalize_lead(pr_mul(cg, prim));
}

PElem pr_divexact(const PElem& a, const PElem& b) {
    check_internal(!b.is_zero(), "division by zero polynomial");
    if (a.is_zero()) return a.R ? a : pr_zero(b.R);
    check_internal(a.R == b.R, "ring mismatch in divexact");
    if (b.is_constant()) {
        fp_t c = b.t.begin()->second;
        return pr_scale(a, fpinv(c, b.R->p));
    }
    size_t v = main_var(b);
    auto ua = to_uni(a, v), ub = to_uni(b, v);
    unsigned db = ub.rbegin()->first;
    const PElem lb = ub.rbegin()->second;
    std::map<unsigned, PElem> q;
    while (!ua.empty()) {
        unsigned da = ua.rbegin()->first;
        check_internal(da >= db, "divexact: not divisible");
        PElem qc = pr_divexact(ua.rbegin()->second, lb);
        // ua -= qc * v^(da-db) * ub
        for (auto& [d, c] : ub) {
            unsigned nd = d + (da - db);
            PElem term = pr_mul(qc, c);
            auto it = ua.find(nd);
            if (it == ua.end()) {
                term = pr_neg(term);
                if (!term.is_zero()) ua[nd] = std::move(term);
            } else {
                it->second = pr_sub(it->second, term);
                if (it->second.is_zero()) ua.erase(it);
            }
        }
        q[da - db] = std::move(qc);
    }
    return from_uni(a.R, v, q);
}

FElem pr_eval(const PElem& a, const std::vector<FElem>& values, const Field* K) {
    check_internal(values.size() == a.R->k(), "evaluation: wrong number of values");
    FElem acc = K->zero();
    for (auto& [ev, c] : a.t) {
        FElem m = K->from_int(static_cast<i64>(c));
        for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i]) m = K->mul(m, K->pow(values[i], ev[i]));
        acc = K->add(acc, m);
    }
    return acc;
}

std::string pr_print(const PElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
        if (!first) os << "+";
        first = false;
        const auto& [ev, c] = *it;
        bool any_var = std::any_of(ev.begin(), ev.end(), [](unsigned x) { return x != 0; });
        bool coeff_shown = (c != 1 || !any_var);
        if (coeff_shown) os << c;
        bool started = coeff_shown;
        for (size_t i = 0; i < ev.size(); ++i) {
            if (!ev[i]) continue;
            if (started) os << "*";
            started = true;
            os << a.R->names[i];
            if (ev[i] > 1) os << "^" << ev[i];
        }
    }
    return os.str();
}

}  // namespace wildaut
