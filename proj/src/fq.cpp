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

#include "wildaut/fq.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

namespace wildaut {

namespace {

std::atomic<unsigned> g_degree_cap{64};

// --- dense F_p[Y] helpers used for modulus search and field internals ---

using PVec = std::vector<fp_t>;  // c[0] + c[1] Y + ...

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

PVec pmul(const PVec& a, const PVec& b, fp_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<fp_t>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    ptrim(r);
    return r;
}

fp_t fpinv(fp_t a, fp_t p) {
    // extended Euclid on (a, p)
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    check_internal(r == 1, "fpinv of non-unit");
    return static_cast<fp_t>((t % p + p) % p);
}

// a mod b, b monic or at least with invertible lead
PVec pmod(PVec a, const PVec& b, fp_t p) {
    ptrim(a);
    fp_t linv = fpinv(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        fp_t q = static_cast<fp_t>((static_cast<u64>(a.back()) * linv) % p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = static_cast<fp_t>((a[off + i] + static_cast<u64>(p - 1) * q % p * b[i]) % p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PVec pgcd(PVec a, PVec b, fp_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        fp_t linv = fpinv(a.back(), p);
        for (auto& x : a) x = static_cast<fp_t>((static_cast<u64>(x) * linv) % p);
    }
    return a;
}

PVec ppow_p_mod(const PVec& a, const PVec& m, fp_t p) {
    // a^p mod m via binary powering on the exponent p
    PVec r{1}, base = a;
    fp_t n = p;
    while (n) {
        if (n & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        n >>= 1;
    }
    return r;
}

// Y^(p^k) mod m by iterating the p-th power map on Y.
PVec frob_power_of_y(const PVec& m, fp_t p, unsigned k) {
    PVec x{0, 1};
    for (unsigned i = 0; i < k; ++i) x = ppow_p_mod(x, m, p);
    return x;
}

bool is_irreducible(const PVec& m, fp_t p) {
    int d = pdeg(m);
    if (d < 1) return false;
    if (d == 1) return true;
    // Y^{p^d} == Y mod m, and gcd(Y^{p^{d/l}} - Y, m) == 1 for prime l | d
    PVec yd = frob_power_of_y(m, p, static_cast<unsigned>(d));
    ptrim(yd);
    if (yd != PVec{0, 1}) return false;
    std::vector<int> primes;
    int rem = d;
    for (int l = 2; l * l <= rem; ++l) {
        if (rem % l) continue;
        primes.push_back(l);
        while (rem % l == 0) rem /= l;
    }
    if (rem > 1) primes.push_back(rem);
    for (int l : primes) {
        PVec diff = frob_power_of_y(m, p, static_cast<unsigned>(d / l));
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<fp_t>((diff[1] + p - 1) % p);
        ptrim(diff);
        PVec g = pgcd(diff, m, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

struct Key {
    fp_t p;
    unsigned e;
    std::vector<fp_t> mod;
    bool operator<(const Key& o) const {
        if (p != o.p) return p < o.p;
        if (e != o.e) return e < o.e;
        return mod < o.mod;
    }
};

}  // namespace

struct FieldRegistry {
    std::mutex mu;
    std::map<Key, std::unique_ptr<Field>> fields;
    // (src field, tgt field) -> powers of the canonical root image
    std::map<std::pair<const Field*, const Field*>, std::vector<FElem>> embeds;

    static FieldRegistry& inst() {
        static FieldRegistry r;
        return r;
    }

    const Field* get(fp_t p, unsigned e, std::optional<std::vector<fp_t>> mod);
};

unsigned Field::degree_cap() { return g_degree_cap.load(); }
void Field::set_degree_cap(unsigned cap) { g_degree_cap.store(cap); }

void Field::finish_init() {
    // rows Y^{e+k} mod modulus
    redrow_.clear();
    if (e > 1) {
        PVec m(modulus.begin(), modulus.end());
        PVec cur(e + 1, 0);
        cur[e] = 1;
        cur = pmod(cur, m, p);
        cur.resize(e, 0);
        for (unsigned k = 0; k + 1 < e; ++k) {
            redrow_.push_back(cur);
            // multiply by Y and reduce using the previous row of Y^e
            PVec nxt(e, 0);
            fp_t top = cur[e - 1];
            for (unsigned i = e - 1; i > 0; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top) {
                for (unsigned i = 0; i < e; ++i) {
                    u64 v = nxt[i] + static_cast<u64>(top) * redrow_[0][i];
                    nxt[i] = static_cast<fp_t>(v % p);
                }
            }
            cur = nxt;
        }
    }
    // Frobenius matrix columns
    frobmat_.assign(e, std::vector<fp_t>(e, 0));
    if (e == 1) {
        frobmat_[0][0] = 1;
    } else {
        FElem yp;  // computed via plain powering of the generator
        FElem g = gen();
        // g^p by repeated squaring without frob fast path
        FElem r = one(), base = g;
        fp_t n = p;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        yp = r;
        FElem cur = one();
        for (unsigned i = 0; i < e; ++i) {
            frobmat_[i] = cur.c;  // coords of (Y^i)^p = (Y^p)^i
            cur = mul(cur, yp);
        }
    }
}

const Field* FieldRegistry::get(fp_t p, unsigned e, std::optional<std::vector<fp_t>> mod) {
    require(is_prime_u64(p), ErrKind::usage, "p must be prime");
    require(e >= 1 && e <= Field::degree_cap(), ErrKind::cap_exceeded,
            "extension degree out of range (cap " + std::to_string(Field::degree_cap()) + ")");
    std::vector<fp_t> m;
    if (mod) {
        m = *mod;
        require(m.size() == e + 1 && m[e] == 1, ErrKind::usage, "modulus must be monic of degree e");
        for (auto c : m) require(c < p, ErrKind::usage, "modulus coefficient out of range");
        if (e > 1)
            require(is_irreducible(PVec(m.begin(), m.end()), p), ErrKind::usage,
                    "modulus is not irreducible over F_p");
    } else if (e == 1) {
        m = {0, 1};
    } else {
        // canonical enumeration: tuples (c0..c_{e-1}) lexicographic, constant
        // term compared first
        std::vector<fp_t> c(e, 0);
        bool found = false;
        while (true) {
            PVec cand(c.begin(), c.end());
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                m.assign(cand.begin(), cand.end());
                found = true;
                break;
            }
            int i = static_cast<int>(e) - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
        check_internal(found, "no irreducible modulus found");
    }
    Key k{p, e, m};
    std::lock_guard<std::mutex> lk(mu);
    auto it = fields.find(k);
    if (it != fields.end()) return it->second.get();
    auto f = std::unique_ptr<Field>(new Field());
    f->p = p;
    f->e = e;
    f->modulus = m;
    f->finish_init();
    const Field* out = f.get();
    fields.emplace(std::move(k), std::move(f));
    return out;
}

const Field* Field::get(fp_t p, unsigned e) { return FieldRegistry::inst().get(p, e, std::nullopt); }
const Field* Field::get(fp_t p, unsigned e, const std::vector<fp_t>& modulus) {
    return FieldRegistry::inst().get(p, e, modulus);
}

bool FElem::is_zero() const {
    for (auto x : c)
        if (x) return false;
    return true;
}

FElem Field::zero() const { return FElem{this, std::vector<fp_t>(e, 0)}; }
FElem Field::one() const {
    auto z = zero();
    z.c[0] = 1;
    return z;
}
FElem Field::from_int(i64 v) const {
    auto z = zero();
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += p;
    z.c[0] = static_cast<fp_t>(r);
    return z;
}
FElem Field::gen() const {
    auto z = zero();
    if (e == 1)
        z.c[0] = 1;
    else
        z.c[1] = 1;
    return z;
}
FElem Field::from_coords(std::vector<fp_t> c) const {
    require(c.size() == e, ErrKind::usage, "coordinate length mismatch");
    for (auto& x : c) x %= p;
    return FElem{this, std::move(c)};
}
u64 Field::size_fits() const {
    u64 n = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (n > (~0ULL) / p) return 0;
        n *= p;
    }
    return n;
}
FElem Field::element_at(u64 index) const {
    auto z = zero();
    for (unsigned i = 0; i < e && index; ++i) {
        z.c[i] = static_cast<fp_t>(index % p);
        index /= p;
    }
    return z;
}
u64 Field::order_minus_one_unsafe() const {
    u64 n = size_fits();
    check_internal(n != 0, "field too large to enumerate");
    return n - 1;
}

FElem Field::add(const FElem& a, const FElem& b) const {
    check_internal(a.F == this && b.F == this, "mixed-field arithmetic");
    FElem r = a;
    for (unsigned i = 0; i < e; ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= p) r.c[i] -= p;
    }
    return r;
}
FElem Field::sub(const FElem& a, const FElem& b) const {
    check_internal(a.F == this && b.F == this, "mixed-field arithmetic");
    FElem r = a;
    for (unsigned i = 0; i < e; ++i) {
        r.c[i] = (r.c[i] + p - b.c[i]) % p;
    }
    return r;
}
FElem Field::neg(const FElem& a) const {
    FElem r = a;
    for (unsigned i = 0; i < e; ++i) r.c[i] = (p - r.c[i]) % p;
    return r;
}
FElem Field::mul(const FElem& a, const FElem& b) const {
    check_internal(a.F == this && b.F == this, "mixed-field arithmetic");
    if (e == 1) {
        FElem r = zero();
        r.c[0] = static_cast<fp_t>((static_cast<u64>(a.c[0]) * b.c[0]) % p);
        return r;
    }
    std::vector<u64> conv(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < e; ++j) conv[i + j] += static_cast<u64>(a.c[i]) * b.c[j];
    }
    FElem r = zero();
    for (unsigned i = 0; i < e; ++i) r.c[i] = static_cast<fp_t>(conv[i] % p);
    for (unsigned k = 0; k + 1 < e; ++k) {
        u64 hi = conv[e + k] % p;
        if (!hi) continue;
        for (unsigned i = 0; i < e; ++i)
            r.c[i] = static_cast<fp_t>((r.c[i] + hi * redrow_[k][i]) % p);
    }
    return r;
}
FElem Field::inv(const FElem& a) const {
    require(!a.is_zero(), ErrKind::domain, "division by zero");
    if (e == 1) {
        FElem r = zero();
        r.c[0] = fpinv(a.c[0], p);
        return r;
    }
    // extended Euclid in F_p[Y] against the modulus
    PVec r0(modulus.begin(), modulus.end()), r1(a.c.begin(), a.c.end());
    ptrim(r1);
    PVec t0{}, t1{1};
    while (!r1.empty() && pdeg(r1) > 0) {
        // divide r0 by r1
        PVec q;
        PVec rem = r0;
        fp_t linv = fpinv(r1.back(), p);
        q.assign(std::max<int>(0, pdeg(r0) - pdeg(r1) + 1), 0);
        while (pdeg(rem) >= pdeg(r1)) {
            fp_t qc = static_cast<fp_t>((static_cast<u64>(rem.back()) * linv) % p);
            size_t off = rem.size() - r1.size();
            q[off] = qc;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[off + i] =
                    static_cast<fp_t>((rem[off + i] + static_cast<u64>(p - 1) * qc % p * r1[i]) % p);
            ptrim(rem);
            if (rem.empty()) break;
        }
        PVec nt = t0;                 // t0 - q*t1
        PVec qt = pmul(q, t1, p);
        if (nt.size() < qt.size()) nt.resize(qt.size(), 0);
        for (size_t i = 0; i < qt.size(); ++i)
            nt[i] = static_cast<fp_t>((nt[i] + static_cast<u64>(p - 1) * qt[i]) % p);
        ptrim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    check_internal(!r1.empty() && pdeg(r1) == 0, "inverse: element not a unit");
    fp_t scale = fpinv(r1[0], p);
    t1.resize(e, 0);
    FElem out = zero();
    for (unsigned i = 0; i < e; ++i) out.c[i] = static_cast<fp_t>((static_cast<u64>(t1[i]) * scale) % p);
    return out;
}
FElem Field::div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }
FElem Field::pow(const FElem& a, u64 n) const {
    FElem r = one(), base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}
FElem Field::frob(const FElem& a) const {
    FElem r = zero();
    for (unsigned i = 0; i < e; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < e; ++j)
            r.c[j] = static_cast<fp_t>((r.c[j] + static_cast<u64>(a.c[i]) * frobmat_[i][j]) % p);
    }
    return r;
}
FElem Field::frob_iter(const FElem& a, unsigned j) const {
    FElem r = a;
    for (unsigned i = 0; i < j % (e == 0 ? 1 : e); ++i) r = frob(r);
    return r;
}
fp_t Field::trace_to_fp(const FElem& a) const {
    FElem s = a, t = a;
    for (unsigned i = 1; i < e; ++i) {
        t = frob(t);
        s = add(s, t);
    }
    check_internal(in_prime_field(s), "trace not in F_p");
    return s.c[0];
}
bool Field::in_prime_field(const FElem& a) const {
    for (unsigned i = 1; i < e; ++i)
        if (a.c[i]) return false;
    return true;
}
std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << p;
    if (e > 1) os << "^" << e;
    return os.str();
}

bool canonical_less(const FElem& a, const FElem& b) {
    check_internal(a.F == b.F, "ordering across fields");
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

FElem frobenius(const FElem& a, unsigned j) { return a.F->frob_iter(a, j % a.F->e); }

// ---- deterministic root extraction (trace-functional splitting) ----

namespace {

struct KPoly {  // dense monic-friendly poly over a Field
    const Field* K;
    std::vector<FElem> c;
};

void ktrim(KPoly& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

KPoly kmul(const KPoly& a, const KPoly& b) {
    KPoly r{a.K, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.K->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    ktrim(r);
    return r;
}

KPoly kmod(KPoly a, const KPoly& b) {
    ktrim(a);
    FElem linv = b.K->inv(b.c.back());
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
        FElem q = a.c.back() * linv;
        size_t off = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[off + i] = a.c[off + i] - q * b.c[i];
        ktrim(a);
    }
    return a;
}

KPoly kgcd(KPoly a, KPoly b) {
    ktrim(a);
    ktrim(b);
    while (!b.c.empty()) {
        KPoly r = kmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.c.empty()) {
        FElem linv = a.K->inv(a.c.back());
        for (auto& x : a.c) x = x * linv;
    }
    return a;
}

KPoly kpow_p_mod(const KPoly& a, const KPoly& m) {
    KPoly r{a.K, {a.K->one()}}, base = a;
    fp_t n = a.K->p;
    while (n) {
        if (n & 1) r = kmod(kmul(r, base), m);
        base = kmod(kmul(base, base), m);
        n >>= 1;
    }
    return r;
}

void collect_roots(const KPoly& h, const Field* K, std::vector<FElem>& out);

// split h (squarefree, all roots in K) by the functional y -> Tr(beta*y)
bool split_by(const KPoly& h, const FElem& beta, const Field* K, std::vector<FElem>& out) {
    // T(Y) = sum_{i<d} (beta Y)^{p^i} mod h
    KPoly t{K, {K->zero(), beta}};
    KPoly acc = t;
    KPoly cur = t;
    for (unsigned i = 1; i < K->e; ++i) {
        cur = kpow_p_mod(cur, h);
        // acc += cur
        if (acc.c.size() < cur.c.size()) acc.c.resize(cur.c.size(), K->zero());
        for (size_t j = 0; j < cur.c.size(); ++j) acc.c[j] = acc.c[j] + cur.c[j];
        ktrim(acc);
    }
    bool split = false;
    for (fp_t cv = 0; cv < K->p; ++cv) {
        KPoly shifted = acc;
        if (shifted.c.empty()) shifted.c.push_back(K->zero());
        shifted.c[0] = shifted.c[0] - K->from_int(cv);
        ktrim(shifted);
        KPoly g = kgcd(shifted, h);
        if (!g.c.empty() && g.c.size() > 1 && g.c.size() < h.c.size()) {
            split = true;
            collect_roots(g, K, out);
            // complement factor by exact division
            KPoly quot{K, std::vector<FElem>(h.c.size() - g.c.size() + 1, K->zero())};
            KPoly rem = h;
            FElem linv = K->inv(g.c.back());
            while (rem.c.size() >= g.c.size() && !rem.c.empty()) {
                FElem q = rem.c.back() * linv;
                size_t off = rem.c.size() - g.c.size();
                quot.c[off] = q;
                for (size_t i = 0; i < g.c.size(); ++i)
                    rem.c[off + i] = rem.c[off + i] - q * g.c[i];
                ktrim(rem);
            }
            check_internal(rem.c.empty(), "root split: non-exact division");
            ktrim(quot);
            collect_roots(quot, K, out);
            break;
        }
    }
    return split;
}

void collect_roots(const KPoly& h, const Field* K, std::vector<FElem>& out) {
    if (h.c.size() <= 1) return;
    if (h.c.size() == 2) {
        // linear: root = -c0 / c1
        out.push_back(K->neg(K->div(h.c[0], h.c[1])));
        return;
    }
    // try functionals Tr(Y^k * Y) over basis directions
    FElem beta = K->one();
    for (unsigned k = 0; k < K->e; ++k) {
        if (split_by(h, beta, K, out)) return;
        beta = K->mul(beta, K->gen());
    }
    check_internal(false, "root splitting failed (polynomial may not split in K)");
}

}  // namespace

std::vector<FElem> roots_in_field(const std::vector<FElem>& coeffs, const Field* K) {
    KPoly h{K, coeffs};
    ktrim(h);
    std::vector<FElem> out;
    if (h.c.size() > 1) collect_roots(h, K, out);
    std::sort(out.begin(), out.end(), [](const FElem& a, const FElem& b) { return canonical_less(a, b); });
    return out;
}

// ---- canonical chain embeddings ----

namespace {

unsigned smallest_prime_factor(unsigned n) {
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// single-step embedding powers: image of src generator in tgt, powers 0..e-1
const std::vector<FElem>& step_powers(const Field* src, const Field* tgt) {
    auto& reg = FieldRegistry::inst();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto key = std::make_pair(src, tgt);
    auto it = reg.embeds.find(key);
    if (it != reg.embeds.end()) return it->second;

    FElem r = tgt->zero();
    if (src->e == 1) {
        r = tgt->one();
    } else {
        std::vector<FElem> mc;
        mc.reserve(src->modulus.size());
        for (auto c : src->modulus) mc.push_back(tgt->from_int(static_cast<i64>(c)));
        auto rts = roots_in_field(mc, tgt);
        check_internal(rts.size() == src->e, "embedding: wrong root count for source modulus");
        r = rts.front();  // smallest in canonical order
    }
    std::vector<FElem> pw;
    pw.reserve(src->e);
    FElem cur = tgt->one();
    for (unsigned i = 0; i < src->e; ++i) {
        pw.push_back(cur);
        cur = tgt->mul(cur, r);
    }
    auto res = reg.embeds.emplace(key, std::move(pw));
    return res.first->second;
}

FElem apply_step(const FElem& a, const Field* tgt) {
    const auto& pw = step_powers(a.F, tgt);
    FElem out = tgt->zero();
    for (unsigned i = 0; i < a.F->e; ++i) {
        if (!a.c[i]) continue;
        FElem term = pw[i];
        FElem scale = tgt->from_int(static_cast<i64>(a.c[i]));
        out = tgt->add(out, tgt->mul(term, scale));
    }
    return out;
}

}  // namespace

FElem embed(const FElem& a, const Field* target) {
    const Field* src = a.F;
    require(src->p == target->p, ErrKind::usage, "embedding across characteristics");
    require(target->e % src->e == 0, ErrKind::usage, "source degree does not divide target degree");
    if (src == target) return a;
    FElem cur = a;
    unsigned d = target->e / src->e;
    unsigned acc = src->e;
    while (d > 1) {
        unsigned step = smallest_prime_factor(d);
        acc *= step;
        const Field* mid = (acc == target->e) ? target : Field::get(src->p, acc);
        cur = apply_step(cur, mid);
        d /= step;
    }
    if (cur.F != target) cur = apply_step(cur, target);
    return cur;
}

}  // namespace wildaut
