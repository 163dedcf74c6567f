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

#include "wildaut/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wildaut {

size_t WildGroup::add_index(size_t a, size_t b) const {
    size_t out = 0, mult = 1;
    for (unsigned i = 0; i < r; ++i) {
        out += ((a % p) + (b % p)) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

size_t WildGroup::scale_index(size_t a, fp_t c) const {
    size_t out = 0, mult = 1;
    for (unsigned i = 0; i < r; ++i) {
        out += (a % p) * (c % p) % p * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

size_t WildGroup::basis_index(unsigned i) const {
    size_t out = 1;
    for (unsigned k = 0; k < i; ++k) out *= p;
    return out;
}

fp_t WildGroup::digit(size_t a, unsigned i) const {
    for (unsigned k = 0; k < i; ++k) a /= p;
    return static_cast<fp_t>(a % p);
}

WildGroup build_group(fp_t p, unsigned r, std::vector<std::uint8_t> gamma, u64 seed) {
    WildGroup g;
    g.p = p;
    g.r = r;
    g.n = 1;
    for (unsigned i = 0; i < r; ++i) g.n *= p;
    check_internal(gamma.size() == g.n * g.n, "cocycle table size mismatch");
    g.gamma = std::move(gamma);
    for (size_t a = 0; a < g.n; ++a) {
        check_internal(g.gam(0, a) == 0 && g.gam(a, 0) == 0, "cocycle not normalized");
    }
    // cocycle identity gamma(a,b)+gamma(a+b,c) = gamma(b,c)+gamma(a,b+c)
    auto identity_at = [&](size_t a, size_t b, size_t c) {
        unsigned lhs = g.gam(a, b) + g.gam(g.add_index(a, b), c);
        unsigned rhs = g.gam(b, c) + g.gam(a, g.add_index(b, c));
        return lhs % p == rhs % p;
    };
    u64 triples = static_cast<u64>(g.n) * g.n * g.n;
    if (triples <= (u64(1) << 25)) {
        for (size_t a = 0; a < g.n; ++a)
            for (size_t b = 0; b < g.n; ++b)
                for (size_t c = 0; c < g.n; ++c)
                    check_internal(identity_at(a, b, c), "cocycle identity violated");
    } else {
        Rng rng(seed ^ 0xc0cc1eULL);
        for (int k = 0; k < 4096; ++k)
            check_internal(identity_at(rng.below(g.n), rng.below(g.n), rng.below(g.n)),
                           "cocycle identity violated (sampled)");
    }
    // s(v) = sum_{i=1}^{p-1} gamma(i v, v)
    g.svec.assign(g.n, 0);
    for (size_t v = 0; v < g.n; ++v) {
        unsigned s = 0;
        for (fp_t i = 1; i < p; ++i) s += g.gam(g.scale_index(v, i), v);
        g.svec[v] = static_cast<std::uint8_t>(s % p);
    }
    return g;
}

namespace {

// reduced basis (as indices) of the span of the given indices
std::vector<size_t> span_basis(const WildGroup& G, const std::vector<size_t>& gens) {
    FpMat m(G.p, gens.size(), G.r);
    for (size_t i = 0; i < gens.size(); ++i)
        for (unsigned j = 0; j < G.r; ++j) m.at(i, j) = G.digit(gens[i], j);
    auto pivs = rref(m);
    std::vector<size_t> basis;
    for (size_t i = 0; i < pivs.size(); ++i) {
        size_t idx = 0;
        for (unsigned j = 0; j < G.r; ++j) {
            size_t mult = 1;
            for (unsigned k = 0; k < j; ++k) mult *= G.p;
            idx += static_cast<size_t>(m.at(i, j)) * mult;
        }
        basis.push_back(idx);
    }
    return basis;
}

size_t combine(const WildGroup& G, const std::vector<size_t>& basis, size_t sub_idx) {
    size_t out = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        fp_t d = static_cast<fp_t>(sub_idx % G.p);
        sub_idx /= G.p;
        if (d) out = G.add_index(out, G.scale_index(basis[i], d));
    }
    return out;
}

}  // namespace

WildGroup saturated_subgroup(const WildGroup& G, const std::vector<size_t>& generators) {
    auto basis = span_basis(G, generators);
    unsigned r2 = static_cast<unsigned>(basis.size());
    size_t n2 = 1;
    for (unsigned i = 0; i < r2; ++i) n2 *= G.p;
    std::vector<size_t> lift(n2);
    for (size_t a = 0; a < n2; ++a) lift[a] = combine(G, basis, a);
    std::vector<std::uint8_t> gamma(n2 * n2);
    for (size_t a = 0; a < n2; ++a)
        for (size_t b = 0; b < n2; ++b) gamma[a * n2 + b] = static_cast<std::uint8_t>(G.gam(lift[a], lift[b]));
    WildGroup S = build_group(G.p, r2, std::move(gamma));
    for (size_t a = 0; a < n2; ++a)
        check_internal(S.svec[a] == G.svec[lift[a]], "subgroup power constants disagree");
    return S;
}

namespace {

// deterministic greedy symplectic pairs for the pairing eps on V mod radical
std::vector<std::pair<size_t, size_t>> symplectic_pairs(const WildGroup& G) {
    std::vector<std::pair<size_t, size_t>> pairs;
    auto orthogonal_to_pairs = [&](size_t w) {
        for (auto& [u, v] : pairs)
            if (G.eps(w, u) != 0 || G.eps(w, v) != 0) return false;
        return true;
    };
    while (true) {
        size_t u = 0, v = 0;
        bool found = false;
        for (size_t a = 1; a < G.n && !found; ++a) {
            if (!orthogonal_to_pairs(a)) continue;
            for (size_t b = 1; b < G.n && !found; ++b) {
                if (G.eps(a, b) == 0 || !orthogonal_to_pairs(b)) continue;
                u = a;
                fp_t e = G.eps(a, b);  // normalize eps(u, v) = 1
                fp_t inv = 1;
                for (fp_t c = 1; c < G.p; ++c)
                    if (c * e % G.p == 1) inv = c;
                v = G.scale_index(b, inv);
                found = true;
            }
        }
        if (!found) break;
        pairs.emplace_back(u, v);
    }
    return pairs;
}

u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

std::string label_text(const GroupLabel& l, fp_t p) {
    std::ostringstream os;
    switch (l.kind) {
        case GKind::elementary_abelian:
            if (l.rank == 1) {
                os << "cyclic(" << p << ")";
            } else {
                os << "elementary_abelian(rank " << l.rank << ") [(Z/" << p << ")^" << l.rank
                   << "]";
            }
            break;
        case GKind::abelian_p2:
            os << "abelian_p2(rank " << l.rank << ") [";
            if (l.rank == 1) {
                os << "Z/" << p * p;
            } else {
                for (unsigned i = 0; i + 1 < l.rank; ++i) os << "Z/" << p << " x ";
                os << "Z/" << p * p;
            }
            os << "]";
            break;
        case GKind::extraspecial: {
            os << "extraspecial(" << l.es_order << ", ";
            switch (l.es_type) {
                case EsType::I: os << "I"; break;
                case EsType::II: os << "II"; break;
                case EsType::IIIa: os << "III.a"; break;
                case EsType::IIIb: os << "III.b"; break;
                default: os << "?"; break;
            }
            os << ")";
            if (l.es_order == 8 && l.es_type == EsType::IIIa) os << " [D8]";
            if (l.es_order == 8 && l.es_type == EsType::IIIb) os << " [Q8]";
            if (p > 2 && l.es_order == static_cast<u64>(p) * p * p)
                os << (l.es_type == EsType::I ? " [E(" : " [M(") << p * p * p << ")]";
            break;
        }
        case GKind::central_product: {
            os << "central_product(extraspecial(" << l.es_order << ", ";
            if (l.es_type == EsType::ambiguous)
                os << (p == 2 ? "III (product-ambiguous)" : "I/II (product-ambiguous)");
            else
                switch (l.es_type) {
                    case EsType::I: os << "I"; break;
                    case EsType::II: os << "II"; break;
                    case EsType::IIIa: os << "III.a"; break;
                    case EsType::IIIb: os << "III.b"; break;
                    default: os << "?"; break;
                }
            os << "), abelian ";
            if (l.abelian_elementary) {
                os << "(Z/" << p << ")^" << l.abelian_rank;
            } else {
                for (unsigned i = 0; i + 1 < l.abelian_rank; ++i) os << "Z/" << p << " x ";
                os << "Z/" << p * p;
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

GroupProfile profile(const WildGroup& G, u64 max_order) {
    fp_t p = G.p;
    if (max_order == 0) max_order = ipow(p, 13);
    require(G.order() <= max_order, ErrKind::cap_exceeded, "group order exceeds the profile cap");
    GroupProfile out;
    out.order = G.order();
    // epsilon on the basis
    out.eps_basis.assign(G.r, std::vector<fp_t>(G.r, 0));
    for (unsigned i = 0; i < G.r; ++i)
        for (unsigned j = 0; j < G.r; ++j)
            out.eps_basis[i][j] = G.eps(G.basis_index(i), G.basis_index(j));
    // radical of eps
    FpMat em(p, G.r, G.r);
    for (unsigned i = 0; i < G.r; ++i)
        for (unsigned j = 0; j < G.r; ++j) em.at(i, j) = out.eps_basis[i][j];
    auto rad = kernel_basis(em);
    out.radical_dim = static_cast<unsigned>(rad.size());
    out.center_order = ipow(p, 1 + out.radical_dim);
    bool eps_zero = out.radical_dim == G.r;
    out.derived_order = eps_zero ? 1 : p;
    // order statistics from s
    std::map<u64, u64> stats;
    stats[1] = 1;
    if (p > 1) stats[p] += p - 1;  // (0, c != 0)
    bool any_s = false;
    for (size_t v = 1; v < G.n; ++v) {
        u64 o = G.svec[v] == 0 ? p : static_cast<u64>(p) * p;
        if (G.svec[v]) any_s = true;
        stats[o] += p;
    }
    if (stats[p] == 0) stats.erase(p);
    out.order_stats.assign(stats.begin(), stats.end());
    out.exponent = out.order_stats.back().first;
    u64 total = 0;
    for (auto& [o, c] : out.order_stats) total += c;
    check_internal(total == out.order, "order statistics do not sum to the group order");

    // classification
    GroupLabel lab;
    if (eps_zero) {
        if (!any_s) {
            lab.kind = GKind::elementary_abelian;
            lab.rank = G.r + 1;
        } else {
            lab.kind = GKind::abelian_p2;
            lab.rank = G.r;
        }
    } else {
        auto pairs = symplectic_pairs(G);
        unsigned half = static_cast<unsigned>(pairs.size());
        check_internal(2 * half + out.radical_dim == G.r, "symplectic split dimension mismatch");
        // enumerate the span of the pairs and inspect s there
        std::vector<size_t> gens;
        for (auto& [u, v] : pairs) {
            gens.push_back(u);
            gens.push_back(v);
        }
        WildGroup Epart = saturated_subgroup(G, gens);
        check_internal(Epart.r == 2 * half, "extraspecial part has wrong dimension");
        bool s_zero_on_E = true;
        size_t s_nonzero = 0;
        for (size_t v = 0; v < Epart.n; ++v)
            if (Epart.svec[v]) {
                s_zero_on_E = false;
                ++s_nonzero;
            }
        EsType t;
        if (p > 2) {
            t = s_zero_on_E ? EsType::I : EsType::II;
        } else {
            u64 q4 = 2 * s_nonzero;  // order-4 elements of the factor
            u64 qa = ipow(2, 2 * half) - ipow(2, half);
            u64 qb = ipow(2, 2 * half) + ipow(2, half);
            check_internal(q4 == qa || q4 == qb, "order-4 count outside the extraspecial dichotomy");
            t = (q4 == qa) ? EsType::IIIa : EsType::IIIb;
        }
        u64 es_order = ipow(p, 2 * half + 1);
        if (out.radical_dim == 0) {
            lab.kind = GKind::extraspecial;
            lab.es_order = es_order;
            lab.es_type = t;
        } else {
            lab.kind = GKind::central_product;
            lab.es_order = es_order;
            // abelian factor = preimage of the radical
            bool s_zero_on_rad = true;
            {
                std::vector<size_t> rgens;
                for (auto& v : rad) {
                    size_t idx = 0, mult = 1;
                    for (unsigned j = 0; j < G.r; ++j) {
                        idx += static_cast<size_t>(v[j]) * mult;
                        mult *= p;
                    }
                    rgens.push_back(idx);
                }
                WildGroup Apart = saturated_subgroup(G, rgens);
                for (size_t v = 0; v < Apart.n; ++v)
                    if (Apart.svec[v]) s_zero_on_rad = false;
            }
            lab.abelian_elementary = s_zero_on_rad;
            lab.abelian_rank = s_zero_on_rad ? out.radical_dim + 1 : out.radical_dim;
            // D8*Z/4 = Q8*Z/4: the subtype is not invariant next to a
            // non-elementary abelian factor
            lab.es_type = s_zero_on_rad ? t : EsType::ambiguous;
        }
    }
    lab.text = label_text(lab, p);
    out.label = lab;
    return out;
}

// ---- small abstract groups ----

size_t SmallGroup::inverse(size_t a) const {
    for (size_t b = 0; b < n; ++b)
        if (op(a, b) == 0) return b;
    check_internal(false, "element without inverse");
    return 0;
}

u64 SmallGroup::element_order(size_t a) const {
    size_t x = a;
    u64 o = 1;
    while (x != 0) {
        x = op(x, a);
        ++o;
        check_internal(o <= n, "order exceeds group size");
    }
    return o;
}

SmallGroup SmallGroup::cyclic(size_t m) {
    SmallGroup g;
    g.n = m;
    g.mul.resize(m * m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) g.mul[a * m + b] = (a + b) % m;
    return g;
}

SmallGroup SmallGroup::product(const SmallGroup& a, const SmallGroup& b) {
    SmallGroup g;
    g.n = a.n * b.n;
    g.mul.resize(g.n * g.n);
    for (size_t x = 0; x < g.n; ++x)
        for (size_t y = 0; y < g.n; ++y) {
            size_t ax = x % a.n, bx = x / a.n;
            size_t ay = y % a.n, by = y / a.n;
            g.mul[x * g.n + y] = a.op(ax, ay) + a.n * b.op(bx, by);
        }
    return g;
}

SmallGroup SmallGroup::from_wild(const WildGroup& w) {
    // element (v, c) -> index v*p + c; identity (0,0) -> 0
    SmallGroup g;
    g.n = w.n * w.p;
    g.mul.resize(g.n * g.n);
    for (size_t x = 0; x < g.n; ++x)
        for (size_t y = 0; y < g.n; ++y) {
            size_t vx = x / w.p, cx = x % w.p;
            size_t vy = y / w.p, cy = y % w.p;
            size_t v = w.add_index(vx, vy);
            size_t c = (cx + cy + w.gam(vx, vy)) % w.p;
            g.mul[x * g.n + y] = v * w.p + c;
        }
    return g;
}

ExtensionCocycle cocycle_of_extension(const SmallGroup& G, const std::vector<size_t>& N_elems) {
    require(!N_elems.empty(), ErrKind::domain, "empty subgroup");
    std::vector<size_t> N = N_elems;
    std::sort(N.begin(), N.end());
    require(N[0] == 0, ErrKind::domain, "N must contain the identity");
    size_t pn = N.size();
    require(is_prime_u64(pn), ErrKind::domain, "N must have prime order");
    fp_t p = static_cast<fp_t>(pn);
    auto inN = [&](size_t x) { return std::binary_search(N.begin(), N.end(), x); };
    // subgroup and centrality
    for (auto a : N)
        for (auto b : N) require(inN(G.op(a, b)), ErrKind::domain, "N is not a subgroup");
    for (auto a : N)
        for (size_t g = 0; g < G.n; ++g)
            require(G.op(a, g) == G.op(g, a), ErrKind::domain, "not a C1 presentation: N not central");
    // cosets keyed by least representative
    std::vector<size_t> coset_of(G.n, static_cast<size_t>(-1));
    std::vector<size_t> reps;
    for (size_t g = 0; g < G.n; ++g) {
        if (coset_of[g] != static_cast<size_t>(-1)) continue;
        size_t least = g;
        for (auto a : N) least = std::min(least, G.op(g, a));
        for (auto a : N) coset_of[G.op(g, a)] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    // elementary abelian quotient?
    for (size_t g = 0; g < G.n; ++g) {
        size_t gp = g;
        for (fp_t i = 1; i < p; ++i) gp = G.op(gp, g);
        require(inN(gp), ErrKind::domain, "not a C1 presentation: quotient has exponent > p");
        for (size_t h = 0; h < G.n; ++h)
            require(coset_of[G.op(g, h)] == coset_of[G.op(h, g)], ErrKind::domain,
                    "not a C1 presentation: quotient not abelian");
    }
    // basis of the quotient: greedy over reps in increasing order
    std::map<size_t, size_t> coset_index;  // rep -> index in digit order (grows as basis grows)
    coset_index[reps.empty() ? 0 : coset_of[0]] = 0;
    std::vector<size_t> basis_reps;
    std::vector<size_t> span{coset_of[0]};
    std::vector<size_t> span_elt{0};  // representative element realizing each span index
    for (auto rep : reps) {
        if (coset_index.count(rep)) continue;
        // extend span by rep
        size_t old = span.size();
        std::vector<size_t> new_span = span;
        std::vector<size_t> new_elt = span_elt;
        size_t powelem = 0;  // rep^d
        for (fp_t d = 1; d < p; ++d) {
            powelem = (d == 1) ? rep : G.op(powelem, rep);
            for (size_t i = 0; i < old; ++i) {
                size_t e = G.op(span_elt[i], powelem);
                new_span.push_back(coset_of[e]);
                new_elt.push_back(e);
            }
        }
        bool indep = true;
        for (size_t i = old; i < new_span.size() && indep; ++i)
            for (size_t j = 0; j < old; ++j)
                if (new_span[i] == new_span[j]) {
                    indep = false;
                    break;
                }
        if (!indep) continue;
        basis_reps.push_back(rep);
        // rebuild coset_index in digit order
        span = std::move(new_span);
        span_elt = std::move(new_elt);
        coset_index.clear();
        for (size_t i = 0; i < span.size(); ++i)
            if (!coset_index.count(span[i])) coset_index[span[i]] = i;
    }
    require(span.size() == reps.size(), ErrKind::domain, "quotient basis construction failed");
    unsigned r = static_cast<unsigned>(basis_reps.size());
    size_t n = span.size();
    // section: least element of each coset, addressed by digit index
    std::vector<size_t> section(n);
    for (auto& [rep, idx] : coset_index) section[idx] = rep;
    // identify N with F_p via its least non-identity generator
    size_t gen = N[1];
    std::vector<size_t> npow(p);
    npow[0] = 0;
    for (fp_t i = 1; i < p; ++i) npow[i] = G.op(npow[i - 1], gen);
    auto nlog = [&](size_t x) {
        for (fp_t i = 0; i < p; ++i)
            if (npow[i] == x) return i;
        check_internal(false, "element not in N");
        return fp_t(0);
    };
    ExtensionCocycle out;
    out.p = p;
    out.r = r;
    out.n = n;
    out.coset_basis = basis_reps;
    out.c.assign(n * n, 0);
    WildGroup digits;  // reuse index arithmetic
    digits.p = p;
    digits.r = r;
    digits.n = n;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t prod = G.op(section[a], section[b]);
            size_t sum_idx = digits.add_index(a, b);
            size_t corr = G.op(G.inverse(section[sum_idx]), prod);
            require(inN(corr), ErrKind::domain, "section discrepancy not in N");
            out.c[a * n + b] = static_cast<std::uint8_t>(nlog(corr));
        }
    // cocycle identity
    WildGroup tmp = build_group(p, r, out.c);
    (void)tmp;
    return out;
}

Bilinearization bilinearize_cocycle(const ExtensionCocycle& ext) {
    require(ext.p == 2, ErrKind::domain, "bilinearization is a p = 2 construction");
    unsigned r = ext.r;
    size_t n = ext.n;
    require(r <= 8, ErrKind::cap_exceeded, "bilinearization dimension cap");
    WildGroup digits;
    digits.p = 2;
    digits.r = r;
    digits.n = n;
    size_t vars = r * r + n;  // A entries then h values
    FpMat M(2, n * n, vars);
    std::vector<fp_t> rhs(n * n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t row = a * n + b;
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < r; ++j)
                    if (digits.digit(a, i) && digits.digit(b, j)) M.at(row, i * r + j) ^= 1;
            M.at(row, r * r + a) ^= 1;
            M.at(row, r * r + b) ^= 1;
            M.at(row, r * r + digits.add_index(a, b)) ^= 1;
            rhs[row] = ext.cell(a, b);
        }
    auto sol = solve(M, rhs);
    require(sol.has_value(), ErrKind::internal, "bilinearization failed");
    Bilinearization out;
    out.A = FpMat(2, r, r);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) out.A.at(i, j) = (*sol)[i * r + j];
    out.h.assign(n, 0);
    for (size_t a = 0; a < n; ++a) out.h[a] = static_cast<std::uint8_t>((*sol)[r * r + a]);
    // the bilinear representative presents an isomorphic extension
    std::vector<std::uint8_t> blin(n * n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            unsigned acc = 0;
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < r; ++j)
                    acc ^= digits.digit(a, i) & digits.digit(b, j) & out.A.at(i, j);
            blin[a * n + b] = static_cast<std::uint8_t>(acc);
        }
    WildGroup g0 = build_group(2, r, std::vector<std::uint8_t>(ext.c.begin(), ext.c.end()));
    WildGroup g1 = build_group(2, r, blin);
    check_internal(profile(g0).order_stats == profile(g1).order_stats,
                   "bilinear representative changed the extension type");
    return out;
}

ClosureResult extraspecial_closure(const WildGroup& G, u64 seed) {
    require(G.r >= 1, ErrKind::domain, "closure requires a nontrivial quotient space");
    fp_t p = G.p;
    unsigned r = G.r, R = 2 * r;
    size_t N = 1;
    for (unsigned i = 0; i < R; ++i) N *= p;
    require(N <= (size_t(1) << 13), ErrKind::cap_exceeded, "closure table would exceed the cap");
    ClosureResult out;
    WildGroup digits;
    digits.p = p;
    digits.r = R;
    digits.n = N;

    std::vector<std::uint8_t> d(N * N, 0);
    if (p > 2) {
        // skew form [[A, -I],[I, 0]] with A = matrix of the commutator pairing
        std::vector<std::vector<fp_t>> A(r, std::vector<fp_t>(r));
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) A[i][j] = G.eps(G.basis_index(i), G.basis_index(j));
        for (size_t w1 = 0; w1 < N; ++w1)
            for (size_t w2 = 0; w2 < N; ++w2) {
                unsigned acc = 0;
                for (unsigned i = 0; i < r; ++i) {
                    fp_t u1 = digits.digit(w1, i), v1 = digits.digit(w1, r + i);
                    fp_t u2 = digits.digit(w2, i), v2 = digits.digit(w2, r + i);
                    acc += static_cast<unsigned>(v1) * u2 % p;           // +I block
                    acc += static_cast<unsigned>(u1) * (p - v2) % p;     // -I block
                    for (unsigned j = 0; j < r; ++j)
                        acc += static_cast<unsigned>(u1) * digits.digit(w2, j) % p * A[i][j] % p;
                }
                size_t pu1 = w1 % G.n, pu2 = w2 % G.n;
                acc += G.gam(pu2, pu1);
                d[w1 * N + w2] = static_cast<std::uint8_t>(acc % p);
            }
    } else {
        ExtensionCocycle ext;
        ext.p = 2;
        ext.r = r;
        ext.n = G.n;
        ext.c = G.gamma;
        Bilinearization bl = bilinearize_cocycle(ext);
        // B = [[A, I],[0,0]]
        for (size_t w1 = 0; w1 < N; ++w1)
            for (size_t w2 = 0; w2 < N; ++w2) {
                unsigned acc = 0;
                for (unsigned i = 0; i < r; ++i) {
                    fp_t u1 = digits.digit(w1, i);
                    if (!u1) continue;
                    acc ^= u1 & digits.digit(w2, r + i);  // I block: u1 . v2
                    for (unsigned j = 0; j < r; ++j)
                        acc ^= u1 & digits.digit(w2, j) & bl.A.at(i, j);
                }
                d[w1 * N + w2] = static_cast<std::uint8_t>(acc & 1);
            }
        out.checks.push_back("bilinearization solvable");
    }
    out.E = build_group(p, R, std::move(d), seed);
    // center is exactly the rho line
    GroupProfile pr = profile(out.E);
    check_internal(pr.center_order == p, "closure center is larger than p");
    out.checks.push_back("|Z(E)| = p");
    // the embedded copy of G sits over V + 0 with matching power constants
    if (p > 2) {
        for (size_t a = 0; a < G.n; ++a)
            for (size_t b = 0; b < G.n; ++b)
                check_internal(out.E.gam(a, b) == G.gam(a, b), "restriction to V+0 differs from G");
        out.checks.push_back("restriction to V+0 equals the input cocycle");
    } else {
        std::vector<size_t> gens;
        for (unsigned i = 0; i < r; ++i) gens.push_back(out.E.basis_index(i));
        WildGroup sub = saturated_subgroup(out.E, gens);
        check_internal(profile(sub).order_stats == profile(build_group(G.p, G.r, G.gamma)).order_stats,
                       "embedded copy is not isomorphic to the input");
        out.checks.push_back("embedded copy isomorphic to the input");
    }
    out.checks.push_back("Z(E) inside the embedded copy (rho line)");
    return out;
}

}  // namespace wildaut
