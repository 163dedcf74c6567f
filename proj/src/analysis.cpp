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

#include "wildaut/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace wildaut {

namespace {

u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// canonical root of T^p - T = c in K (the least solution); requires zero trace
FElem kappa_solve(const Field* K, const FElem& c, const FpMat& artin_mat) {
    auto sol = solve(artin_mat, c.c);
    check_internal(sol.has_value(), "Artin-Schreier constant has no preimage in the work field");
    FElem x = K->from_coords(*sol);
    FElem best = x;
    FElem one = K->one();
    FElem cur = x;
    for (fp_t i = 1; i < K->p; ++i) {
        cur = K->add(cur, one);
        if (canonical_less(cur, best)) best = cur;
    }
    return best;
}

FpMat artin_operator_matrix(const Field* K) {
    FpMat m(K->p, K->e, K->e);
    for (unsigned j = 0; j < K->e; ++j) {
        FElem b = K->zero();
        b.c[j] = 1;
        FElem img = K->sub(K->frob(b), b);  // T^p - T columnwise
        for (unsigned i = 0; i < K->e; ++i) m.at(i, j) = img.c[i];
    }
    return m;
}

// q_z(X) := P(X, z) for every root, used to evaluate the cocycle in bulk
std::vector<UP<FDom>> slices(const BP<FDom>& P, const std::vector<FElem>& roots) {
    std::vector<UP<FDom>> out;
    out.reserve(roots.size());
    for (auto& z : roots) out.push_back(bp_eval_y(P, z));
    return out;
}

UP<FDom> shift_const(const UP<FDom>& f, const FElem& y) {
    // f(X + y)
    const Field* K = f.dom.K;
    UP<FDom> r = up_zero(f.dom);
    for (auto& [k, c] : f.t)
        for (i64 j = 0; j <= k; ++j) {
            fp_t b = binom_mod_p(k, j, K->p);
            if (!b) continue;
            up_add_term(r, j,
                        K->mul(c, K->mul(K->from_int(b), K->pow(y, static_cast<u64>(k - j)))));
        }
    return r;
}

fp_t as_residue(const FElem& v) {
    check_internal(v.F->in_prime_field(v), "value expected in the prime field");
    return v.c.empty() ? 0 : v.c[0];
}

}  // namespace

fp_t epsilon_at(const BP<FDom>& P, const FElem& y, const FElem& z, bool assert_constant) {
    const Field* K = P.dom.K;
    if (assert_constant) {
        UP<FDom> qy = bp_eval_y(P, y), qz = bp_eval_y(P, z);
        UP<FDom> expr = up_sub(up_add(qy, shift_const(qz, y)), up_add(qz, shift_const(qy, z)));
        check_internal(expr.deg() <= 0, "commutator pairing is not constant in X");
        return as_residue(expr.is_zero() ? K->zero() : expr.coeff(0));
    }
    // constant term: P(0,.) = 0 collapses the expression to P(y,z) - P(z,y)
    return as_residue(K->sub(bp_eval_xy(P, y, z), bp_eval_xy(P, z, y)));
}

fp_t s_at(const BP<FDom>& P, const FElem& y, bool assert_constant) {
    const Field* K = P.dom.K;
    if (assert_constant) {
        UP<FDom> acc = up_zero(P.dom);
        FElem shift = K->zero();
        for (fp_t i = 0; i < K->p; ++i) {
            acc = up_add(acc, shift_const(bp_eval_y(P, y), shift));
            shift = K->add(shift, y);
        }
        check_internal(acc.deg() <= 0, "power-constant sum is not constant in X");
        return as_residue(acc.is_zero() ? K->zero() : acc.coeff(0));
    }
    FElem acc = K->zero();
    FElem pt = K->zero();
    for (fp_t i = 1; i < K->p; ++i) {
        pt = K->add(pt, y);
        acc = K->add(acc, bp_eval_xy(P, pt, y));
    }
    return as_residue(acc);
}

CoverAnalysis analyze(const UP<FDom>& f, const AnalyzeOptions& opt) {
    CoverAnalysis A;
    A.base = f.dom.K;
    A.input = f;
    fp_t p = A.base->p;
    auto reduction = artin_schreier_reduce(f);
    A.red = reduction.red;
    A.witness = reduction.witness;
    auto inv = cover_invariants_of_reduced(A.red);
    A.m = inv.conductor;
    A.genus = inv.genus;
    require(A.genus >= 1, ErrKind::degenerate_cover,
            "genus 0 cover: wild inertia analysis needs conductor >= 2");
    A.checks.push_back("reduction witness identity");

    A.dec = decompose(A.red);
    BP<FDom> series = pf_by_series(A.red);
    check_internal(series == A.dec.p_f, "decompose and series routes disagree on P_f");
    A.checks.push_back("P_f: rewrite route equals truncated-series route");
    check_internal(top_coefficient_shape_ok(A.dec, A.red.lc()), "top coefficient shape violated");
    A.checks.push_back("a_{m-1} lies in lc*mY + (Y k[Y])^p");

    A.ad = additive_polynomial(A.dec);
    A.checks.push_back("Ad additive, separable, degree within (m-1)^2");

    u64 cap = opt.max_group_order ? opt.max_group_order : ipow(p, 13);
    u64 group_order = static_cast<u64>(p) * static_cast<u64>(A.ad.deg());
    require(group_order <= cap, ErrKind::cap_exceeded, "group order exceeds the configured cap");

    A.rs = root_basis(A.ad, opt.max_enum);
    A.M = A.rs.M;
    A.big = A.rs.big;
    size_t n = A.rs.count();

    // every enumerated root kills Ad, and the basis roots pass the
    // decomposition-independent oracle
    {
        UP<FDom> ad_big = up_embed(A.ad, A.big);
        for (auto& y : A.rs.roots) check_internal(up_eval(ad_big, y).is_zero(), "non-root enumerated");
        A.checks.push_back("enumerated roots vanish on Ad (F_p-space closure)");
        for (auto& b : A.rs.basis)
            check_internal(root_oracle(A.red, b), "oracle rejects a basis root");
        Rng rng(opt.seed ^ 0x0face5ULL);
        u64 sz = A.big->size_fits();
        int rejected = 0;
        for (int tries = 0; tries < 64 && rejected < 3; ++tries) {
            FElem cand = A.big->element_at(rng.below(sz));
            if (A.rs.contains(cand)) continue;
            check_internal(!root_oracle(A.red, cand), "oracle accepts a non-root");
            ++rejected;
        }
        A.checks.push_back("oracle agrees on basis roots and sampled non-roots");
        if (opt.oracle_sweep) {
            u64 checked = 0, members = 0;
            if (sz && sz <= (u64(1) << 16)) {
                for (u64 i = 0; i < sz; ++i) {
                    FElem cand = A.big->element_at(i);
                    bool is_root = root_oracle(A.red, cand);
                    check_internal(is_root == A.rs.contains(cand), "oracle sweep mismatch");
                    ++checked;
                    if (is_root) ++members;
                }
                check_internal(members == n, "oracle sweep found a different root count");
            } else {
                for (int i = 0; i < 1000; ++i) {
                    FElem cand = A.big->element_at(rng.below(sz));
                    check_internal(root_oracle(A.red, cand) == A.rs.contains(cand),
                                   "oracle sweep mismatch (sampled)");
                    ++checked;
                }
            }
            A.checks.push_back("oracle sweep over " + std::to_string(checked) + " points");
        }
    }

    // kappa constants: T^p - T = -red(y); go to the degree-p step of the
    // splitting field when a trace obstruction appears
    {
        UP<FDom> red_big = up_embed(A.red, A.big);
        std::vector<FElem> values;
        values.reserve(n);
        bool need_step = false;
        for (auto& y : A.rs.roots) {
            FElem v = A.big->neg(up_eval(red_big, y));
            if (A.big->trace_to_fp(v) != 0) need_step = true;
            values.push_back(std::move(v));
        }
        if (need_step) {
            u64 we = static_cast<u64>(A.big->e) * p;
            require(we <= Field::degree_cap(), ErrKind::cap_exceeded,
                    "work field degree exceeds cap");
            A.work = Field::get(p, static_cast<unsigned>(we));
            A.checks.push_back("work field extended for Artin-Schreier constants");
        } else {
            A.work = A.big;
        }
        FpMat art = artin_operator_matrix(A.work);
        A.kappa.reserve(n);
        for (auto& v : values)
            A.kappa.push_back(kappa_solve(A.work, A.work == A.big ? v : embed(v, A.work), art));
    }

    // cocycle and power constants over the work field
    A.p_work = bp_embed(A.dec.p_f, A.work);
    A.roots_work.reserve(n);
    for (auto& y : A.rs.roots)
        A.roots_work.push_back(A.work == A.big ? y : embed(y, A.work));

    std::vector<std::uint8_t> gamma(n * n, 0);
    {
        auto q = slices(A.p_work, A.roots_work);
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < n; ++i) {
                FElem val = up_eval(q[j], A.roots_work[i]);  // P(y_i, y_j)
                size_t sum = A.rs.add_index(i, j);
                val = A.work->add(val, A.kappa[i]);
                val = A.work->add(val, A.kappa[j]);
                val = A.work->sub(val, A.kappa[sum]);
                gamma[i * n + j] = static_cast<std::uint8_t>(as_residue(val));
            }
        }
        // constancy of the defining X-polynomials on basis pairs and samples
        Rng rng(opt.seed ^ 0x9a77aULL);
        auto assert_pair = [&](size_t i, size_t j) {
            UP<FDom> expr = up_add(q[i], shift_const(q[j], A.roots_work[i]));
            expr = up_sub(expr, q[A.rs.add_index(i, j)]);
            check_internal(expr.deg() <= 0, "cocycle expression not constant in X");
        };
        for (unsigned bi = 0; bi < A.rs.r; ++bi)
            for (unsigned bj = 0; bj < A.rs.r; ++bj)
                assert_pair(static_cast<size_t>(ipow(p, bi)), static_cast<size_t>(ipow(p, bj)));
        for (int k = 0; k < 8 && n > 1; ++k) assert_pair(rng.below(n), rng.below(n));
        A.checks.push_back("cocycle expressions constant in X (basis + sampled pairs)");
    }
    A.group = build_group(p, A.rs.r, std::move(gamma), opt.seed);
    A.checks.push_back("group cocycle identity");

    // independent power constants: s(y) = sum_i P(X+iy, y)
    {
        for (size_t i = 0; i < n; ++i) {
            fp_t s = s_at(A.p_work, A.roots_work[i], false);
            check_internal(s == A.group.svec[i], "power constants disagree with the group law");
        }
        Rng rng(opt.seed ^ 0x5eedULL);
        for (unsigned bi = 0; bi < A.rs.r; ++bi)
            (void)s_at(A.p_work, A.roots_work[(size_t)ipow(p, bi)], true);
        for (int k = 0; k < 4 && n > 1; ++k)
            (void)s_at(A.p_work, A.roots_work[rng.below(n)], true);
        A.checks.push_back("power constants match the group law");
    }

    A.prof = profile(A.group, cap);

    // epsilon bilinear and alternating
    {
        for (size_t i = 0; i < n; ++i)
            check_internal(A.group.eps(i, i) == 0, "pairing not alternating");
        Rng rng(opt.seed ^ 0xb111ULL);
        u64 triples = static_cast<u64>(n) * n * n;
        auto lin = [&](size_t a, size_t b, size_t c) {
            fp_t lhs = A.group.eps(A.rs.add_index(a, b), c);
            fp_t rhs = static_cast<fp_t>((A.group.eps(a, c) + A.group.eps(b, c)) % p);
            return lhs == rhs;
        };
        if (triples <= (u64(1) << 21)) {
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    for (size_t c = 0; c < n; ++c)
                        check_internal(lin(a, b, c), "pairing not bilinear");
        } else {
            for (int k = 0; k < 2048; ++k)
                check_internal(lin(rng.below(n), rng.below(n), rng.below(n)),
                               "pairing not bilinear (sampled)");
        }
        A.checks.push_back("epsilon bilinear and alternating");
    }

    // Hurwitz-type implication: a large group forces f = X * (additive).
    // A degree-1 monomial is invisible to Delta and is stripped first.
    if (A.genus > 1) {
        bool trips = (p == 2) ? (3 * group_order > 2 * static_cast<u64>(A.genus))
                              : (group_order * (p - 1) > static_cast<u64>(p) * A.genus);
        if (trips) {
            UP<FDom> body = A.red;
            body.t.erase(1);
            check_internal(is_x_times_additive(body).has_value(),
                           "ratio bound exceeded but f is not X times an additive polynomial");
            A.checks.push_back("ratio threshold implies f = X*R with R additive");
        }
    }
    return A;
}

fp_t gamma_op(const CoverAnalysis& A, const FElem& y, const FElem& z) {
    size_t i = A.root_index(y.F == A.big ? y : embed(y, A.big));
    size_t j = A.root_index(z.F == A.big ? z : embed(z, A.big));
    // re-derive with the constancy assertion
    UP<FDom> qy = bp_eval_y(A.p_work, A.roots_work[i]);
    UP<FDom> qz = bp_eval_y(A.p_work, A.roots_work[j]);
    UP<FDom> expr = up_add(qy, shift_const(qz, A.roots_work[i]));
    expr = up_sub(expr, bp_eval_y(A.p_work, A.roots_work[A.rs.add_index(i, j)]));
    check_internal(expr.deg() <= 0, "cocycle expression not constant in X");
    return A.group.gam(i, j);
}

fp_t epsilon_op(const CoverAnalysis& A, const FElem& y, const FElem& z) {
    size_t i = A.root_index(y.F == A.big ? y : embed(y, A.big));
    size_t j = A.root_index(z.F == A.big ? z : embed(z, A.big));
    fp_t direct = epsilon_at(A.p_work, A.roots_work[i], A.roots_work[j], true);
    check_internal(direct == A.group.eps(i, j), "pairing disagrees with the group table");
    return direct;
}

fp_t power_constant_op(const CoverAnalysis& A, const FElem& y) {
    size_t i = A.root_index(y.F == A.big ? y : embed(y, A.big));
    fp_t direct = s_at(A.p_work, A.roots_work[i], true);
    check_internal(direct == A.group.svec[i], "power constant disagrees with the group table");
    return direct;
}

UP<FDom> s_polynomial(const CoverAnalysis& A) {
    const FDom dom = A.red.dom;
    BP<FDom> acc = bp_zero(dom);
    for (fp_t i = 0; i < A.base->p; ++i) acc = bp_add(acc, bp_shift_x(A.dec.p_f, i));
    // reduce every X-coefficient mod Ad(Y); only the constant may survive
    UP<FDom> out = up_zero(dom);
    for (auto& [kx, u] : acc.t) {
        UP<FDom> red = up_divrem(u, A.ad).second;
        if (kx == 0) {
            out = red;
        } else {
            check_internal(red.is_zero(), "s-polynomial keeps X-dependence mod Ad");
        }
    }
    return out;
}

std::map<std::pair<i64, i64>, FElem> epsilon_polynomial(const CoverAnalysis& A) {
    const Field* K = A.base;
    fp_t p = K->p;
    // trivariate terms (x, y, z) -> coefficient
    std::map<std::tuple<i64, i64, i64>, FElem> tri;
    auto addt = [&](i64 x, i64 y, i64 z, const FElem& c) {
        if (c.is_zero()) return;
        auto key = std::make_tuple(x, y, z);
        auto it = tri.find(key);
        if (it == tri.end()) {
            tri.emplace(key, c);
        } else {
            it->second = K->add(it->second, c);
            if (it->second.is_zero()) tri.erase(it);
        }
    };
    for (auto& [kx, u] : A.dec.p_f.t)
        for (auto& [ky, c] : u.t) {
            addt(kx, ky, 0, c);             // +P(X, Y)
            addt(kx, 0, ky, K->neg(c));     // -P(X, Z)
            for (i64 j = 0; j <= kx; ++j) {
                fp_t b = binom_mod_p(kx, j, p);
                if (!b) continue;
                FElem cb = K->mul(c, K->from_int(b));
                addt(j, kx - j, ky, cb);            // +P(X+Y, Z)
                addt(j, ky, kx - j, K->neg(cb));    // -P(X+Z, Y)
            }
        }
    // reduce Y and Z exponents modulo Ad, one rewrite pass at a time
    auto reduce_var = [&](int which) {
        std::map<std::tuple<i64, i64, i64>, FElem> next;
        i64 d = A.ad.deg();
        for (auto& [key, c] : tri) {
            i64 e = which == 1 ? std::get<1>(key) : std::get<2>(key);
            if (e < d) {
                auto it = next.find(key);
                if (it == next.end())
                    next.emplace(key, c);
                else {
                    it->second = K->add(it->second, c);
                    if (it->second.is_zero()) next.erase(it);
                }
                continue;
            }
            // e = d + rest: Y^d = Y^d - Ad(Y) (monic) spread onto lower terms
            UP<FDom> low = up_neg(A.ad);
            low.t.erase(d);  // Y^d == low (mod Ad)
            for (auto& [k2, c2] : low.t) {
                std::tuple<i64, i64, i64> nk = key;
                if (which == 1)
                    std::get<1>(nk) = e - d + k2;
                else
                    std::get<2>(nk) = e - d + k2;
                FElem nc = K->mul(c, c2);
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(nk, nc);
                else {
                    it->second = K->add(it->second, nc);
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        tri = std::move(next);
    };
    auto needs = [&](int which) {
        i64 d = A.ad.deg();
        for (auto& [key, c] : tri)
            if ((which == 1 ? std::get<1>(key) : std::get<2>(key)) >= d) return true;
        return false;
    };
    for (int which : {1, 2})
        while (needs(which)) reduce_var(which);
    // X-dependence must cancel
    std::map<std::pair<i64, i64>, FElem> out;
    for (auto& [key, c] : tri) {
        check_internal(std::get<0>(key) == 0, "epsilon identity keeps X-dependence mod Ad");
        out.emplace(std::make_pair(std::get<1>(key), std::get<2>(key)), c);
    }
    return out;
}

// ---- modifications ----

ModifyResult modify_type1(const UP<FDom>& f, const UP<FDom>& S, const AnalyzeOptions& opt) {
    auto [s_add, s_sep] = check_additive_separable(S);
    require(s_add && s_sep, ErrKind::domain, "modifier S must be additive and separable");
    ModifyResult out;
    CoverAnalysis Af = analyze(f, opt);
    UP<FDom> composite = up_compose(f, S);
    out.result = analyze(composite, opt);
    out.divisor = up_monic(up_compose(Af.ad, S));  // Ad_f(S(Y))
    UP<FDom> rem = up_divrem(out.result.ad, out.divisor).second;
    check_internal(rem.is_zero(), "Ad_f(S(Y)) does not divide the composite Ad");
    out.checks.push_back("Ad_f(S(Y)) divides Ad of the composite");

    // epsilon compatibility on the roots of Ad_f(S(Y))
    const Field* L = out.result.big;
    UP<FDom> div_L = up_embed(out.divisor, L);
    UP<FDom> S_L = up_embed(S, L);
    BP<FDom> Pf_L = bp_embed(Af.dec.p_f, L);
    std::vector<size_t> sub;
    for (size_t i = 0; i < out.result.rs.count(); ++i)
        if (up_eval(div_L, out.result.rs.roots[i]).is_zero()) sub.push_back(i);
    check_internal(static_cast<i64>(sub.size()) == out.divisor.deg(),
                   "wrong number of divisor roots in the splitting field");
    Rng rng(opt.seed ^ 0x7771ULL);
    size_t pairs = sub.size() * sub.size();
    auto check_pair = [&](size_t i, size_t j, bool assert_const) {
        const FElem& y = out.result.rs.roots[i];
        const FElem& z = out.result.rs.roots[j];
        fp_t lhs = epsilon_at(Pf_L, up_eval(S_L, y), up_eval(S_L, z), assert_const);
        fp_t rhs = out.result.group.eps(i, j);
        check_internal(lhs == rhs, "epsilon incompatibility under type-1 modification");
    };
    if (pairs <= 4096) {
        for (size_t i : sub)
            for (size_t j : sub) check_pair(i, j, false);
    } else {
        for (int k = 0; k < 512; ++k)
            check_pair(sub[rng.below(sub.size())], sub[rng.below(sub.size())], false);
    }
    if (!sub.empty()) check_pair(sub.back(), sub[sub.size() / 2], true);
    out.checks.push_back("epsilon compatible with the base cover on Z(Ad_f(S(Y)))");
    return out;
}

ModifyResult modify_type2(const UP<FDom>& f, const UP<FDom>& g, const AnalyzeOptions& opt) {
    auto rf = artin_schreier_reduce(f), rg = artin_schreier_reduce(g),
         rs = artin_schreier_reduce(up_add(f, g));
    require(!rf.red.is_zero() && !rg.red.is_zero() && !rs.red.is_zero(), ErrKind::domain,
            "type-2 modification requires red(f), red(g), red(f+g) nonzero");
    ModifyResult out;
    CoverAnalysis Af = analyze(f, opt);
    CoverAnalysis Ag = analyze(g, opt);
    require(up_divrem(Af.ad, Ag.ad).second.is_zero(), ErrKind::domain,
            "not a type-2 modification: Ad_{red g} does not divide Ad_{red f}");
    out.result = analyze(up_add(f, g), opt);
    out.divisor = Ag.ad;
    check_internal(up_divrem(out.result.ad, Ag.ad).second.is_zero(),
                   "Ad_{red g} does not divide Ad_{red(f+g)}");
    out.checks.push_back("Ad_{red g} divides Ad_{red(f+g)}");

    // common field for the three evaluations
    unsigned L_e = static_cast<unsigned>(std::lcm(
        std::lcm<u64, u64>(Af.big->e, Ag.big->e), static_cast<u64>(out.result.big->e)));
    require(L_e <= Field::degree_cap(), ErrKind::cap_exceeded, "common field exceeds cap");
    const Field* L = Field::get(Af.base->p, L_e);
    BP<FDom> Pf = bp_embed(Af.dec.p_f, L);
    BP<FDom> Pg = bp_embed(Ag.dec.p_f, L);
    BP<FDom> Ps = bp_embed(out.result.dec.p_f, L);
    fp_t p = Af.base->p;
    std::vector<FElem> zg;
    for (auto& y : Ag.rs.roots) zg.push_back(embed(y, L));
    Rng rng(opt.seed ^ 0x7772ULL);
    auto check_pair = [&](size_t i, size_t j) {
        fp_t lhs = epsilon_at(Ps, zg[i], zg[j]);
        fp_t rhs = static_cast<fp_t>((epsilon_at(Pf, zg[i], zg[j]) + epsilon_at(Pg, zg[i], zg[j])) % p);
        check_internal(lhs == rhs, "epsilon is not additive under type-2 modification");
    };
    if (zg.size() * zg.size() <= 4096) {
        for (size_t i = 0; i < zg.size(); ++i)
            for (size_t j = 0; j < zg.size(); ++j) check_pair(i, j);
    } else {
        for (int k = 0; k < 512; ++k) check_pair(rng.below(zg.size()), rng.below(zg.size()));
    }
    out.checks.push_back("epsilon additive on Z(Ad_{red g})");
    return out;
}

}  // namespace wildaut
