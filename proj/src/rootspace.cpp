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

#include "wildaut/rootspace.hpp"

#include <numeric>

#include "wildaut/linalg.hpp"

namespace wildaut {

size_t RootSpace::add_index(size_t a, size_t b) const {
    size_t out = 0, mult = 1;
    fp_t p = big->p;
    for (unsigned i = 0; i < r; ++i) {
        size_t da = a % p, db = b % p;
        out += ((da + db) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

size_t RootSpace::scale_index(size_t a, fp_t c) const {
    size_t out = 0, mult = 1;
    fp_t p = big->p;
    for (unsigned i = 0; i < r; ++i) {
        out += ((a % p) * c % p) * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

size_t RootSpace::index_of_elem(const FElem& x) const {
    auto it = index_of.find(x.c);
    check_internal(it != index_of.end(), "element is not an enumerated root");
    return it->second;
}

unsigned splitting_extension(const UP<FDom>& ad) {
    auto [additive, separable] = check_additive_separable(ad);
    require(additive && separable, ErrKind::domain,
            "splitting extension requires an additive separable polynomial");
    if (ad.deg() == 1) return 1;
    unsigned M = 1;
    for (auto& [d, total] : distinct_degree_profile(ad))
        M = static_cast<unsigned>(std::lcm<u64, u64>(M, static_cast<u64>(d)));
    return M;
}

RootSpace root_basis(const UP<FDom>& ad, u64 max_enum) {
    const Field* base = ad.dom.K;
    unsigned M = splitting_extension(ad);
    u64 big_deg = static_cast<u64>(base->e) * M;
    require(big_deg <= Field::degree_cap(), ErrKind::cap_exceeded,
            "splitting field degree " + std::to_string(big_deg) + " exceeds cap");
    RootSpace rs;
    rs.M = M;
    rs.big = Field::get(base->p, static_cast<unsigned>(big_deg));
    UP<FDom> ad_big = up_embed(ad, rs.big);
    // matrix of the additive map v -> ad(v) in power-basis coordinates
    unsigned dim = rs.big->e;
    FpMat mat(base->p, dim, dim);
    for (unsigned j = 0; j < dim; ++j) {
        FElem b = rs.big->zero();
        b.c[j] = 1;
        FElem img = rs.big->zero();
        for (auto& [k, c] : ad_big.t) {
            unsigned jj = 0;
            is_p_power(k, base->p, &jj);
            img = rs.big->add(img, rs.big->mul(c, rs.big->frob_iter(b, jj)));
        }
        for (unsigned i = 0; i < dim; ++i) mat.at(i, j) = img.c[i];
    }
    auto kern = kernel_basis(mat);
    rs.r = static_cast<unsigned>(kern.size());
    // dim must match deg ad = p^r
    u64 expect = 1;
    for (unsigned i = 0; i < rs.r; ++i) expect *= base->p;
    check_internal(static_cast<i64>(expect) == ad.deg(), "kernel dimension mismatch");
    for (auto& v : kern) rs.basis.push_back(rs.big->from_coords(v));
    u64 count = expect;
    require(count <= max_enum, ErrKind::cap_exceeded, "root enumeration cap exceeded");
    rs.roots.reserve(count);
    for (u64 idx = 0; idx < count; ++idx) {
        u64 rem = idx;
        FElem acc = rs.big->zero();
        for (unsigned i = 0; i < rs.r; ++i) {
            fp_t d = static_cast<fp_t>(rem % base->p);
            rem /= base->p;
            if (d) {
                FElem term = rs.basis[i];
                if (d > 1) term = rs.big->mul(term, rs.big->from_int(d));
                acc = rs.big->add(acc, term);
            }
        }
        rs.index_of.emplace(acc.c, rs.roots.size());
        rs.roots.push_back(std::move(acc));
    }
    check_internal(rs.index_of.size() == count, "roots are not pairwise distinct");
    return rs;
}

bool root_oracle(const UP<FDom>& f, const FElem& y) {
    require_reduced(f);
    const Field* K = y.F;
    require(K->p == f.dom.K->p && K->e % f.dom.K->e == 0, ErrKind::usage,
            "oracle point must live in an extension of the coefficient field");
    UP<FDom> fk = up_embed(f, K);
    FDom D{K};
    // T(X) = f(X+y) - f(X) - f(y)
    UP<FDom> T = up_zero(D);
    for (auto& [k, c] : fk.t) {
        for (i64 j = 0; j < k; ++j) {
            fp_t b = binom_mod_p(k, j, K->p);
            if (!b) continue;
            FElem coef = K->mul(c, K->mul(K->from_int(b), K->pow(y, static_cast<u64>(k - j))));
            up_add_term(T, j, coef);
        }
    }
    up_add_term(T, 0, K->neg(up_eval(fk, y)));  // y^k terms at j=0 minus f(y) cancel f(y)
    // truncated geometric series for P
    i64 bound = (f.deg() - 1) / static_cast<i64>(K->p);
    auto trunc = [&](UP<FDom> g) {
        for (auto it = g.t.begin(); it != g.t.end();)
            it = (it->first > bound) ? g.t.erase(it) : std::next(it);
        return g;
    };
    UP<FDom> target = trunc(T);
    UP<FDom> P = target;
    for (int iter = 0; iter < 128; ++iter) {
        UP<FDom> nxt = trunc(up_add(target, up_pow_p(P, 1)));
        if (nxt == P) break;
        P = std::move(nxt);
    }
    UP<FDom> residue = up_sub(T, up_sub(P, up_pow_p(P, 1)));
    return residue.is_zero();
}

}  // namespace wildaut
