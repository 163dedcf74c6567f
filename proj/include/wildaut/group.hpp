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

#ifndef WILDAUT_GROUP_HPP
#define WILDAUT_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wildaut/linalg.hpp"

namespace wildaut {

// Central extension 0 -> F_p -> G -> V -> 0 presented by cocycle data on an
// F_p-space V of dimension r. Elements are pairs (v, c) with multiplication
// (v1,c1)(v2,c2) = (v1+v2, c1+c2+gamma(v1,v2)). Indices run over V in digit
// order (index = sum of digit_i p^i over a fixed basis).
struct WildGroup {
    fp_t p = 2;
    unsigned r = 0;
    size_t n = 1;                // p^r
    std::vector<std::uint8_t> gamma;  // n*n
    std::vector<std::uint8_t> svec;   // n: s(v) with sigma_v^p = rho^{s(v)}

    u64 order() const {
        u64 o = p;
        for (unsigned i = 0; i < r; ++i) o *= p;
        return o;
    }
    fp_t gam(size_t a, size_t b) const { return gamma[a * n + b]; }
    fp_t eps(size_t a, size_t b) const {
        return static_cast<fp_t>((gam(a, b) + p - gam(b, a)) % p);
    }
    size_t add_index(size_t a, size_t b) const;
    size_t scale_index(size_t a, fp_t c) const;
    size_t basis_index(unsigned i) const;
    fp_t digit(size_t a, unsigned i) const;
};

// Validates the cocycle (normalization, cocycle identity exhaustively for
// small groups and sampled otherwise) and derives the s-table.
WildGroup build_group(fp_t p, unsigned r, std::vector<std::uint8_t> gamma, u64 seed = kDefaultSeed);

// Subgroup on the span of the given generator indices (saturated subgroup).
WildGroup saturated_subgroup(const WildGroup& G, const std::vector<size_t>& generators);

enum class GKind { elementary_abelian, abelian_p2, extraspecial, central_product };
enum class EsType { none, I, II, IIIa, IIIb, ambiguous };

struct GroupLabel {
    GKind kind;
    unsigned rank = 0;      // abelian kinds: number of cyclic factors
    u64 es_order = 0;       // extraspecial factor order
    EsType es_type = EsType::none;
    unsigned abelian_rank = 0;  // central product: cyclic factors of the abelian part
    bool abelian_elementary = true;
    std::string text;
};

struct GroupProfile {
    u64 order = 0;
    u64 exponent = 0;
    u64 center_order = 0;
    u64 derived_order = 0;
    unsigned radical_dim = 0;
    std::vector<std::pair<u64, u64>> order_stats;  // (element order, count)
    std::vector<std::vector<fp_t>> eps_basis;      // r x r matrix of the pairing
    GroupLabel label;
};

// Exponent, center, derived subgroup, order statistics and the isomorphism
// label within the classified list (elementary abelian / (p,..,p,p^2) /
// extraspecial / central product).
GroupProfile profile(const WildGroup& G, u64 max_order = 0);

std::string label_text(const GroupLabel& l, fp_t p);

// ---- abstract small groups (for extension extraction and tests) ----

struct SmallGroup {
    size_t n = 1;
    std::vector<size_t> mul;  // n*n table
    size_t op(size_t a, size_t b) const { return mul[a * n + b]; }
    size_t inverse(size_t a) const;
    u64 element_order(size_t a) const;
    static SmallGroup cyclic(size_t m);
    static SmallGroup product(const SmallGroup& a, const SmallGroup& b);
    static SmallGroup from_wild(const WildGroup& g);
};

struct ExtensionCocycle {
    fp_t p = 2;
    unsigned r = 0;              // dim of G/N
    size_t n = 1;                // p^r
    std::vector<std::uint8_t> c;  // cocycle table on G/N
    std::vector<size_t> coset_basis;  // chosen basis cosets (least representative)
    fp_t cell(size_t a, size_t b) const { return c[a * n + b]; }
};

// Cocycle of 1 -> N -> G -> G/N -> 1 for a central order-p subgroup N with
// elementary abelian quotient; the section takes the least preimage.
ExtensionCocycle cocycle_of_extension(const SmallGroup& G, const std::vector<size_t>& N_elems);

struct Bilinearization {
    FpMat A;                        // n x n over F_2
    std::vector<std::uint8_t> h;    // correction function on V
};

// Every class in H^2(V, F_2) has a bilinear representative: solve
// A(v1,v2) = c(v1,v2) + h(v1) + h(v2) + h(v1+v2) for (A, h).
Bilinearization bilinearize_cocycle(const ExtensionCocycle& c);

struct ClosureResult {
    WildGroup E;                 // extraspecial on W = V + V
    std::vector<std::string> checks;
};

// Extraspecial closure: E of order p^{2r+1} on W = V + V containing the input
// as the saturated preimage of V + 0, with |Z(E)| = p.
ClosureResult extraspecial_closure(const WildGroup& G, u64 seed = kDefaultSeed);

}  // namespace wildaut

#endif
