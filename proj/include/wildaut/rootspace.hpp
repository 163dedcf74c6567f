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

#ifndef WILDAUT_ROOTSPACE_HPP
#define WILDAUT_ROOTSPACE_HPP

#include "wildaut/artin.hpp"

namespace wildaut {

// Roots of an additive separable polynomial as an F_p-vector space with a
// deterministic basis (reduced echelon kernel, canonical coordinate order).
struct RootSpace {
    const Field* big = nullptr;  // F_{p^{eM}}
    unsigned M = 1;
    unsigned r = 0;              // dimension, p^r = deg ad
    std::vector<FElem> basis;
    std::vector<FElem> roots;    // index = sum lambda_i p^i over basis digits
    std::map<std::vector<fp_t>, size_t> index_of;

    size_t count() const { return roots.size(); }
    // digitwise index arithmetic mirrors addition/scaling of roots
    size_t add_index(size_t a, size_t b) const;
    size_t scale_index(size_t a, fp_t c) const;
    size_t index_of_elem(const FElem& x) const;  // throws if not a root
    bool contains(const FElem& x) const { return index_of.count(x.c) != 0; }
};

// Smallest M with all roots of ad inside F_{p^{eM}} (lcm of the
// distinct-degree profile degrees).
unsigned splitting_extension(const UP<FDom>& ad);

// Kernel construction; checks dim = log_p(deg ad) and enumerates all roots.
// max_enum caps the enumeration (cap_exceeded beyond it).
RootSpace root_basis(const UP<FDom>& ad, u64 max_enum = u64(1) << 20);

// Membership test independent of the decomposition: evaluates the truncated
// geometric series on Delta f(X, y) and checks Delta f = P - P^p exactly.
// f must be reduced; y may live in any extension of f's field.
bool root_oracle(const UP<FDom>& f, const FElem& y);

}  // namespace wildaut

#endif
