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

#ifndef WILDAUT_FQ_HPP
#define WILDAUT_FQ_HPP

#include <memory>
#include <optional>
#include <vector>

#include "wildaut/common.hpp"

namespace wildaut {

class Field;

// Element of F_{p^e}: coordinates in the power basis of the modulus root,
// c[0] the constant coordinate. Immutable value type.
struct FElem {
    const Field* F = nullptr;
    std::vector<fp_t> c;

    bool is_zero() const;
    bool operator==(const FElem& o) const { return F == o.F && c == o.c; }
    bool operator!=(const FElem& o) const { return !(*this == o); }
};

// F_{p^e} with a deterministic modulus: the first monic irreducible of
// degree e when coefficient tuples (c0,...,c_{e-1}) are scanned in
// lexicographic order with the constant term compared first. Instances are
// interned in a process-wide registry and never destroyed, so raw pointers
// stay valid; everything here is immutable after construction.
class Field {
  public:
    static const Field* get(fp_t p, unsigned e);
    static const Field* get(fp_t p, unsigned e, const std::vector<fp_t>& modulus);
    static unsigned degree_cap();
    static void set_degree_cap(unsigned cap);

    fp_t p;
    unsigned e;
    std::vector<fp_t> modulus;  // c0..c_e monic, size e+1; e==1 => [0,1] (X - 0 placeholder uses X itself)

    u64 order_minus_one_unsafe() const;  // p^e - 1, requires p^e <= 2^64

    FElem zero() const;
    FElem one() const;
    FElem from_int(i64 v) const;
    FElem gen() const;                       // the modulus root (or 1 when e == 1)
    FElem from_coords(std::vector<fp_t> c) const;
    FElem element_at(u64 index) const;       // canonical enumeration, index = sum c_i p^i
    u64 size_fits() const;                   // p^e if it fits in u64 else 0

    FElem add(const FElem& a, const FElem& b) const;
    FElem sub(const FElem& a, const FElem& b) const;
    FElem neg(const FElem& a) const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem inv(const FElem& a) const;
    FElem div(const FElem& a, const FElem& b) const;
    FElem pow(const FElem& a, u64 n) const;
    FElem frob(const FElem& a) const;               // a^p, linear-algebra fast path
    FElem frob_iter(const FElem& a, unsigned j) const;  // a^{p^j}

    // Absolute trace to F_p. Always lands in the prime field.
    fp_t trace_to_fp(const FElem& a) const;

    bool in_prime_field(const FElem& a) const;

    std::string describe() const;  // "F_{p^e}"

  private:
    friend struct FieldRegistry;
    Field() = default;
    void finish_init();

    std::vector<std::vector<fp_t>> redrow_;  // Y^{e+k} mod modulus, k = 0..e-2
    std::vector<std::vector<fp_t>> frobmat_; // column i = coords((Y^i)^p)
};

// Canonical element ordering: lexicographic on coords with the
// most-significant coordinate last (equals numeric order of sum c_i p^i).
bool canonical_less(const FElem& a, const FElem& b);

inline FElem operator+(const FElem& a, const FElem& b) { return a.F->add(a, b); }
inline FElem operator-(const FElem& a, const FElem& b) { return a.F->sub(a, b); }
inline FElem operator-(const FElem& a) { return a.F->neg(a); }
inline FElem operator*(const FElem& a, const FElem& b) { return a.F->mul(a, b); }

// a^{p^j} with j reduced mod e.
FElem frobenius(const FElem& a, unsigned j);

// Canonical embedding F_{p^e} -> F_{p^(e*d)}. The degree quotient is walked
// along the chain that multiplies by its smallest prime factor at each step;
// each step maps the source generator to the smallest root of the source
// modulus in the step target (canonical element ordering). Composites of
// canonical embeddings along subchains agree with the direct embedding.
FElem embed(const FElem& a, const Field* target);

// All roots in K of a squarefree monic polynomial given by coefficients over
// K (c[0] + c[1] Y + ...). Deterministic (trace-functional splitting); roots
// come back sorted in canonical order. Only factors that split completely
// contribute; the caller is expected to pass polynomials that split in K.
std::vector<FElem> roots_in_field(const std::vector<FElem>& coeffs, const Field* K);

}  // namespace wildaut

#endif
