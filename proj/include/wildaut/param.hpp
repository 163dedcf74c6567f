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

#ifndef WILDAUT_PARAM_HPP
#define WILDAUT_PARAM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wildaut/fq.hpp"

namespace wildaut {

// The polynomial ring F_p[t_1, ..., t_k]. Interned like Field.
class ParamRing {
  public:
    static const ParamRing* get(fp_t p, std::vector<std::string> names);
    fp_t p;
    std::vector<std::string> names;
    size_t k() const { return names.size(); }

  private:
    ParamRing() = default;
    friend struct ParamRegistry;
};

// Sparse multivariate polynomial over F_p: exponent vector -> nonzero coeff.
struct PElem {
    const ParamRing* R = nullptr;
    std::map<std::vector<unsigned>, fp_t> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    bool operator==(const PElem& o) const { return R == o.R && t == o.t; }
    bool operator!=(const PElem& o) const { return !(*this == o); }
};

PElem pr_zero(const ParamRing* R);
PElem pr_const(const ParamRing* R, i64 v);
PElem pr_var(const ParamRing* R, size_t idx);  // t_{idx}
PElem pr_add(const PElem& a, const PElem& b);
PElem pr_sub(const PElem& a, const PElem& b);
PElem pr_neg(const PElem& a);
PElem pr_mul(const PElem& a, const PElem& b);
PElem pr_scale(const PElem& a, fp_t c);
// a^{p^j}; coefficients are fixed by Frobenius on F_p.
PElem pr_pow_p(const PElem& a, unsigned j);
// p-th root when every exponent is divisible by p; nullopt otherwise.
std::optional<PElem> pr_p_root(const PElem& a);

// Multivariate gcd, normalized so the lex-leading monomial has coefficient 1.
PElem pr_gcd(const PElem& a, const PElem& b);
// Exact division; throws internal error when not exact.
PElem pr_divexact(const PElem& a, const PElem& b);

// Evaluate under an assignment t_i -> values[i] in a common field.
FElem pr_eval(const PElem& a, const std::vector<FElem>& values, const Field* K);

std::string pr_print(const PElem& a);

}  // namespace wildaut

#endif
