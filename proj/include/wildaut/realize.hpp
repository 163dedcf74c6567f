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

#ifndef WILDAUT_REALIZE_HPP
#define WILDAUT_REALIZE_HPP

#include "wildaut/analysis.hpp"

namespace wildaut {

struct Realization {
    UP<FDom> f;
    const Field* field = nullptr;
    std::string target;                 // expected classification
    UP<FDom> expected_ad;               // closed-form Ad when known (else zero)
    std::vector<std::string> checks;    // construction-time verifications
};

// closed-form Ad of the linearized family: sum over i of
// t_i^{p^{n-i}} Y^{p^{n-i}} + t_i^{p^n} Y^{p^{n+i}}, with t_n = 1
UP<FDom> linearized_ad_closed_form(unsigned n, const std::vector<FElem>& t, const Field* K);

// f = t_0 X^2 + t_1 X^{1+p} + ... + X^{1+p^n}; p = 2 requires t_0 = 0
Realization realize_linearized(fp_t p, unsigned n, const std::vector<FElem>& t);

// c(X,Y) = ((X+Y)^p - X^p - Y^p)/p over F_p, p odd
BP<FDom> witt_cocycle(fp_t p);

// f_1 = c(X^p, -X): the p^2-cyclic cover
Realization realize_cyclic_p2(fp_t p);

// the exponent-p^2 extraspecial realization over F_{q^4}, q = p^n
Realization realize_type_II(fp_t p, unsigned n);

// multi-parameter exponent-p^2 family, fully specialized values t_0..t_{n-1}
Realization realize_type_II_family(fp_t p, unsigned n, const std::vector<FElem>& t);

enum class SaturatedBase { type_I, type_II, type_IIIb };

// f realizing the saturated subgroup cut out by the monic additive divisor
// S_F of Y^{q^2}+Y; verifies Ad_f = S_F and the commutation rule, and keeps
// the full analysis.
struct SaturatedRealization {
    Realization real;
    CoverAnalysis analysis;
};
SaturatedRealization realize_saturated(fp_t p, unsigned n, const UP<FDom>& S_F, SaturatedBase base,
                                       const AnalyzeOptions& opt = {});

// conductor-25 family f_{a,b} = (X^4+aX^2+bX)^7 + X^5 over F_16
enum class D8Case { case1, case2i, case2ii, case2iii };
Realization realize_D8_family(D8Case which);

// the reduced conductor-41 realization of D8 over F_2
Realization classic_D8_example();

}  // namespace wildaut

#endif
