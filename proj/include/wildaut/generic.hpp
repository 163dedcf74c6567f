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

#ifndef WILDAUT_GENERIC_HPP
#define WILDAUT_GENERIC_HPP

#include "wildaut/analysis.hpp"

namespace wildaut {

// Universal reduced family f = sum t_i X^i + X^m over A = F_p[t_i], one
// parameter per exponent i < m coprime to p, with the Frobenius acting on A
// by raising parameters to p-th powers.
struct UniversalFamily {
    fp_t p = 2;
    i64 m = 0;
    const ParamRing* A = nullptr;
    std::vector<i64> param_exps;  // exponent of X carrying parameter k
    UP<PDom> f;
    Decomposition<PDom> dec;
    std::vector<std::string> checks;
};

UniversalFamily universal_family(fp_t p, i64 m);

struct GenericAd {
    UP<PDom> ad;   // primitive gcd of the coefficients of F(X, Y)
    bool monic;    // leading Y-coefficient is the constant 1
};

GenericAd generic_additive_polynomial(const UniversalFamily& U);

struct SpecializeResult {
    CoverAnalysis analysis;
    UP<FDom> phi_ad;       // specialized generic Ad (monic by construction)
    bool equal;            // phi(ad_generic) == Ad_{phi(f)}
    bool degenerated;      // strict divisibility (flagged, never an error)
};

// Specialize every parameter and compare the specialized generic Ad with the
// directly computed one; degeneration is only allowed by strict divisibility.
SpecializeResult specialize(const UniversalFamily& U, const GenericAd& ad,
                            const std::vector<FElem>& values, const AnalyzeOptions& opt = {});

// symbolic closed form of the linearized-family Ad over F_p[t_0..t_{n-1}]
// along with the Ad computed by the generic decomposition (for cross-checks)
struct LinearizedSymbolic {
    UP<PDom> computed;
    UP<PDom> closed_form;
};
LinearizedSymbolic linearized_family_symbolic(fp_t p, unsigned n);

}  // namespace wildaut

#endif
