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

#ifndef WILDAUT_ANALYSIS_HPP
#define WILDAUT_ANALYSIS_HPP

#include "wildaut/group.hpp"
#include "wildaut/rootspace.hpp"

namespace wildaut {

struct AnalyzeOptions {
    u64 seed = kDefaultSeed;
    u64 max_group_order = 0;       // 0: p^13
    u64 max_enum = u64(1) << 20;   // root enumeration cap
    bool oracle_sweep = false;     // arbitrate the full root set against the oracle
};

// Everything the analysis of one cover produces. The cocycle stored in
// `group` is the automorphism-composition cocycle: the polynomial part
// P(X,y) + P(X+y,z) - P(X,y+z) plus the constant correction
// kappa_y + kappa_z - kappa_{y+z}, where kappa_y is the canonical solution of
// T^p - T = -red(y) (the W-translation constant of the lift sigma_y). The
// correction is symmetric, so epsilon and s match the polynomial formulas.
struct CoverAnalysis {
    const Field* base = nullptr;
    UP<FDom> input;
    UP<FDom> red;
    UP<FDom> witness;
    i64 m = 0;
    i64 genus = 0;
    Decomposition<FDom> dec;
    UP<FDom> ad;
    unsigned M = 1;
    const Field* big = nullptr;
    RootSpace rs;
    const Field* work = nullptr;        // kappa field: big or its degree-p step
    BP<FDom> p_work;                    // P_f over the work field
    std::vector<FElem> roots_work;      // roots embedded into work
    std::vector<FElem> kappa;           // per root index
    WildGroup group;
    GroupProfile prof;
    std::vector<std::string> checks;

    fp_t gamma_of(size_t i, size_t j) const { return group.gam(i, j); }
    fp_t eps_of(size_t i, size_t j) const { return group.eps(i, j); }
    fp_t s_of(size_t i) const { return group.svec[i]; }
    size_t root_index(const FElem& y_in_big) const { return rs.index_of_elem(y_in_big); }
};

CoverAnalysis analyze(const UP<FDom>& f, const AnalyzeOptions& opt = {});

// Single-pair operations with the full constant-in-X assertions; arguments
// live in the splitting field of the analysis.
fp_t gamma_op(const CoverAnalysis& A, const FElem& y, const FElem& z);
fp_t epsilon_op(const CoverAnalysis& A, const FElem& y, const FElem& z);
fp_t power_constant_op(const CoverAnalysis& A, const FElem& y);

// Commutator pairing evaluated from a polynomial P embedded in the field of
// the arguments: eps(y,z) = P(X,y)+P(X+y,z)-P(X,z)-P(X+z,y), constant in X.
fp_t epsilon_at(const BP<FDom>& P, const FElem& y, const FElem& z, bool assert_constant = false);
// s(y) = sum_i P(X+iy, y), constant in X.
fp_t s_at(const BP<FDom>& P, const FElem& y, bool assert_constant = false);

// s as a polynomial identity: sum_i P(X+iY, Y) reduced mod Ad(Y); the
// X-dependence must vanish after reduction.
UP<FDom> s_polynomial(const CoverAnalysis& A);

// epsilon as a reduced polynomial identity in (Y, Z) modulo (Ad(Y), Ad(Z)).
std::map<std::pair<i64, i64>, FElem> epsilon_polynomial(const CoverAnalysis& A);

// ---- modifications ----

struct ModifyResult {
    CoverAnalysis result;          // analysis of the modified cover
    UP<FDom> divisor;              // the asserted divisor of the new Ad
    std::vector<std::string> checks;
};

// Type 1: f -> red(f o S) for S additive separable. Asserts
// Ad_f(S(Y)) | Ad and the compatibility eps_f(S(y),S(z)) = eps(y,z).
ModifyResult modify_type1(const UP<FDom>& f, const UP<FDom>& S, const AnalyzeOptions& opt = {});

// Type 2: f -> f+g under Ad_{red g} | Ad_{red f}. Asserts
// Ad_{red g} | Ad_{red(f+g)} and additivity of eps on Z(Ad_{red g}).
ModifyResult modify_type2(const UP<FDom>& f, const UP<FDom>& g, const AnalyzeOptions& opt = {});

}  // namespace wildaut

#endif
