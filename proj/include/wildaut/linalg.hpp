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

#ifndef WILDAUT_LINALG_HPP
#define WILDAUT_LINALG_HPP

#include <optional>
#include <vector>

#include "wildaut/common.hpp"

namespace wildaut {

// Row-major matrix over F_p.
struct FpMat {
    fp_t p = 2;
    size_t rows = 0, cols = 0;
    std::vector<fp_t> a;

    FpMat() = default;
    FpMat(fp_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    fp_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    fp_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<size_t> rref(FpMat& m);

// Deterministic kernel basis (one vector per free column, ascending column
// index; each vector has a 1 in its free coordinate).
std::vector<std::vector<fp_t>> kernel_basis(FpMat m);

// Particular solution of m x = rhs with free variables set to 0, or nullopt
// when the system is inconsistent.
std::optional<std::vector<fp_t>> solve(FpMat m, const std::vector<fp_t>& rhs);

}  // namespace wildaut

#endif
