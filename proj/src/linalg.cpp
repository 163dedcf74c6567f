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

#include "wildaut/linalg.hpp"

#include <algorithm>

namespace wildaut {

namespace {
fp_t fpinv(fp_t a, fp_t p) {
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    check_internal(r == 1, "fpinv of non-unit");
    return static_cast<fp_t>((t % p + p) % p);
}
}  // namespace

std::vector<size_t> rref(FpMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        fp_t inv = fpinv(m.at(row, col), m.p);
        for (size_t j = col; j < m.cols; ++j)
            m.at(row, j) = static_cast<fp_t>((static_cast<u64>(m.at(row, j)) * inv) % m.p);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            fp_t f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j) {
                u64 v = m.at(i, j) + static_cast<u64>(m.p - f) * m.at(row, j);
                m.at(i, j) = static_cast<fp_t>(v % m.p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<fp_t>> kernel_basis(FpMat m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<fp_t>> basis;
    for (size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<fp_t> v(m.cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            fp_t coef = m.at(r, fc);
            v[pivots[r]] = coef ? static_cast<fp_t>(m.p - coef) : 0;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<fp_t>> solve(FpMat m, const std::vector<fp_t>& rhs) {
    check_internal(rhs.size() == m.rows, "solve: rhs size mismatch");
    FpMat aug(m.p, m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i] % m.p;
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
    std::vector<fp_t> x(m.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

}  // namespace wildaut
