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

#include "wildaut/parse.hpp"

namespace wildaut {

namespace {

constexpr i64 kMaxExponent = 1'000'000'000;

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    [[noreturn]] void fail_at(const std::string& msg) {
        fail(ErrKind::usage,
             "syntax error at column " + std::to_string(i + 1) + ": " + msg);
    }
    i64 integer() {
        skip_ws();
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail_at("expected a number");
        i64 v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > kMaxExponent) fail_at("number too large");
            ++i;
        }
        return v;
    }
};

// polynomial in 'w' with integer coefficients, e.g. w^2+2*w+1
FElem parse_w_poly(Cursor& c, const Field* K) {
    FElem acc = K->zero();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') sign = (c.take() == '-') ? -1 : 1;
    while (true) {
        i64 coef = 1;
        bool have_coef = false;
        if (isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = c.integer();
            have_coef = true;
            if (c.peek() == '*') c.take();
        }
        i64 wexp = 0;
        if (c.peek() == 'w') {
            c.take();
            wexp = 1;
            if (c.peek() == '^') {
                c.take();
                wexp = c.integer();
            }
            if (K->e == 1) c.fail_at("generator symbol 'w' in a prime field");
        } else if (!have_coef) {
            c.fail_at("expected a coefficient or 'w'");
        }
        FElem term = K->from_int(sign * coef);
        if (wexp) term = K->mul(term, K->pow(K->gen(), static_cast<u64>(wexp)));
        acc = K->add(acc, term);
        char nx = c.peek();
        if (nx == '+' || nx == '-') {
            sign = (c.take() == '-') ? -1 : 1;
            continue;
        }
        break;
    }
    return acc;
}

}  // namespace

UP<FDom> parse_poly(const std::string& text, const Field* K, const std::string& var) {
    check_internal(var.size() == 1, "single-character variable expected");
    char X = var[0];
    Cursor c{text, 0};
    UP<FDom> out = up_zero(FDom{K});
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') sign = (c.take() == '-') ? -1 : 1;
    if (c.eof()) c.fail_at("empty polynomial");
    while (true) {
        FElem coef = K->from_int(sign);
        bool have_coef = false;
        if (c.peek() == '(') {
            c.take();
            FElem w = parse_w_poly(c, K);
            if (c.peek() != ')') c.fail_at("expected ')'");
            c.take();
            coef = K->mul(coef, w);
            have_coef = true;
        } else if (isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = K->mul(coef, K->from_int(c.integer()));
            have_coef = true;
        } else if (c.peek() == 'w') {
            c.fail_at("field-element literals must be parenthesized, e.g. (w^2+1)");
        }
        if (have_coef && c.peek() == '*') c.take();
        i64 exp = 0;
        if (c.peek() == X) {
            c.take();
            exp = 1;
            if (c.peek() == '^') {
                c.take();
                exp = c.integer();
            }
        } else if (!have_coef) {
            c.fail_at(std::string("expected a term (coefficient or '") + X + "')");
        }
        up_add_term(out, exp, coef);
        if (c.eof()) break;
        char nx = c.peek();
        if (nx == '+' || nx == '-') {
            sign = (c.take() == '-') ? -1 : 1;
            if (c.eof()) c.fail_at("trailing operator");
            continue;
        }
        c.fail_at("unexpected character");
    }
    return out;
}

}  // namespace wildaut
