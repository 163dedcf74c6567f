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

#ifndef WILDAUT_PARSE_HPP
#define WILDAUT_PARSE_HPP

#include "wildaut/poly.hpp"

namespace wildaut {

// Parse the canonical text form: terms "c*X^k" joined by '+'/'-', where c is
// an integer or a parenthesized polynomial in the generator symbol 'w'.
// Whitespace insensitive; syntax errors carry 1-based column numbers.
UP<FDom> parse_poly(const std::string& text, const Field* K, const std::string& var = "X");

}  // namespace wildaut

#endif
