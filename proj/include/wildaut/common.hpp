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

#ifndef WILDAUT_COMMON_HPP
#define WILDAUT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wildaut {

using fp_t = std::uint32_t;  // residue mod p
using i64 = std::int64_t;
using u64 = std::uint64_t;

// Error taxonomy mapped to CLI exit codes: degenerate_cover -> 2,
// cap_exceeded -> 3, everything else -> 1.
enum class ErrKind {
    usage,             // bad arguments, parse errors
    degenerate_cover,  // red(f) = 0 or conductor 0
    cap_exceeded,      // field degree / group order cap
    domain,            // precondition failed (e.g. not a type-2 modification)
    internal           // consistency assertion failed; indicates a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrKind kind;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// Internal consistency checks; these fire only on implementation bugs.
inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) fail(ErrKind::internal, "internal: " + msg);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// xorshift-based deterministic generator; all sampled checks derive from an
// explicit seed so reports are byte-reproducible.
struct Rng {
    u64 s;
    explicit Rng(u64 seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    u64 below(u64 n) { return n ? next() % n : 0; }
};

constexpr u64 kDefaultSeed = 0x57494c44415554ULL;  // fixed project-wide default

}  // namespace wildaut

#endif
