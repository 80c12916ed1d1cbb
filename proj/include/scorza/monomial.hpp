/*
   Copyright 2026 The scorza authors

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

#ifndef SCORZA_MONOMIAL_HPP
#define SCORZA_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "scorza/common.hpp"

namespace scorza {

// Exponent vectors are fixed-width byte arrays; every ring used here stays
// well below this cap (the largest lifted correspondence ring has 16
// variables including auxiliaries).
constexpr int kMaxVars = 24;

struct Monomial {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    bool is_one() const { return deg == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg == b.deg && a.e == b.e;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<uint8_t>(power);
    m.deg = static_cast<uint16_t>(power);
    return m;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(a.e[i] + b.e[i]);
    r.deg = static_cast<uint16_t>(a.deg + b.deg);
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, caller guarantees divisibility
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(b.e[i] - a.e[i]);
    r.deg = static_cast<uint16_t>(b.deg - a.deg);
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// 2 bits per variable (e >= 1, e >= 2): cheap necessary condition for
// divisibility, mask(a) & ~mask(b) == 0 whenever a | b
inline uint64_t divmask(const Monomial& m) {
    uint64_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i]) {
            mask |= 1ull << (2 * i);
            if (m.e[i] >= 2) mask |= 1ull << (2 * i + 1);
        }
    }
    return mask;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// ---------------------------------------------------------------------------
// Block product orders. The blocks partition the ring's variables and are
// compared left to right; each block is locally grevlex or lex over its
// listed variable sequence. Weights are an internal extension (used by the
// homogeneous saturation trick) and default to 1.
// ---------------------------------------------------------------------------

struct OrderBlock {
    enum class Kind { GRevLex, Lex };
    std::vector<int> vars;  // priority order within the block
    Kind kind = Kind::GRevLex;
};

struct MonomialOrder {
    std::vector<OrderBlock> blocks;
    std::vector<long> weights;  // per-variable; empty means all 1
    // fast path for the ubiquitous case: one grevlex block over 0..n-1
    bool simple = false;
    int simple_nvars = 0;

    void finalize(int nvars) {
        simple = false;
        if (blocks.size() == 1 && weights.empty() && blocks[0].kind == OrderBlock::Kind::GRevLex &&
            static_cast<int>(blocks[0].vars.size()) == nvars) {
            bool identity = true;
            for (int i = 0; i < nvars; ++i) identity = identity && blocks[0].vars[i] == i;
            if (identity) {
                simple = true;
                simple_nvars = nvars;
            }
        }
    }

    // comparison result: negative a<b, 0 equal, positive a>b
    int compare(const Monomial& a, const Monomial& b) const {
        if (simple) {
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            for (int v = simple_nvars - 1; v >= 0; --v)
                if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
            return 0;
        }
        for (const auto& blk : blocks) {
            long da = 0, db = 0;
            if (weights.empty()) {
                for (int v : blk.vars) {
                    da += a.e[v];
                    db += b.e[v];
                }
            } else {
                for (int v : blk.vars) {
                    da += weights[v] * a.e[v];
                    db += weights[v] * b.e[v];
                }
            }
            if (blk.kind == OrderBlock::Kind::GRevLex) {
                if (da != db) return da < db ? -1 : 1;
                for (size_t i = blk.vars.size(); i-- > 0;) {
                    int v = blk.vars[i];
                    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
                }
            } else {
                for (int v : blk.vars) {
                    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
                }
                if (da != db) return da < db ? -1 : 1;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    static MonomialOrder grevlex(int nvars) {
        MonomialOrder o;
        OrderBlock b;
        b.vars.resize(nvars);
        for (int i = 0; i < nvars; ++i) b.vars[i] = i;
        o.blocks.push_back(std::move(b));
        return o;
    }

    // grevlex over an explicit variable priority sequence
    static MonomialOrder grevlex_of(std::vector<int> vars) {
        MonomialOrder o;
        OrderBlock b;
        b.vars = std::move(vars);
        o.blocks.push_back(std::move(b));
        return o;
    }

    // [eliminated: grevlex][kept: grevlex]
    static MonomialOrder elimination(const std::vector<int>& eliminated, const std::vector<int>& kept) {
        MonomialOrder o;
        OrderBlock b1, b2;
        b1.vars = eliminated;
        b2.vars = kept;
        o.blocks.push_back(std::move(b1));
        o.blocks.push_back(std::move(b2));
        return o;
    }
};

}  // namespace scorza

#endif
