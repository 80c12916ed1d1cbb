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

#ifndef SCORZA_DATA_HPP
#define SCORZA_DATA_HPP

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scorza/aronhold.hpp"

namespace scorza {

// Frozen data files: the 25-monomial Aronhold form and the generic Scorza
// covariant. Both are bit-stable outputs of the symbolic pfaffian
// construction; they ship beside the binary and are checksum-verified on
// load.

inline uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string serialize_rational_poly(const Polynomial<Rational>& f, const std::string& tag) {
    std::ostringstream os;
    os << "scorza-data " << tag << "\n";
    os << "vars";
    for (const auto& v : f.ring->vars) os << " " << v;
    os << "\nterms " << f.ts.size() << "\n";
    for (const auto& t : f.ts) {
        os << t.c;
        for (int v = 0; v < f.ring->nvars(); ++v) os << " " << static_cast<int>(t.m.e[v]);
        os << "\n";
    }
    return os.str();
}

inline Polynomial<Rational> deserialize_rational_poly(const std::string& text, const std::string& tag,
                                                      const RingPtr<Rational>& ring) {
    std::istringstream is(text);
    std::string word;
    is >> word;
    if (word != "scorza-data") usage_error("SyntaxError", "bad data file header");
    is >> word;
    if (word != tag) usage_error("SyntaxError", "data file tag mismatch: " + word);
    is >> word;
    if (word != "vars") usage_error("SyntaxError", "bad data file vars line");
    for (int i = 0; i < ring->nvars(); ++i) {
        is >> word;
        if (word != ring->vars[i]) usage_error("SyntaxError", "data file variable mismatch");
    }
    is >> word;
    if (word != "terms") usage_error("SyntaxError", "bad data file terms line");
    size_t n;
    is >> n;
    std::vector<Term<Rational>> ts;
    ts.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::string coeff;
        is >> coeff;
        Rational c(coeff);
        c.canonicalize();
        Monomial m;
        int deg = 0;
        for (int v = 0; v < ring->nvars(); ++v) {
            int e;
            is >> e;
            m.e[v] = static_cast<uint8_t>(e);
            deg += e;
        }
        m.deg = static_cast<uint16_t>(deg);
        ts.push_back({m, c});
    }
    return poly_from_terms(ring, std::move(ts));
}

inline std::string data_directory() {
    if (const char* env = std::getenv("SCORZA_DATA_DIR")) return env;
#ifdef SCORZA_DATA_DIR
    return SCORZA_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("SyntaxError", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// checksums file: one "name hex" pair per line
inline bool verify_checksum(const std::string& dir, const std::string& name, const std::string& content) {
    std::string sums = read_file(dir + "/CHECKSUMS");
    std::istringstream is(sums);
    std::string n, hex;
    while (is >> n >> hex) {
        if (n == name) {
            std::ostringstream expect;
            expect << std::hex << fnv1a(content);
            return expect.str() == hex;
        }
    }
    return false;
}

inline Polynomial<Rational> load_aronhold_form(const std::string& dir = data_directory()) {
    std::string content = read_file(dir + "/aronhold_form.txt");
    if (!verify_checksum(dir, "aronhold_form.txt", content))
        usage_error("SyntaxError", "checksum mismatch for aronhold_form.txt");
    return deserialize_rational_poly(content, "aronhold-form", aronhold_coefficient_ring());
}

inline Polynomial<Rational> load_scorza_covariant(const std::string& dir = data_directory()) {
    std::string content = read_file(dir + "/scorza_covariant.txt");
    if (!verify_checksum(dir, "scorza_covariant.txt", content))
        usage_error("SyntaxError", "checksum mismatch for scorza_covariant.txt");
    return deserialize_rational_poly(content, "scorza-covariant", generic_quartic_ring());
}

// base-locus generators, loading the frozen covariant when available and
// regenerating it otherwise
inline const std::vector<Polynomial<Rational>>& scorza_base_locus() {
    static std::vector<Polynomial<Rational>> gens = [] {
        Polynomial<Rational> cov;
        try {
            cov = load_scorza_covariant();
        } catch (const Error&) {
            cov = generate_scorza_covariant();
        }
        return scorza_base_locus_gens(cov);
    }();
    return gens;
}

}  // namespace scorza

#endif
