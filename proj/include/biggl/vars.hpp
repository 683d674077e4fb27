#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace biggl {

// Commutative variable families. The enum order fixes the global variable
// order used by every canonical serialization: variables of an earlier
// family are more significant, and within a family a smaller index is more
// significant (so y[1][1] > y[1][2] > y[2][1], P1 > P2 > c1 > c2, ...).
enum class Fam : std::uint8_t {
    Y,      // y[i][j]   coordinates on n x n matrices
    X,      // x[i][a]   coordinates on n x r matrices
    Dx,     // d[i][a]   derivative symbols, only inside operator keys
    T,      // t[i]      diagonal (Cartan) coordinates
    U,      // u         spectral parameter
    Ui,     // u[i]      chain spectral parameters
    V,      // v
    W,      // w
    Z,      // z         shift parameter
    Pgen,   // P1, P2, ...   presentation generators (power-sum type)
    Mgen,   // M1, M2, ...   presentation generators (derived type)
    C,      // c[k]      invariant scalars
    Psym,   // p[k]      power-sum symbols of symmetric-function expressions
    Esym,   // e[k]      elementary symbols
    Th,     // v[k]      placeholder variables of basis-change polynomials
    Alpha,  // a[i]      generic scalar symbols used in identities/tests
    Xlet,   // X[s]      letters of a finite symmetric-function alphabet
    Pab,    // p[a][b]   polarized power sums, b in {0,1}
};

// A variable is a packed (family, index, index) triple. Comparison of the
// packed code realizes the global variable order described above.
struct Var {
    std::uint32_t code = 0;

    Var() = default;
    Var(Fam f, int i, int j) {
        if (i < 0 || i > 0xfff || j < 0 || j > 0xfff)
            throw std::out_of_range("Var: index out of range");
        code = (std::uint32_t(f) << 24) | (std::uint32_t(i) << 12) | std::uint32_t(j);
    }

    Fam fam() const { return Fam(code >> 24); }
    int i() const { return int((code >> 12) & 0xfff); }
    int j() const { return int(code & 0xfff); }

    bool operator==(const Var& o) const { return code == o.code; }
    bool operator!=(const Var& o) const { return code != o.code; }
    bool operator<(const Var& o) const { return code < o.code; }

    std::string name() const;
};

inline Var yv(int i, int j) { return Var(Fam::Y, i, j); }
inline Var xv(int i, int a) { return Var(Fam::X, i, a); }
inline Var dv(int i, int a) { return Var(Fam::Dx, i, a); }
inline Var tv(int i) { return Var(Fam::T, i, 0); }
inline Var uv() { return Var(Fam::U, 0, 0); }
inline Var uiv(int i) { return Var(Fam::Ui, i, 0); }
inline Var vv() { return Var(Fam::V, 0, 0); }
inline Var wv() { return Var(Fam::W, 0, 0); }
inline Var zv() { return Var(Fam::Z, 0, 0); }
inline Var cv(int k) { return Var(Fam::C, k, 0); }
inline Var pv(int k) { return Var(Fam::Psym, k, 0); }
inline Var esv(int k) { return Var(Fam::Esym, k, 0); }
inline Var thv(int k) { return Var(Fam::Th, k, 0); }
inline Var alv(int i) { return Var(Fam::Alpha, i, 0); }
inline Var pgen(int k) { return Var(Fam::Pgen, k, 0); }
inline Var mgen(int k) { return Var(Fam::Mgen, k, 0); }
inline Var xlet(int s) { return Var(Fam::Xlet, s, 0); }
inline Var pab(int a, int b) { return Var(Fam::Pab, a, b); }

inline std::string Var::name() const {
    auto two = [&](const char* base) {
        return std::string(base) + "[" + std::to_string(i()) + "][" + std::to_string(j()) + "]";
    };
    auto one = [&](const char* base) {
        return std::string(base) + "[" + std::to_string(i()) + "]";
    };
    switch (fam()) {
        case Fam::Y: return two("y");
        case Fam::X: return two("x");
        case Fam::Dx: return two("d");
        case Fam::T: return one("t");
        case Fam::U: return "u";
        case Fam::Ui: return one("u");
        case Fam::V: return "v";
        case Fam::W: return "w";
        case Fam::Z: return "z";
        case Fam::Pgen: return "P" + std::to_string(i());
        case Fam::Mgen: return "M" + std::to_string(i());
        case Fam::C: return one("c");
        case Fam::Psym: return one("p");
        case Fam::Esym: return one("e");
        case Fam::Th: return one("v");
        case Fam::Alpha: return one("a");
        case Fam::Xlet: return one("X");
        case Fam::Pab: return two("p");
    }
    return "?";
}

}  // namespace biggl
