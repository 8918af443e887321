#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orb/errors.hpp"

namespace orb {

/// GF(p) or GF(p^2) in the polynomial basis {1, x}. The degree-2 fields
/// use fixed irreducibles (x^2+x+1 for GF(4), x^2+1 for GF(9)), so element
/// indices a0 + a1*p are reproducible across runs.
struct GaloisField {
    int p = 2;
    int k = 1;
    int r0 = 0, r1 = 0; // x^2 = r1*x + r0

    static GaloisField prime(int p);
    static GaloisField gf4();
    static GaloisField gf9();
    static GaloisField make(int p, int k);

    int q() const { return k == 1 ? p : p * p; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int from_int(int v) const; // v mod p embedded as a constant
    int one() const { return 1; }
    int zero() const { return 0; }

    /// A fixed multiplicative generator (least index whose order is q-1).
    int primitive_element() const;

    std::string str(int a) const;
};

/// Square matrix over a GaloisField, n <= 4. Entries are field indices.
struct Matrix {
    GaloisField f;
    int n = 0;
    std::array<int, 16> e{}; // row-major

    static Matrix identity(const GaloisField& f, int n);
    static Matrix zero_matrix(const GaloisField& f, int n);
    static Matrix from_rows(const GaloisField& f, const std::vector<std::vector<int>>& rows);
    /// Integer entries taken mod p (convenient for transcribing -1 etc.).
    static Matrix from_int_rows(const GaloisField& f, const std::vector<std::vector<int>>& rows);

    int at(int i, int j) const { return e[size_t(i) * n + j]; }
    void set(int i, int j, int v) { e[size_t(i) * n + j] = v; }

    Matrix mul(const Matrix& other) const;
    Matrix neg() const;
    int det() const;
    Matrix inverse() const; // throws Error if singular
    std::vector<int> apply(const std::vector<int>& col) const;

    bool operator==(const Matrix& other) const { return n == other.n && e == other.e; }
    std::string key() const;
    std::string str() const;
};

struct MatrixHash {
    size_t operator()(const Matrix& m) const {
        size_t h = size_t(m.n);
        for (int i = 0; i < m.n * m.n; ++i) h = h * 1000003u + size_t(m.e[i]);
        return h;
    }
};

} // namespace orb
