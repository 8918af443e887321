#include "orb/field.hpp"

#include <sstream>

namespace orb {

GaloisField GaloisField::prime(int p) {
    if (p < 2) throw OutOfRange("GaloisField: characteristic must be prime >= 2");
    GaloisField f;
    f.p = p;
    f.k = 1;
    return f;
}

GaloisField GaloisField::gf4() {
    GaloisField f;
    f.p = 2;
    f.k = 2;
    f.r1 = 1; // x^2 = x + 1
    f.r0 = 1;
    return f;
}

GaloisField GaloisField::gf9() {
    GaloisField f;
    f.p = 3;
    f.k = 2;
    f.r1 = 0; // x^2 = -1 = 2
    f.r0 = 2;
    return f;
}

GaloisField GaloisField::make(int p, int k) {
    if (k == 1) return prime(p);
    if (k == 2 && p == 2) return gf4();
    if (k == 2 && p == 3) return gf9();
    throw OutOfRange("GaloisField: only GF(p), GF(4) and GF(9) are supported");
}

namespace {
inline int mod(int a, int p) {
    a %= p;
    return a < 0 ? a + p : a;
}
} // namespace

int GaloisField::add(int a, int b) const {
    if (k == 1) return mod(a + b, p);
    return mod(a % p + b % p, p) + mod(a / p + b / p, p) * p;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::neg(int a) const {
    if (k == 1) return mod(-a, p);
    return mod(-(a % p), p) + mod(-(a / p), p) * p;
}

int GaloisField::mul(int a, int b) const {
    if (k == 1) return mod(a * b, p);
    int a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
    // (a0 + a1 x)(b0 + b1 x) with x^2 = r1 x + r0
    int c0 = mod(a0 * b0 + a1 * b1 * r0, p);
    int c1 = mod(a0 * b1 + a1 * b0 + a1 * b1 * r1, p);
    return c0 + c1 * p;
}

int GaloisField::inv(int a) const {
    if (a == 0) throw Error("GaloisField: inverse of zero");
    int acc = 1, e = q() - 2, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int GaloisField::from_int(int v) const { return mod(v, p); }

int GaloisField::primitive_element() const {
    int target = q() - 1;
    for (int a = 1; a < q(); ++a) {
        int x = a, o = 1;
        while (x != 1) {
            x = mul(x, a);
            ++o;
        }
        if (o == target) return a;
    }
    throw Error("GaloisField: no primitive element found");
}

std::string GaloisField::str(int a) const {
    if (k == 1) return std::to_string(a);
    return std::to_string(a % p) + "+" + std::to_string(a / p) + "x";
}

Matrix Matrix::identity(const GaloisField& f, int n) {
    Matrix m = zero_matrix(f, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::zero_matrix(const GaloisField& f, int n) {
    if (n < 1 || n > 4) throw OutOfRange("Matrix: dimension must be 1..4");
    Matrix m;
    m.f = f;
    m.n = n;
    m.e.fill(0);
    return m;
}

Matrix Matrix::from_rows(const GaloisField& f, const std::vector<std::vector<int>>& rows) {
    Matrix m = zero_matrix(f, int(rows.size()));
    for (int i = 0; i < m.n; ++i) {
        if (int(rows[i].size()) != m.n) throw Error("Matrix: ragged rows");
        for (int j = 0; j < m.n; ++j) {
            if (rows[i][j] < 0 || rows[i][j] >= f.q()) throw Error("Matrix: entry out of field");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::from_int_rows(const GaloisField& f, const std::vector<std::vector<int>>& rows) {
    Matrix m = zero_matrix(f, int(rows.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.set(i, j, f.from_int(rows[i][j]));
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    Matrix r = zero_matrix(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s = f.add(s, f.mul(at(i, k), o.at(k, j)));
            r.set(i, j, s);
        }
    return r;
}

Matrix Matrix::neg() const {
    Matrix r = *this;
    for (int i = 0; i < n * n; ++i) r.e[i] = f.neg(r.e[i]);
    return r;
}

int Matrix::det() const {
    // Gaussian elimination over the field
    Matrix a = *this;
    int d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) {
                int t = a.at(c, j);
                a.set(c, j, a.at(piv, j));
                a.set(piv, j, t);
            }
            d = f.neg(d);
        }
        d = f.mul(d, a.at(c, c));
        int pinv = f.inv(a.at(c, c));
        for (int r = c + 1; r < n; ++r) {
            int factor = f.mul(a.at(r, c), pinv);
            if (factor == 0) continue;
            for (int j = c; j < n; ++j) a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(c, j))));
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    Matrix a = *this;
    Matrix r = identity(f, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int row = c; row < n; ++row)
            if (a.at(row, c) != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw Error("Matrix: singular");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.e[size_t(c) * n + j], a.e[size_t(piv) * n + j]);
                std::swap(r.e[size_t(c) * n + j], r.e[size_t(piv) * n + j]);
            }
        int pinv = f.inv(a.at(c, c));
        for (int j = 0; j < n; ++j) {
            a.set(c, j, f.mul(a.at(c, j), pinv));
            r.set(c, j, f.mul(r.at(c, j), pinv));
        }
        for (int row = 0; row < n; ++row) {
            if (row == c || a.at(row, c) == 0) continue;
            int factor = a.at(row, c);
            for (int j = 0; j < n; ++j) {
                a.set(row, j, f.sub(a.at(row, j), f.mul(factor, a.at(c, j))));
                r.set(row, j, f.sub(r.at(row, j), f.mul(factor, r.at(c, j))));
            }
        }
    }
    return r;
}

std::vector<int> Matrix::apply(const std::vector<int>& col) const {
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] = f.add(out[i], f.mul(at(i, j), col[j]));
    return out;
}

std::string Matrix::key() const {
    std::string s;
    s.reserve(size_t(n) * n);
    for (int i = 0; i < n * n; ++i) s.push_back(char('0' + e[i]));
    return s;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        os << "[";
        for (int j = 0; j < n; ++j) os << f.str(at(i, j)) << (j + 1 < n ? "," : "");
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace orb
