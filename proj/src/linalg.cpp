#include "pcone/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pcone {

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

namespace {

void check_same_dim(const Vector& a, const Vector& b, const char* op) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

}  // namespace

Rational dot(const Vector& a, const Vector& b) {
    check_same_dim(a, b, "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector add(const Vector& a, const Vector& b) {
    check_same_dim(a, b, "add");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector subtract(const Vector& a, const Vector& b) {
    check_same_dim(a, b, "subtract");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Rational& s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Vector negate(const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim), Rational(0)); }

Vector unit_vector(int dim, int axis) {
    Vector r = zero_vector(dim);
    r.at(static_cast<std::size_t>(axis)) = 1;
    return r;
}

bool is_zero(const Vector& v) {
    for (const auto& c : v) {
        if (c != 0) return false;
    }
    return true;
}

namespace {

// Reduces `rows` in place to row echelon form, pivoting on the first
// nonzero entry of each remaining row. Returns the pivot columns.
std::vector<int> echelonize(Matrix& rows) {
    std::vector<int> pivot_cols;
    if (rows.empty()) return pivot_cols;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv_pivot = Rational(1) / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv_pivot;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank(const Matrix& rows) {
    Matrix m = rows;
    return static_cast<int>(echelonize(m).size());
}

std::vector<Vector> nullspace(const Matrix& rows, int dim) {
    Matrix m = rows;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("nullspace: row dimension mismatch");
        }
    }
    const std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Vector> basis;
    for (int free_col = 0; free_col < dim; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        Vector v = zero_vector(dim);
        v[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free_col)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rational inv_pivot = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] * inv_pivot;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

LinMap::LinMap(Matrix entries, Matrix inverse, Rational det)
    : entries_(std::move(entries)), inverse_(std::move(inverse)), det_(std::move(det)) {}

LinMap::LinMap(Matrix entries) {
    const std::size_t n = entries.size();
    for (const auto& row : entries) {
        if (row.size() != n) throw std::invalid_argument("LinMap: matrix not square");
    }
    // Gauss-Jordan on [entries | I], pivoting on the first nonzero entry.
    Matrix work = entries;
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv[i] = zero_vector(static_cast<int>(n));
        inv[i][i] = 1;
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && work[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("LinMap: singular matrix");
        if (p != c) {
            std::swap(work[p], work[c]);
            std::swap(inv[p], inv[c]);
            det = -det;
        }
        det *= work[c][c];
        const Rational inv_pivot = Rational(1) / work[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            work[c][j] *= inv_pivot;
            inv[c][j] *= inv_pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work[i][c] == 0) continue;
            const Rational f = work[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    entries_ = std::move(entries);
    inverse_ = std::move(inv);
    det_ = std::move(det);
}

LinMap LinMap::identity(int n) {
    Matrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = unit_vector(n, i);
    return LinMap(m, m, Rational(1));
}

Vector LinMap::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != dim()) {
        throw std::invalid_argument("LinMap::apply: dimension mismatch");
    }
    Vector y = zero_vector(dim());
    for (std::size_t i = 0; i < entries_.size(); ++i) y[i] = dot(entries_[i], x);
    return y;
}

LinMap LinMap::inverse() const {
    return LinMap(inverse_, entries_, Rational(1) / det_);
}

LinMap LinMap::transpose() const {
    const std::size_t n = entries_.size();
    Matrix t(n, zero_vector(static_cast<int>(n)));
    Matrix ti(n, zero_vector(static_cast<int>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t[j][i] = entries_[i][j];
            ti[j][i] = inverse_[i][j];
        }
    }
    return LinMap(std::move(t), std::move(ti), det_);
}

LinMap LinMap::inverse_transpose() const { return inverse().transpose(); }

}  // namespace pcone
