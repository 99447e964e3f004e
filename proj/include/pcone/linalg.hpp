#pragma once

#include "pcone/rational.hpp"

#include <vector>

namespace pcone {

// Exact n-vector over the rationals. The ambient dimension is a runtime
// value; every operation checks it.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

std::string to_string(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
Vector negate(const Vector& v);
Vector zero_vector(int dim);
Vector unit_vector(int dim, int axis);
bool is_zero(const Vector& v);

/// Row rank by exact Gaussian elimination.
int rank(const Matrix& rows);

/// Basis of {x : <row, x> = 0 for every row}, as exact vectors.
std::vector<Vector> nullspace(const Matrix& rows, int dim);

Rational determinant(Matrix m);

// Invertible linear map on R^n. Membership in GL(n) is checked at
// construction by exact elimination (pivot on the first nonzero entry),
// so every instance carries its inverse.
class LinMap {
public:
    /// Throws std::invalid_argument unless `entries` is square and invertible.
    explicit LinMap(Matrix entries);

    static LinMap identity(int n);

    int dim() const { return static_cast<int>(entries_.size()); }
    const Matrix& entries() const { return entries_; }
    const Rational& det() const { return det_; }

    Vector apply(const Vector& x) const;

    LinMap inverse() const;
    LinMap transpose() const;
    LinMap inverse_transpose() const;

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.entries_ == b.entries_;
    }

private:
    LinMap(Matrix entries, Matrix inverse, Rational det);

    Matrix entries_;
    Matrix inverse_;
    Rational det_;
};

}  // namespace pcone
