// Vectors and dense matrices over a Field, the lambda-vector-cyclic shift,
// vector-circulant matrices and the companion matrix realizing the shift.
//
// The shift sends (v_0, ..., v_{n-1}) to (0, v_0, ..., v_{n-2}) + v_{n-1} * lambda,
// i.e. a right shift whose overflowing last coordinate is scaled into lambda
// and added back. lambda = (1, 0, ..., 0) is the classical rotation,
// lambda = (c, 0, ..., 0) the c-twistulant variant.
//
// All types are immutable values; operations are pure functions.

#ifndef VECCIRC_LINALG_HPP
#define VECCIRC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "veccirc/field.hpp"

namespace veccirc {

class FieldVector {
public:
    FieldVector(FieldRef field, std::vector<FieldElement> coords);

    static FieldVector zero(FieldRef field, std::size_t n);
    /// Standard basis vector with a 1 at `pos` (0-based).
    static FieldVector unit(FieldRef field, std::size_t n, std::size_t pos);

    std::size_t size() const { return coords_.size(); }
    FieldElement operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldRef& field() const { return field_; }

    bool operator==(const FieldVector& other) const;

private:
    FieldRef field_;
    std::vector<FieldElement> coords_;
};

FieldVector vec_add(const FieldVector& a, const FieldVector& b);
FieldVector vec_scalar(FieldElement c, const FieldVector& v);

/// The shift vector lambda = (lambda_0, ..., lambda_{n-1}), n >= 1.
class ShiftVector {
public:
    ShiftVector(FieldRef field, std::vector<FieldElement> coords);
    explicit ShiftVector(FieldVector coords);

    std::size_t size() const { return coords_.size(); }
    FieldElement operator[](std::size_t i) const { return coords_[i]; }
    const FieldVector& coords() const { return coords_; }
    const FieldRef& field() const { return coords_.field(); }

    bool operator==(const ShiftVector& other) const { return coords_ == other.coords_; }

private:
    FieldVector coords_;
};

class FieldMatrix {
public:
    /// Zero-filled rows x cols matrix.
    FieldMatrix(FieldRef field, std::size_t rows, std::size_t cols);
    /// Row-major entries, size must be rows*cols.
    FieldMatrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static FieldMatrix identity(FieldRef field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldRef& field() const { return field_; }

    FieldElement at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v);

    FieldVector row(std::size_t r) const;
    void set_row(std::size_t r, const FieldVector& v);

    bool operator==(const FieldMatrix& other) const;

private:
    FieldRef field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// One application of the lambda-vector-cyclic shift.
FieldVector vector_cyclic_shift(const ShiftVector& lambda, const FieldVector& v);

/// The n x n vector-circulant matrix whose row 0 is `a` and whose row i+1 is
/// the shift of row i.
FieldMatrix vec_circulant(const ShiftVector& lambda, const FieldVector& a);

/// Companion matrix of the shift: superdiagonal of ones, last row lambda.
/// Right multiplication by it realizes the shift on row vectors.
FieldMatrix companion_matrix(const ShiftVector& lambda);

/// True iff lambda_0 != 0, which is exactly when the companion matrix is
/// invertible (it row-reduces to diag(lambda_0, 1, ..., 1)).
bool is_companion_invertible(const ShiftVector& lambda);

/// True iff every row i+1 of M is the shift of row i, i.e. M is
/// lambda-vector-circulant. M must be n x n over lambda's field.
bool is_vector_circulant(const ShiftVector& lambda, const FieldMatrix& m);

/// First row of a lambda-vector-circulant matrix; the unique coefficient
/// vector a with M = sum_i a_i * cir(E_{i+1}). Rejects matrices that are not
/// vector-circulant for lambda.
FieldVector basis_decomposition(const ShiftVector& lambda, const FieldMatrix& m);

FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_scalar(FieldElement c, const FieldMatrix& a);
/// A^e with A square and A^0 = I.
FieldMatrix mat_pow(const FieldMatrix& a, std::uint64_t e);

/// Row vector times matrix.
FieldVector vec_mat_mul(const FieldVector& v, const FieldMatrix& m);

/// Rank by Gaussian elimination over the field.
std::size_t mat_rank(const FieldMatrix& m);

}  // namespace veccirc

#endif
