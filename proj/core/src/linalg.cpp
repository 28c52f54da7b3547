#include "veccirc/linalg.hpp"

#include <stdexcept>

namespace veccirc {

namespace {

void require_same_field(const FieldRef& a, const FieldRef& b, const char* what) {
    if (!same_field(a, b)) throw std::invalid_argument(std::string("field mismatch in ") + what);
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string("length mismatch in ") + what + ": " +
                                    std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

FieldVector::FieldVector(FieldRef field, std::vector<FieldElement> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("null field");
    for (const FieldElement c : coords_)
        if (!field_->is_element(c))
            throw std::out_of_range("vector coordinate " + std::to_string(c) + " out of range for " + field_->name());
}

FieldVector FieldVector::zero(FieldRef field, std::size_t n) {
    return FieldVector(std::move(field), std::vector<FieldElement>(n, 0));
}

FieldVector FieldVector::unit(FieldRef field, std::size_t n, std::size_t pos) {
    if (pos >= n) throw std::invalid_argument("unit vector position out of range");
    std::vector<FieldElement> c(n, 0);
    c[pos] = 1;
    return FieldVector(std::move(field), std::move(c));
}

bool FieldVector::operator==(const FieldVector& other) const {
    return same_field(field_, other.field_) && coords_ == other.coords_;
}

FieldVector vec_add(const FieldVector& a, const FieldVector& b) {
    require_same_field(a.field(), b.field(), "vec_add");
    require_same_size(a.size(), b.size(), "vec_add");
    const Field& f = *a.field();
    std::vector<FieldElement> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
    return FieldVector(a.field(), std::move(c));
}

FieldVector vec_scalar(FieldElement s, const FieldVector& v) {
    const Field& f = *v.field();
    std::vector<FieldElement> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = f.mul(s, v[i]);
    return FieldVector(v.field(), std::move(c));
}

ShiftVector::ShiftVector(FieldRef field, std::vector<FieldElement> coords)
    : ShiftVector(FieldVector(std::move(field), std::move(coords))) {}

ShiftVector::ShiftVector(FieldVector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) throw std::invalid_argument("shift vector must have length at least 1");
}

FieldMatrix::FieldMatrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("null field");
}

FieldMatrix::FieldMatrix(FieldRef field, std::size_t rows, std::size_t cols,
                         std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("null field");
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match matrix shape");
    for (const FieldElement c : a_)
        if (!field_->is_element(c))
            throw std::out_of_range("matrix entry " + std::to_string(c) + " out of range for " + field_->name());
}

FieldMatrix FieldMatrix::identity(FieldRef field, std::size_t n) {
    FieldMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, FieldElement v) {
    if (!field_->is_element(v))
        throw std::out_of_range("matrix entry " + std::to_string(v) + " out of range for " + field_->name());
    a_[r * cols_ + c] = v;
}

FieldVector FieldMatrix::row(std::size_t r) const {
    std::vector<FieldElement> c(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return FieldVector(field_, std::move(c));
}

void FieldMatrix::set_row(std::size_t r, const FieldVector& v) {
    require_same_size(v.size(), cols_, "set_row");
    for (std::size_t j = 0; j < cols_; ++j) a_[r * cols_ + j] = v[j];
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
    return same_field(field_, other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           a_ == other.a_;
}

FieldVector vector_cyclic_shift(const ShiftVector& lambda, const FieldVector& v) {
    require_same_field(lambda.field(), v.field(), "vector_cyclic_shift");
    require_same_size(lambda.size(), v.size(), "vector_cyclic_shift");
    const Field& f = *v.field();
    const std::size_t n = v.size();
    const FieldElement last = v[n - 1];
    std::vector<FieldElement> out(n);
    out[0] = f.mul(last, lambda[0]);
    for (std::size_t i = 1; i < n; ++i) out[i] = f.add(v[i - 1], f.mul(last, lambda[i]));
    return FieldVector(v.field(), std::move(out));
}

FieldMatrix vec_circulant(const ShiftVector& lambda, const FieldVector& a) {
    require_same_field(lambda.field(), a.field(), "vec_circulant");
    require_same_size(lambda.size(), a.size(), "vec_circulant");
    const std::size_t n = a.size();
    FieldMatrix m(a.field(), n, n);
    FieldVector row = a;
    m.set_row(0, row);
    for (std::size_t i = 1; i < n; ++i) {
        row = vector_cyclic_shift(lambda, row);
        m.set_row(i, row);
    }
    return m;
}

FieldMatrix companion_matrix(const ShiftVector& lambda) {
    const std::size_t n = lambda.size();
    FieldMatrix t(lambda.field(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) t.set(i, i + 1, 1);
    for (std::size_t j = 0; j < n; ++j) t.set(n - 1, j, lambda[j]);
    return t;
}

bool is_companion_invertible(const ShiftVector& lambda) { return lambda[0] != 0; }

bool is_vector_circulant(const ShiftVector& lambda, const FieldMatrix& m) {
    require_same_field(lambda.field(), m.field(), "is_vector_circulant");
    if (m.rows() != lambda.size() || m.cols() != lambda.size())
        throw std::invalid_argument("matrix shape does not match the shift vector length");
    for (std::size_t i = 0; i + 1 < m.rows(); ++i)
        if (!(m.row(i + 1) == vector_cyclic_shift(lambda, m.row(i)))) return false;
    return true;
}

FieldVector basis_decomposition(const ShiftVector& lambda, const FieldMatrix& m) {
    if (!is_vector_circulant(lambda, m))
        throw std::domain_error("matrix is not vector-circulant for the given shift vector");
    return m.row(0);
}

FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a.field(), b.field(), "mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in mat_add");
    const Field& f = *a.field();
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f.add(a.at(i, j), b.at(i, j)));
    return out;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a.field(), b.field(), "mat_mul");
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
    const Field& f = *a.field();
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
        }
    return out;
}

FieldMatrix mat_scalar(FieldElement c, const FieldMatrix& a) {
    const Field& f = *a.field();
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f.mul(c, a.at(i, j)));
    return out;
}

FieldMatrix mat_pow(const FieldMatrix& a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow requires a square matrix");
    FieldMatrix result = FieldMatrix::identity(a.field(), a.rows());
    FieldMatrix base = a;
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return result;
}

FieldVector vec_mat_mul(const FieldVector& v, const FieldMatrix& m) {
    require_same_field(v.field(), m.field(), "vec_mat_mul");
    require_same_size(v.size(), m.rows(), "vec_mat_mul");
    const Field& f = *v.field();
    std::vector<FieldElement> out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
    }
    return FieldVector(v.field(), std::move(out));
}

std::size_t mat_rank(const FieldMatrix& m) {
    const Field& f = *m.field();
    std::vector<std::vector<FieldElement>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i).coords();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && rows[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElement scale = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < m.cols(); ++j) rows[rank][j] = f.mul(scale, rows[rank][j]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const FieldElement factor = rows[i][col];
            for (std::size_t j = col; j < m.cols(); ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace veccirc
