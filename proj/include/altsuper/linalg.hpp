#pragma once

#include <optional>
#include <vector>

#include "altsuper/field.hpp"

namespace altsuper {

/// Dense matrix over an exact field, row-major.
struct Mat {
    FieldPtr F;
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(FieldPtr f, int r, int c);
    static Mat identity(const FieldPtr& f, int n);

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transposed() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // column-vector action
};

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m);
int rank(Mat m);
/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Scalar>> kernel(const Mat& m);
/// One solution of A x = b, if any.
std::optional<std::vector<Scalar>> solve(const Mat& A, const std::vector<Scalar>& b);
Scalar det(Mat m);
bool invertible(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Characteristic polynomial coefficients, low degree first, monic
/// (division-free Berkowitz, valid in every characteristic).
std::vector<Scalar> charpoly(const Mat& m);

/// Canonical echelon-form basis of a subspace of F^ambient. Rows are kept in
/// reduced echelon form with pivots normalized to 1, so equal subspaces
/// compare equal structurally.
class Subspace {
public:
    Subspace(FieldPtr f, int ambient);

    /// Reduces v against the basis and inserts the remainder if nonzero.
    /// Returns true when the dimension grew.
    bool insert(const std::vector<Scalar>& v);
    bool contains(const std::vector<Scalar>& v) const;
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
    const FieldPtr& field() const { return F_; }
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

    static Subspace full(const FieldPtr& f, int ambient);
    static Subspace span(const FieldPtr& f, int ambient,
                         const std::vector<std::vector<Scalar>>& vecs);

private:
    FieldPtr F_;
    int ambient_;
    std::vector<std::vector<Scalar>> rows_;  // RREF, sorted by pivot
    std::vector<int> pivots_;
};

std::vector<Scalar> vec_add(const FieldPtr& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_sub(const FieldPtr& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_scale(const FieldPtr& F, const Scalar& s, const std::vector<Scalar>& a);
bool vec_is_zero(const FieldPtr& F, const std::vector<Scalar>& a);
std::vector<Scalar> vec_zero(const FieldPtr& F, int n);
std::vector<Scalar> vec_unit(const FieldPtr& F, int n, int i);

}  // namespace altsuper
