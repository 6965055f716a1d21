#include "altsuper/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace altsuper {

Mat::Mat(FieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c) {
    a.assign(static_cast<size_t>(r) * c, F->zero());
}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], o.a[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->sub(a[i], o.a[i]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat r(F, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (F->is_zero(x)) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = F->add(r.at(i, j), F->mul(x, o.at(k, j)));
        }
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->mul(s, a[i]);
    return r;
}

Mat Mat::transposed() const {
    Mat r(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!F->is_zero(x)) return false;
    return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> r(static_cast<size_t>(rows), F->zero());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (F->is_zero(at(i, j))) continue;
            r[i] = F->add(r[i], F->mul(at(i, j), v[j]));
        }
    return r;
}

std::vector<int> rref(Mat& m) {
    const FieldPtr& F = m.F;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!F->is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar iv = F->inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = F->mul(iv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || F->is_zero(m.at(i, c))) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel(const Mat& m) {
    Mat e = m;
    std::vector<int> pivots = rref(e);
    const FieldPtr& F = m.F;
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> out;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(m.cols), F->zero());
        v[static_cast<size_t>(c)] = F->one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = F->neg(e.at(static_cast<int>(r), c));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(const Mat& A, const std::vector<Scalar>& b) {
    const FieldPtr& F = A.F;
    Mat aug(F, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<Scalar> x(static_cast<size_t>(A.cols), F->zero());
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), A.cols);
    return x;
}

Scalar det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    const FieldPtr& F = m.F;
    Scalar d = F->one();
    for (int c = 0; c < m.cols; ++c) {
        int piv = -1;
        for (int i = c; i < m.rows; ++i)
            if (!F->is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) return F->zero();
        if (piv != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = F->neg(d);
        }
        d = F->mul(d, m.at(c, c));
        Scalar iv = F->inv(m.at(c, c));
        for (int i = c + 1; i < m.rows; ++i) {
            if (F->is_zero(m.at(i, c))) continue;
            Scalar f = F->mul(iv, m.at(i, c));
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(f, m.at(c, j)));
        }
    }
    return d;
}

bool invertible(const Mat& m) {
    return m.rows == m.cols && !m.F->is_zero(det(m));
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    const FieldPtr& F = m.F;
    Mat aug(F, m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = F->one();
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
    Mat inv(F, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

std::vector<Scalar> charpoly(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("charpoly of non-square matrix");
    const FieldPtr& F = m.F;
    int n = m.rows;
    if (n == 0) return {F->one()};
    // Berkowitz iteration: c holds the charpoly of the leading principal
    // submatrix, highest coefficient first.
    std::vector<Scalar> c{F->one()};
    for (int i = 1; i <= n; ++i) {
        // Column vector [1, -a, -R C, -R B C, -R B^2 C, ...] of length i+1.
        std::vector<Scalar> col;
        col.reserve(static_cast<size_t>(i) + 1);
        col.push_back(F->one());
        col.push_back(F->neg(m.at(i - 1, i - 1)));
        std::vector<Scalar> w(static_cast<size_t>(i) - 1);
        for (int k = 0; k < i - 1; ++k) w[static_cast<size_t>(k)] = m.at(k, i - 1);  // C
        for (int step = 0; step + 2 <= i; ++step) {
            Scalar rc = F->zero();
            for (int k = 0; k < i - 1; ++k)
                rc = F->add(rc, F->mul(m.at(i - 1, k), w[static_cast<size_t>(k)]));
            col.push_back(F->neg(rc));
            if (step + 2 == i) break;
            std::vector<Scalar> nw(static_cast<size_t>(i) - 1, F->zero());
            for (int r = 0; r < i - 1; ++r)
                for (int k = 0; k < i - 1; ++k)
                    nw[static_cast<size_t>(r)] = F->add(
                        nw[static_cast<size_t>(r)],
                        F->mul(m.at(r, k), w[static_cast<size_t>(k)]));
            w = std::move(nw);
        }
        // Multiply by the lower-triangular Toeplitz matrix with first column `col`.
        std::vector<Scalar> nc(static_cast<size_t>(i) + 1, F->zero());
        for (size_t r = 0; r < nc.size(); ++r)
            for (size_t k = 0; k < c.size() && k <= r; ++k) {
                if (r - k >= col.size()) continue;
                nc[r] = F->add(nc[r], F->mul(col[r - k], c[k]));
            }
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());  // low degree first
    return c;
}

Subspace::Subspace(FieldPtr f, int ambient) : F_(std::move(f)), ambient_(ambient) {}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[static_cast<size_t>(pivots_[r])];
        if (F_->is_zero(c)) continue;
        for (int j = 0; j < ambient_; ++j)
            v[static_cast<size_t>(j)] =
                F_->sub(v[static_cast<size_t>(j)], F_->mul(c, rows_[r][static_cast<size_t>(j)]));
    }
    return v;
}

bool Subspace::insert(const std::vector<Scalar>& vin) {
    if (static_cast<int>(vin.size()) != ambient_)
        throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> v = reduce(vin);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!F_->is_zero(v[static_cast<size_t>(j)])) { p = j; break; }
    if (p < 0) return false;
    Scalar iv = F_->inv(v[static_cast<size_t>(p)]);
    for (auto& x : v) x = F_->mul(iv, x);
    // Back-substitute into existing rows to keep the basis fully reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][static_cast<size_t>(p)];
        if (F_->is_zero(c)) continue;
        for (int j = 0; j < ambient_; ++j)
            rows_[r][static_cast<size_t>(j)] = F_->sub(
                rows_[r][static_cast<size_t>(j)], F_->mul(c, v[static_cast<size_t>(j)]));
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    return vec_is_zero(F_, reduce(v));
}

Subspace Subspace::full(const FieldPtr& f, int ambient) {
    Subspace s(f, ambient);
    for (int i = 0; i < ambient; ++i) s.insert(vec_unit(f, ambient, i));
    return s;
}

Subspace Subspace::span(const FieldPtr& f, int ambient,
                        const std::vector<std::vector<Scalar>>& vecs) {
    Subspace s(f, ambient);
    for (const auto& v : vecs) s.insert(v);
    return s;
}

std::vector<Scalar> vec_add(const FieldPtr& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    std::vector<Scalar> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F->add(a[i], b[i]);
    return r;
}

std::vector<Scalar> vec_sub(const FieldPtr& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    std::vector<Scalar> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F->sub(a[i], b[i]);
    return r;
}

std::vector<Scalar> vec_scale(const FieldPtr& F, const Scalar& s, const std::vector<Scalar>& a) {
    std::vector<Scalar> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F->mul(s, a[i]);
    return r;
}

bool vec_is_zero(const FieldPtr& F, const std::vector<Scalar>& a) {
    for (const auto& x : a)
        if (!F->is_zero(x)) return false;
    return true;
}

std::vector<Scalar> vec_zero(const FieldPtr& F, int n) {
    return std::vector<Scalar>(static_cast<size_t>(n), F->zero());
}

std::vector<Scalar> vec_unit(const FieldPtr& F, int n, int i) {
    std::vector<Scalar> v(static_cast<size_t>(n), F->zero());
    v[static_cast<size_t>(i)] = F->one();
    return v;
}

}  // namespace altsuper
