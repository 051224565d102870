#include "hodgekit/matrix.hpp"

#include "hodgekit/errors.hpp"

#include <sstream>
#include <utility>

namespace hodgekit {

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Mat Mat::diagonal(const Vec& diag) {
    Mat m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    return m;
}

Vec Mat::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw Error("set_row: width mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mat Mat::conj() const {
    Mat m(*this);
    for (auto& x : m.data_) x = x.conj();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_real() const {
    for (const auto& x : data_)
        if (!x.is_real()) return false;
    return true;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero()) out(r, c) += x * y;
            }
        }
    return out;
}

Mat operator*(const Scalar& s, Mat m) {
    for (auto& x : m.data_) x *= s;
    return m;
}

Mat Mat::operator-() const { return Scalar(-1) * *this; }

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_) throw Error("matrix-vector product: shape mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
        }
    return y;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block out of range");
    Mat b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat vstack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols()) throw Error("vstack: width mismatch");
    Mat m(top.rows() + bottom.rows(), top.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
}

Mat hstack(const Mat& left, const Mat& right) {
    if (left.rows() != right.rows()) throw Error("hstack: height mismatch");
    Mat m(left.rows(), left.cols() + right.cols());
    m.set_block(0, 0, left);
    m.set_block(0, left.cols(), right);
    return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector sum: size mismatch");
    Vec v(a);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
    return v;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector difference: size mismatch");
    Vec v(a);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= b[k];
    return v;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x *= s;
    return out;
}

Vec conj(const Vec& v) {
    Vec out(v);
    for (auto& x : out) x = x.conj();
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec unit_vector(std::size_t n, std::size_t k) {
    Vec v(n);
    v.at(k) = Scalar(1);
    return v;
}

RrefResult rref(const Mat& m) {
    RrefResult out{m, {}};
    Mat& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(lead, k));
        if (!a(lead, c).is_one()) {
            const Scalar inv = Scalar(1) / a(lead, c);
            for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c).is_zero()) continue;
            const Scalar f = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k)
                if (!a(lead, k).is_zero()) a(r, k) -= f * a(lead, k);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel(const Mat& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return Mat::from_rows(basis, m.cols());
}

Scalar determinant(const Mat& m) {
    if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
    Mat a(m);
    Scalar det(1);
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const Scalar f = a(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Mat(0, 0);
    const RrefResult rr = rref(hstack(m, Mat::identity(n)));
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw Error("matrix is singular");
    return rr.reduced.block(0, n, n, n);
}

namespace {

void require_hermitian(const Mat& g) {
    if (!g.is_square()) throw InvalidInput("expected a square matrix");
    if (!(g.adjoint() == g)) throw InvalidInput("matrix is not Hermitian");
}

}  // namespace

bool hermitian_posdef(const Mat& g) {
    require_hermitian(g);
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        const Scalar minor = determinant(g.block(0, 0, k, k));
        if (!minor.is_real() || sgn(minor.re()) <= 0) return false;
    }
    return true;
}

Inertia inertia(const Mat& g) {
    require_hermitian(g);
    Mat a(g);
    const std::size_t n = a.rows();
    Inertia out;
    // col_j += t col_k followed by row_j += conj(t) row_k is the congruence
    // P^H A P with P = I + t E_{kj}.
    auto congruence = [&](std::size_t j, std::size_t k, const Scalar& t) {
        for (std::size_t r = 0; r < n; ++r) a(r, j) += t * a(r, k);
        const Scalar tc = t.conj();
        for (std::size_t c = 0; c < n; ++c) a(j, c) += tc * a(k, c);
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, piv).is_zero()) ++piv;
        if (piv == n) {
            // Zero diagonal: manufacture a nonzero one from an off-diagonal entry.
            bool found = false;
            for (std::size_t j = k; j < n && !found; ++j)
                for (std::size_t l = j + 1; l < n && !found; ++l)
                    if (!a(j, l).is_zero()) {
                        congruence(j, l, a(j, l).conj());
                        piv = j;
                        found = true;
                    }
            if (!found) {
                out.zero += n - k;
                break;
            }
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, piv), a(r, k));
        }
        const Scalar d = a(k, k);
        for (std::size_t j = k + 1; j < n; ++j)
            if (!a(k, j).is_zero()) congruence(j, k, -(a(k, j) / d));
        if (sgn(d.re()) > 0)
            ++out.positive;
        else
            ++out.negative;
    }
    return out;
}

}  // namespace hodgekit
