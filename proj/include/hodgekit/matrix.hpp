#pragma once

#include "hodgekit/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hodgekit {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q(i). As a linear map it acts on column
/// vectors: a rows x cols matrix sends Q(i)^cols to Q(i)^rows.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    /// Stacks the given vectors as rows; `cols` fixes the width when `rows` is empty.
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Mat diagonal(const Vec& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    Mat transpose() const;
    Mat conj() const;
    /// Conjugate transpose.
    Mat adjoint() const { return conj().transpose(); }

    bool is_zero() const;
    bool is_real() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& s, Mat m);
    Mat operator-() const;
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// M x for a column vector x.
    Vec apply(const Vec& x) const;

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
Mat block_diag(const Mat& a, const Mat& b);
/// Kronecker product; index (i,j) of a combined with (k,l) of b lands at
/// (i*b.rows()+k, j*b.cols()+l).
Mat kron(const Mat& a, const Mat& b);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec conj(const Vec& v);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t k);

struct RrefResult {
    Mat reduced;              ///< same shape as the input; zero rows at the bottom
    std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis (as rows) of {x : m x = 0}, the standard RREF nullspace basis.
Mat kernel(const Mat& m);
Scalar determinant(const Mat& m);
/// Throws Error when singular or non-square.
Mat inverse(const Mat& m);

/// Sylvester criterion on a Hermitian matrix: true iff every leading
/// principal minor is strictly positive. Throws InvalidInput when g is not
/// square or not Hermitian.
bool hermitian_posdef(const Mat& g);

/// Numbers of positive, negative and zero eigenvalues of a Hermitian matrix,
/// computed exactly by congruence diagonalization.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const Mat& g);

}  // namespace hodgekit
