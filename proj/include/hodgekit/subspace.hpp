#pragma once

#include "hodgekit/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hodgekit {

/// Subspace of a coordinate space Q(i)^n, stored as its canonical RREF basis
/// (one row per basis vector). Two subspaces are equal iff their bases are
/// identical entry-wise.
class Subspace {
public:
    Subspace() = default;
    /// Row space of `spanning` (any rows, possibly dependent).
    explicit Subspace(const Mat& spanning);

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_real() const { return basis_.is_real(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// v minus its component along this subspace's pivot columns: zero at
    /// every pivot, and zero iff v lies in the subspace.
    Vec reduce(const Vec& v) const;
    /// Coordinates of v (which must lie in the subspace) in the RREF basis.
    Vec coords(const Vec& v) const;
    /// Matrix (ambient x dim) whose columns are the basis vectors.
    Mat basis_columns() const { return basis_.transpose(); }

    Subspace conj() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// f(U) for a linear map f (rows = target dim, cols = U's ambient dim).
Subspace image(const Mat& f, const Subspace& u);
Subspace image(const Mat& f);
/// {x : f x in V}.
Subspace preimage(const Mat& f, const Subspace& v);
Subspace kernel_space(const Mat& f);
/// Annihilator under the bilinear pairing sum_k x_k y_k.
Subspace annihilator(const Subspace& u);
/// Row space of the Kronecker products of the two bases.
Subspace tensor(const Subspace& u, const Subspace& v);

/// A subquotient Num/Den with Den a subspace of Num, both in one ambient.
/// Coordinates: reduce modulo Den, keep the non-pivot coordinates of Den,
/// then read the pivot entries of the RREF image of Num. The representatives
/// are the lifts of that image basis with zeros in Den's pivot columns; they
/// lie in Num.
class Subquotient {
public:
    Subquotient() = default;
    /// `den` is replaced by den ∩ num when it is not contained in num.
    Subquotient(Subspace num, Subspace den);

    const Subspace& num() const { return num_; }
    const Subspace& den() const { return den_; }
    std::size_t ambient_dim() const { return num_.ambient_dim(); }
    std::size_t dim() const { return num_.dim() - den_.dim(); }

    /// dim x ambient matrix; correct on vectors of Num.
    const Mat& projector() const { return projector_; }
    /// dim x ambient; row k is a vector of Num whose class is basis vector k.
    const Mat& representatives() const { return reps_; }

    /// Coordinates of the class of v (v must lie in Num; throws otherwise).
    Vec coords(const Vec& v) const;
    /// Image of a subspace of Num in quotient coordinates.
    Subspace coords(const Subspace& s) const;
    /// Preimage in Num of a subspace of quotient coordinates (contains Den).
    Subspace lift(const Subspace& s) const;

private:
    Subspace num_;
    Subspace den_;
    Mat projector_;
    Mat reps_;
};

}  // namespace hodgekit
