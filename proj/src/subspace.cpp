#include "hodgekit/subspace.hpp"

#include "hodgekit/errors.hpp"

namespace hodgekit {

Subspace::Subspace(const Mat& spanning) : ambient_(spanning.cols()) {
    RrefResult rr = rref(spanning);
    pivots_ = std::move(rr.pivots);
    basis_ = rr.reduced.block(0, 0, pivots_.size(), ambient_);
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(Mat(0, ambient)); }

Subspace Subspace::full(std::size_t ambient) { return Subspace(Mat::identity(ambient)); }

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    return Subspace(Mat::from_rows(vectors, ambient));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw InvalidInput("vector does not live in the subspace's ambient");
    Vec out(v);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar f = out[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_(k, c).is_zero()) out[c] -= f * basis_(k, c);
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return hodgekit::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InvalidInput("ambient dimension mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    if (!contains(v)) throw Error("coords: vector is not in the subspace");
    Vec c(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Subspace Subspace::conj() const {
    // Conjugating an RREF basis keeps it in RREF: pivots are 1.
    Subspace s(*this);
    s.basis_ = basis_.conj();
    return s;
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw InvalidInput("ambient dimension mismatch: " + std::to_string(u.ambient_dim()) + " vs " +
                           std::to_string(v.ambient_dim()));
}

}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (u.contains(v)) return u;
    if (v.contains(u)) return v;
    return Subspace(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (u.contains(v)) return v;
    if (v.contains(u)) return u;
    // Relations a*U + b*V = 0 give the intersection as the span of a*U.
    const Mat relations = kernel(vstack(u.basis(), v.basis()).transpose());
    const Mat a = relations.block(0, 0, relations.rows(), u.dim());
    return Subspace(a * u.basis());
}

Subspace image(const Mat& f, const Subspace& u) {
    if (f.cols() != u.ambient_dim()) throw InvalidInput("image: map/subspace dimension mismatch");
    if (u.is_zero()) return Subspace::zero(f.rows());
    return Subspace(u.basis() * f.transpose());
}

Subspace image(const Mat& f) { return Subspace(f.transpose()); }

Subspace kernel_space(const Mat& f) { return Subspace(kernel(f)); }

Subspace annihilator(const Subspace& u) { return Subspace(kernel(u.basis())); }

Subspace preimage(const Mat& f, const Subspace& v) {
    if (f.rows() != v.ambient_dim()) throw InvalidInput("preimage: map/subspace dimension mismatch");
    if (v.is_full()) return Subspace::full(f.cols());
    const Mat conditions = kernel(v.basis());
    return kernel_space(conditions * f);
}

Subspace tensor(const Subspace& u, const Subspace& v) {
    const std::size_t n = u.ambient_dim() * v.ambient_dim();
    std::vector<Vec> rows;
    rows.reserve(u.dim() * v.dim());
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < v.dim(); ++b) {
            Vec w(n);
            for (std::size_t i = 0; i < u.ambient_dim(); ++i) {
                const Scalar& x = u.basis()(a, i);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < v.ambient_dim(); ++j)
                    w[i * v.ambient_dim() + j] = x * v.basis()(b, j);
            }
            rows.push_back(std::move(w));
        }
    return Subspace::span(rows, n);
}

Subquotient::Subquotient(Subspace num, Subspace den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ambient(num_, den_);
    if (!num_.contains(den_)) den_ = intersect(num_, den_);
    const std::size_t n = num_.ambient_dim();

    std::vector<bool> den_pivot(n, false);
    for (auto p : den_.pivots()) den_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!den_pivot[c]) free_cols.push_back(c);

    auto project = [&](const Vec& v) {
        const Vec r = den_.reduce(v);
        Vec out(free_cols.size());
        for (std::size_t k = 0; k < free_cols.size(); ++k) out[k] = r[free_cols[k]];
        return out;
    };

    Mat projected(num_.dim(), free_cols.size());
    for (std::size_t r = 0; r < num_.dim(); ++r) projected.set_row(r, project(num_.basis().row(r)));
    const Subspace quotient_image(projected);
    const std::size_t d = quotient_image.dim();

    projector_ = Mat(d, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Vec pc = project(unit_vector(n, c));
        for (std::size_t j = 0; j < d; ++j) projector_(j, c) = pc[quotient_image.pivots()[j]];
    }
    reps_ = Mat(d, n);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            reps_(j, free_cols[k]) = quotient_image.basis()(j, k);
}

Vec Subquotient::coords(const Vec& v) const {
    if (!num_.contains(v)) throw Error("subquotient coords: vector is not in the numerator");
    return projector_.apply(v);
}

Subspace Subquotient::coords(const Subspace& s) const {
    if (!num_.contains(s)) throw Error("subquotient coords: subspace is not in the numerator");
    if (s.is_zero()) return Subspace::zero(dim());
    return Subspace(s.basis() * projector_.transpose());
}

Subspace Subquotient::lift(const Subspace& s) const {
    if (s.ambient_dim() != dim()) throw InvalidInput("subquotient lift: dimension mismatch");
    if (s.is_zero()) return den_;
    return sum(Subspace(s.basis() * reps_), den_);
}

}  // namespace hodgekit
