#pragma once

#include "hodgekit/filtration.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hodgekit::ss {

using filt::Direction;
using filt::Filtration;
using PQ = std::pair<int, int>;

/// Bounded cochain complex K^lo -> ... -> K^hi of coordinate spaces.
class Complex {
public:
    Complex() = default;
    /// Degrees lo .. lo+dims.size()-1; d[k] is the map K^{lo+k} -> K^{lo+k+1}.
    /// Checks shapes and d∘d = 0.
    Complex(int lo, std::vector<std::size_t> dims, std::vector<Mat> d);

    /// A single space in degree n.
    static Complex concentrated(int n, std::size_t dim);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    std::size_t dim(int n) const;
    /// K^n -> K^{n+1}; a zero matrix of the right shape outside the stored range.
    Mat d(int n) const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Mat>& differentials() const { return d_; }
    /// H^n = Ker d^n / Im d^{n-1}.
    Subquotient cohomology(int n) const;
    bool is_real() const;
    /// K[m]^n = K^{n+m}, differential multiplied by (-1)^m.
    Complex shift(int m) const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.d_ == b.d_;
    }

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Mat> d_;
};

/// Degree-wise direct sum over the union of the degree ranges.
Complex direct_sum(const Complex& a, const Complex& b);

/// Chain map f^n: K^n -> K'^n; missing degrees are zero.
class ChainMap {
public:
    ChainMap() = default;
    /// Checks shapes and d' f = f d.
    ChainMap(Complex source, Complex target, std::map<int, Mat> maps);
    static ChainMap identity(const Complex& k);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    Mat at(int n) const;
    const std::map<int, Mat>& maps() const { return maps_; }
    /// Matrix of H^n(f) in the cohomology coordinates of both ends.
    Mat on_cohomology(int n) const;
    bool is_quasi_isomorphism() const;

private:
    Complex source_;
    Complex target_;
    std::map<int, Mat> maps_;
};

/// C^n = K^{n+1} ⊕ K'^n with d(x, y) = (-dx, f x + d'y).
Complex mapping_cone(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap direct_sum(const ChainMap& a, const ChainMap& b);
/// True iff f - g = d' h + h d with h^n: K^n -> K'^{n-1}.
bool is_homotopy(const ChainMap& f, const ChainMap& g, const std::map<int, Mat>& h);

/// A complex with one filtration per degree, all pointing the same way and
/// preserved by d.
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// filtrations[k] lives on K^{lo+k}. Throws InvalidInput on shape,
    /// direction or compatibility failure.
    FilteredComplex(Complex k, std::vector<Filtration> filtrations);
    /// Same filtration index for everything: the trivial filtration at `index`.
    static FilteredComplex trivial(Complex k, Direction dir, int index);

    const Complex& complex() const { return k_; }
    Direction direction() const { return dir_; }
    Filtration at(int n) const;
    const std::vector<Filtration>& filtrations() const { return f_; }
    /// Decreasing version (F^i = W_{-i} when increasing).
    FilteredComplex as_decreasing() const;
    /// Filtration induced on H^n (coordinates of complex().cohomology(n)).
    Filtration on_cohomology(int n) const;

private:
    Complex k_;
    Direction dir_ = Direction::Decreasing;
    std::vector<Filtration> f_;
};

/// Complex with an increasing W and a decreasing F, both by subcomplexes.
class BiFilteredComplex {
public:
    BiFilteredComplex() = default;
    BiFilteredComplex(Complex k, std::vector<Filtration> w, std::vector<Filtration> f);

    const Complex& complex() const { return k_; }
    FilteredComplex by_w() const { return FilteredComplex(k_, w_); }
    FilteredComplex by_f() const { return FilteredComplex(k_, f_); }
    Filtration w(int n) const;
    Filtration f(int n) const;
    const std::vector<Filtration>& w_filtrations() const { return w_; }
    const std::vector<Filtration>& f_filtrations() const { return f_; }

private:
    Complex k_;
    std::vector<Filtration> w_;
    std::vector<Filtration> f_;
};

/// Page index; std::nullopt is the limit page r = ∞.
using PageIndex = std::optional<int>;
inline const PageIndex kInfinity = std::nullopt;

/// E_r^{pq} = Z / N with N = B ∩ Z, as subspaces of K^{p+q}.
struct PageTerm {
    Subspace z;
    Subspace b;
    Subquotient sq;  ///< Subquotient(z, b ∩ z)
    std::size_t dim() const { return sq.dim(); }
};

struct SSPage {
    PageIndex r;
    std::map<PQ, PageTerm> terms;  ///< (p,q) with Gr^p K^{p+q} != 0
    std::map<PQ, Mat> d;           ///< d_r out of (p,q); empty at r = ∞
    std::size_t dim(int p, int q) const;
    /// Nonzero terms only.
    std::map<PQ, std::size_t> dims() const;
    /// Target bidegree of d_r out of (p,q).
    PQ target(const PQ& pq) const { return {pq.first + *r, pq.second - *r + 1}; }
};

/// Z_r^{pq} and B_r^{pq} for a decreasing filtration.
Subspace z_space(const FilteredComplex& k, int p, int n, PageIndex r);
Subspace b_space(const FilteredComplex& k, int p, int n, PageIndex r);

/// Page r (r >= 0 or ∞). Increasing filtrations are read as F^i = W_{-i}.
/// Asserts that d_r is well defined and squares to zero.
SSPage page(const FilteredComplex& k, PageIndex r);
/// Dimensions of the cohomology of (E_r, d_r) at each term of `pg`.
std::map<PQ, std::size_t> page_cohomology_dims(const SSPage& pg);
/// Largest r for which some d_r can be nonzero (0 for an empty complex).
int support_bound(const FilteredComplex& k);

struct EInfinityEntry {
    std::size_t e_infinity = 0;
    std::size_t graded = 0;   ///< dim Gr_F^p H^{p+q}
    bool isomorphic = false;  ///< natural map E_∞ -> Gr_F H is bijective
};
/// Throws Inconsistent if some entry is not an isomorphism.
std::map<PQ, EInfinityEntry> e_infinity_vs_gr(const FilteredComplex& k);

struct DegenerationReport {
    int rank = 1;                 ///< smallest r0 >= 1 with d_r = 0 for r >= r0
    bool strict = true;           ///< every d^n strict for the filtration
    std::optional<int> nonstrict_degree;
    filt::StrictnessReport witness;
};
/// Throws Inconsistent if (rank == 1) differs from `strict`.
DegenerationReport degeneration_rank(const FilteredComplex& k);

/// dim Gr^W_{-p} H^{p+q}(W_{-p+r-1}K / W_{-p-r}K) for an increasing W, r >= 1.
std::size_t quotient_complex_term_dim(const FilteredComplex& k, int p, int q, int r);
/// page() in W-notation, cross-checked term by term against the quotient
/// complex formula; throws Inconsistent on disagreement.
SSPage increasing_page(const FilteredComplex& k, int r);

/// Induced map on page terms of a filtered chain map (same direction on both
/// ends); asserts it is well defined.
std::map<PQ, Mat> page_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt, PageIndex r);

struct TermFiltrations {
    Filtration direct;      ///< F_d
    Filtration recurrent;   ///< F_rec
    Filtration dual_direct; ///< F_d*
    bool all_equal() const { return direct == recurrent && recurrent == dual_direct; }
};
/// F_d, F_rec and F_d* on each term of E_r(K, W), r >= 0 finite, in term
/// coordinates. Asserts F_d ⊆ F_rec ⊆ F_d*, and F_d = F_d* for r <= 1.
std::map<PQ, TermFiltrations> three_filtrations(const BiFilteredComplex& k, int r);

}  // namespace hodgekit::ss
