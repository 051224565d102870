#pragma once

#include "hodgekit/filtration.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hodgekit::hodge {

using filt::Filtration;

/// Bidegree (p, q).
using Bidegree = std::pair<int, int>;
using HodgeNumbers = std::map<Bidegree, std::size_t>;

/// Weight n and a decreasing filtration F on Q(i)^dim. The rational structure
/// is the standard one, so conj(F) is entry-wise. Validity (F opposite to its
/// conjugate) is checked by validate_hs, not at construction.
class HodgeStructure {
public:
    HodgeStructure() = default;
    HodgeStructure(int weight, Filtration f);

    /// Zero-dimensional structure of the given weight.
    static HodgeStructure zero(int weight);
    /// Q(m): rank 1, weight -2m, type (-m,-m).
    static HodgeStructure tate(int m);
    /// F^p = ⊕_{p' >= p} pieces[p'] where pieces[p] is H^{p, weight-p}.
    static HodgeStructure from_bigrading(int weight, std::size_t dim, const std::map<int, Subspace>& pieces);

    int weight() const { return weight_; }
    std::size_t dim() const { return f_.ambient_dim(); }
    const Filtration& F() const { return f_; }

    friend bool operator==(const HodgeStructure& a, const HodgeStructure& b) {
        return a.weight_ == b.weight_ && a.f_ == b.f_;
    }

private:
    int weight_ = 0;
    Filtration f_;
};

/// H^{p,q} = F^p ∩ conj(F)^q keyed by p (q = weight - p); zero pieces omitted.
struct Bigrading {
    int weight = 0;
    std::map<int, Subspace> pieces;
    std::size_t h(int p) const;
};

/// Throws InvalidInput (witness: offending (p,q)) when F and conj(F) are not
/// weight-opposite.
Bigrading validate_hs(const HodgeStructure& h);
bool is_valid(const HodgeStructure& h);
HodgeNumbers hodge_numbers(const HodgeStructure& h);

/// Acts by i^{p-q} on H^{p,q}; real matrix.
Mat weil_operator(const HodgeStructure& h);

HodgeStructure hs_direct_sum(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure hs_tensor(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure hs_dual(const HodgeStructure& h);
/// Hom(a, b) = b ⊗ a^∨; a linear map f with entry f[k][i] sits at k*dim(a)+i.
HodgeStructure hs_hom(const HodgeStructure& a, const HodgeStructure& b);
/// H(m): weight n-2m, F^p(H(m)) = F^{p+m}(H).
HodgeStructure tate_twist(const HodgeStructure& h, int m);
/// Flattens a dim(b) x dim(a) matrix into the coordinates of hs_hom(a, b).
Vec flatten_hom(const Mat& f);

/// Q(u, v) = v^T Q u on the rational coordinate space.
struct Polarization {
    Mat q;
};

struct PolarizationReport {
    bool parity_ok = false;      ///< Q^T = (-1)^n Q
    bool nondegenerate = false;
    bool orthogonal = false;     ///< Q(H^{p,q}, conj H^{p',q'}) = 0 for p != p'
    bool positive = false;       ///< i^{p-q} Q(x, conj x) > 0 on each H^{p,q}
    std::optional<Bidegree> failing;  ///< first piece failing orthogonality/positivity
    Inertia signature;           ///< inertia of Q (even weight only)
    std::optional<Inertia> expected_signature;  ///< predicted from Hodge numbers (even weight)
    bool polarized() const { return parity_ok && nondegenerate && orthogonal && positive; }
};
/// Throws InvalidInput on shape mismatch, parity mismatch or degenerate Q.
PolarizationReport check_polarization(const HodgeStructure& h, const Polarization& q);

/// Cohomology H^0..H^{2n} of a compact Kähler-type object, with the Lefschetz
/// operator L_k: H^k -> H^{k+2} (index k, for k + 2 <= 2n). Lambda, when
/// given, has Lambda_k: H^{k+2} -> H^k.
struct LefschetzPackage {
    int n_dim = 0;
    std::vector<HodgeStructure> h;
    std::vector<Mat> l;
    std::optional<std::vector<Mat>> lambda;
};

struct LefschetzReport {
    bool hard_lefschetz = true;
    std::optional<int> failing_i;            ///< first i with L^i: H^{n-i} -> H^{n+i} not bijective
    bool l_type_ok = true;                   ///< each L_k maps F^p into F^{p+1}
    std::map<int, Subspace> primitive;       ///< H^q_prim = Ker L^{n-q+1}, q <= n
    bool decomposition_ok = true;            ///< H^q = ⊕_r L^r H^{q-2r}_prim
    std::optional<bool> sl2_ok;              ///< [Lambda, L] = h with h = n-k on H^k
};
LefschetzReport lefschetz_decompose(const LefschetzPackage& pkg);

struct RiemannReport {
    bool first = false;   ///< M1^T M2 - M2^T M1 = 0
    bool second = false;  ///< i (conj(M1)^T M2 - conj(M2)^T M1) positive definite
    bool holds() const { return first && second; }
};
RiemannReport riemann_relations(const Mat& m1, const Mat& m2);

}  // namespace hodgekit::hodge
