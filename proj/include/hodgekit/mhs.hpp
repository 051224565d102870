#pragma once

#include "hodgekit/hodge.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hodgekit::mhs {

using filt::Filtration;
using hodge::Bidegree;
using hodge::HodgeNumbers;
using hodge::HodgeStructure;

/// Increasing W over Q and decreasing F over Q(i) on Q(i)^dim. Construction
/// checks shapes, directions and rationality of W; the Hodge axiom is checked
/// by validate_mhs.
class MixedHodgeStructure {
public:
    MixedHodgeStructure() = default;
    MixedHodgeStructure(Filtration w, Filtration f);

    static MixedHodgeStructure zero();
    /// W_{n-1} = 0, W_n = H.
    static MixedHodgeStructure from_pure(const HodgeStructure& h);

    std::size_t dim() const { return w_.ambient_dim(); }
    const Filtration& W() const { return w_; }
    const Filtration& F() const { return f_; }

    friend bool operator==(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
        return a.w_ == b.w_ && a.f_ == b.f_;
    }

private:
    Filtration w_;
    Filtration f_;
};

/// Gr^W_n with the induced F, as a Hodge structure of weight n in the
/// coordinates of the subquotient presentation.
HodgeStructure graded_piece(const MixedHodgeStructure& h, int n);

/// Per-weight Hodge structures; throws InvalidInput naming the first failing
/// weight with the opposedness witness.
std::map<int, HodgeStructure> validate_mhs(const MixedHodgeStructure& h);
bool is_valid(const MixedHodgeStructure& h);

/// h^{p,q} = dim Gr^p_F Gr^q_conj(F) Gr^W_{p+q}.
HodgeNumbers hodge_numbers(const MixedHodgeStructure& h);
/// dim Gr^W_n for every n with a nonzero piece.
std::map<int, std::size_t> weight_dims(const MixedHodgeStructure& h);

/// I^{p,q} keyed by (p,q); nonzero pieces only. Asserts the three splitting
/// identities and throws Inconsistent if one fails.
std::map<Bidegree, Subspace> deligne_splitting(const MixedHodgeStructure& h);
/// I^{p,q} by the formula alone, without validation or assertions.
Subspace deligne_piece(const MixedHodgeStructure& h, int p, int q);

class MHSMorphism {
public:
    /// Checks f rational, shapes, f(W_j) ⊆ W_j and f(F^j) ⊆ F^j.
    MHSMorphism(Mat map, MixedHodgeStructure source, MixedHodgeStructure target);

    const Mat& map() const { return map_; }
    const MixedHodgeStructure& source() const { return source_; }
    const MixedHodgeStructure& target() const { return target_; }

private:
    Mat map_;
    MixedHodgeStructure source_;
    MixedHodgeStructure target_;
};

struct StrictnessResult {
    filt::StrictnessReport w;
    filt::StrictnessReport f;
    bool strict() const { return w.strict && f.strict; }
};
/// Throws Inconsistent when either filtration is not strict.
StrictnessResult morphism_strictness(const MHSMorphism& f);
/// Same computation without throwing.
StrictnessResult strictness_of(const MHSMorphism& f);

struct KernelCokernel {
    MixedHodgeStructure kernel;    ///< coordinates of the RREF basis of Ker f
    MixedHodgeStructure cokernel;  ///< coordinates of target / Im f
    Subspace kernel_space;
    Subquotient cokernel_space;
    MixedHodgeStructure image;     ///< Im f with filtrations induced from the target
    MixedHodgeStructure coimage;   ///< source / Ker f with quotient filtrations, in image coordinates
};
/// Kernel, cokernel, image and coimage; asserts that the induced map
/// coimage -> image is a filtered isomorphism and that both endpoints validate.
KernelCokernel kernel_cokernel(const MHSMorphism& f);

MixedHodgeStructure mhs_direct_sum(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
MixedHodgeStructure mhs_tensor(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
MixedHodgeStructure mhs_dual(const MixedHodgeStructure& h);
/// Hom(a, b) = b ⊗ a^∨ with the flattening of hodge::flatten_hom.
MixedHodgeStructure mhs_hom(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
/// H(m): W_r(H(m)) = W_{r+2m}, F^p(H(m)) = F^{p+m}.
MixedHodgeStructure mhs_twist(const MixedHodgeStructure& h, int m);
/// Image of h under a rational base change g (new coordinates x' = g x).
MixedHodgeStructure base_change(const MixedHodgeStructure& h, const Mat& g);

/// A rational g with g(W_n) = W_n, Gr^W(g) = id and g(F_a) = F_b, when one
/// exists. Both structures must share the same W. Solved as a linear system
/// in the strictly W-lowering part of g.
std::optional<Mat> unipotent_isomorphism(const MixedHodgeStructure& a, const MixedHodgeStructure& b);

struct Comparison {
    bool same_weight_dims = false;
    bool same_hodge_numbers = false;
    bool identical = false;              ///< same W and F: the identity is an isomorphism
    bool unipotent_isomorphic = false;   ///< isomorphic by a map inducing the identity on Gr^W
};
Comparison compare(const MixedHodgeStructure& a, const MixedHodgeStructure& b);

}  // namespace hodgekit::mhs
