#pragma once

#include "hodgekit/mhs.hpp"
#include "hodgekit/specseq.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodgekit::mhc {

using filt::Filtration;
using hodge::HodgeStructure;
using mhs::MixedHodgeStructure;
using ss::BiFilteredComplex;
using ss::ChainMap;
using ss::Complex;
using ss::FilteredComplex;

/// Cohomological Hodge complex of weight n: a rational complex K_Q, a complex
/// K_C with a decreasing F, and a quasi-isomorphism K_Q ⊗ C -> K_C. The
/// comparison is a single chain map; the rational and complex levels share
/// the coordinate field Q(i).
struct HodgeComplexData {
    int weight = 0;
    Complex rational;
    FilteredComplex hodge;
    ChainMap comparison;
};

struct HodgeComplexReport {
    /// H^k(K_Q) with F transported from H^k(K_C), a Hodge structure of weight n+k.
    std::map<int, HodgeStructure> cohomology;
    ss::DegenerationReport degeneration;
};
/// Checks the comparison is a quasi-isomorphism, d is strict for F (rank-1
/// degeneration) and each H^k is a Hodge structure of weight n+k. Throws
/// InvalidInput naming the failing condition.
HodgeComplexReport validate_hc(const HodgeComplexData& k);

/// Mixed Hodge complex: K_Q with an increasing rational W, K_C with (W, F),
/// and a W-filtered comparison K_Q ⊗ C -> K_C.
struct MixedHodgeComplexData {
    Complex rational;
    std::vector<Filtration> rational_w;  ///< one per degree of `rational`
    BiFilteredComplex hodge;
    ChainMap comparison;

    FilteredComplex rational_filtered() const { return FilteredComplex(rational, rational_w); }
};

/// Gr^W_m of a mixed Hodge complex as a Hodge complex of weight m.
HodgeComplexData graded_hodge_complex(const MixedHodgeComplexData& m, int weight);
/// Weights m with Gr^W_m nonzero in some degree.
std::vector<int> weights(const MixedHodgeComplexData& m);

/// Validates every Gr^W_m as a Hodge complex of weight m (which makes the
/// comparison a W-filtered quasi-isomorphism). Keyed by m.
std::map<int, HodgeComplexReport> validate_mhc(const MixedHodgeComplexData& m);
bool is_valid(const MixedHodgeComplexData& m);

/// H^n(K_Q) with W[n] (so W_q H^n is the image of W_{q-n} K^n) and F
/// transported through H^n of the comparison.
MixedHodgeStructure cohomology_mhs(const MixedHodgeComplexData& m, int n);

struct DegenerationTheorems {
    bool w_degenerates_at_e2 = false;   ///< d_r = 0 on E_r(K_Q, W) for r >= 2
    int f_rank = 0;                     ///< degeneration rank of E_r(K_C, F)
    bool d1_strict = false;             ///< d_1 on E_1(K_C, W) strict for F_rec
    bool three_filtrations_agree = false;
    bool weight_graded_matches_e2 = false;  ///< dim Gr^{W[n]}_q H^n = dim E_2^{n-q,q}
    std::map<int, MixedHodgeStructure> cohomology;
    bool all() const {
        return w_degenerates_at_e2 && f_rank == 1 && d1_strict && three_filtrations_agree &&
               weight_graded_matches_e2;
    }
};
/// Validates m, then checks each degeneration statement; throws Inconsistent
/// if one fails.
DegenerationTheorems degeneration_theorems(const MixedHodgeComplexData& m);

/// (K[a], W[a-2b], F[b]); H^i of the result is H^{i+a}(K)(b).
MixedHodgeComplexData shift(const MixedHodgeComplexData& m, int a, int b);
MixedHodgeComplexData direct_sum(const MixedHodgeComplexData& x, const MixedHodgeComplexData& y);

/// A morphism of mixed Hodge complexes: filtered chain maps at both levels.
/// The comparison square commutes up to the homotopies of ConeHomotopies.
struct MHCMorphism {
    MixedHodgeComplexData source;
    MixedHodgeComplexData target;
    ChainMap rational;
    ChainMap hodge;
};

/// h1^j: K_Q^j -> K'_Q^{j-1} with d' h1 + h1 d = 0 (the rational square has
/// identity comparisons), and h2^j: K_Q^j -> K'_C^{j-1} with
/// β' u_Q - u_C β = d' h2 + h2 d. Both must raise W by at most one.
struct ConeHomotopies {
    std::map<int, Mat> h1;
    std::map<int, Mat> h2;
};

/// Cone with W_n C^i = W_{n-1}K^{i+1} ⊕ W_n K'^i, F^p C^i = F^p K^{i+1} ⊕ F^p K'^i,
/// comparison [[β, 0], [h2 + β' h1, β']]. Throws InvalidInput on bad
/// homotopies and Inconsistent if the cone does not validate.
MixedHodgeComplexData mixed_cone(const MHCMorphism& u, const ConeHomotopies& h = {});

struct LongExactSequence {
    struct Term {
        std::string label;  ///< "K", "K'" or "C"
        int degree = 0;
        MixedHodgeStructure mhs;
    };
    std::vector<Term> terms;
    std::vector<Mat> maps;  ///< maps[k]: terms[k] -> terms[k+1]
    bool exact = false;
    bool morphisms = false;
    bool strict = false;
};
/// ... -> H^i(K) -> H^i(K') -> H^i(C) -> H^{i+1}(K) -> ... as a sequence of
/// MHS morphisms; throws Inconsistent unless it is exact, made of morphisms
/// and strict.
LongExactSequence cone_long_exact_sequence(const MHCMorphism& u, const ConeHomotopies& h = {});

/// Cohomology MHS of the cones built with two homotopy choices, compared
/// degree by degree. Equal weight-graded dimensions are asserted; whether the
/// structures are isomorphic is only reported.
std::map<int, mhs::Comparison> compare_cones(const MHCMorphism& u, const ConeHomotopies& a,
                                             const ConeHomotopies& b);

/// Bounded double complex K^{a,c} with commuting differentials and an
/// increasing W on each entry. a is the internal degree, c the column.
struct DoubleComplex {
    struct Entry {
        std::size_t dim = 0;
        Mat d_internal;  ///< K^{a,c} -> K^{a+1,c}
        Mat d_column;    ///< K^{a,c} -> K^{a,c+1}
        Filtration w;
    };
    std::map<std::pair<int, int>, Entry> entries;  ///< keyed by (a, c)
};

struct DiagonalFiltration {
    FilteredComplex total;  ///< sK with the increasing δ(W, L)
    /// Position of K^{a,c} inside (sK)^{a+c}: offset keyed by (a, c).
    std::map<std::pair<int, int>, std::size_t> offsets;
};
/// Total complex with d = d_internal + (-1)^a d_column and
/// δ_n (sK)^i = ⊕_{a+c=i} W_{n+c} K^{a,c}. Asserts
/// dim Gr^δ_n (sK)^i = Σ_c dim Gr^W_{n+c} K^{i-c,c}.
DiagonalFiltration diagonal_filtration(const DoubleComplex& d);

}  // namespace hodgekit::mhc
