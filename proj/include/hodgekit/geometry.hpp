#pragma once

#include "hodgekit/mhc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgekit::geometry {

using hodge::HodgeStructure;
using mhs::MixedHodgeStructure;
using PQ = std::pair<int, int>;

/// One stratum of a stratified space: the pure Hodge structures H^k (weight k)
/// of the stratum, its faces in the previous level, and one matrix per face
/// and cohomological degree.
///
/// NCD input: a stratum of level p has faces j = 0..p and maps[j][q] is the
/// restriction H^q(face) -> H^q(stratum).
/// Open input: a stratum of level m has faces j = 1..m (stored at j-1) and
/// maps[j-1][k] is the Gysin map H^k(stratum) -> H^{k+2}(face).
struct Stratum {
    std::string name;
    std::vector<HodgeStructure> cohomology;
    std::vector<std::size_t> faces;
    std::vector<std::map<int, Mat>> maps;
};

/// levels[p] lists the strata Y_p (disjoint intersections of p+1 components).
struct NCDInput {
    std::vector<std::vector<Stratum>> levels;
};

/// levels[m] lists the strata Y^m of codimension m; levels[0] holds X alone.
struct OpenSmoothInput {
    std::vector<std::vector<Stratum>> levels;
};

/// Weight-graded cohomology read off E_2 of the weight spectral sequence.
struct WeightGradedCohomology {
    /// degree i -> weight q -> Gr^W_q H^i with its Hodge structure.
    std::map<int, std::map<int, HodgeStructure>> graded;
    std::map<PQ, std::size_t> e1;  ///< nonzero E_1 dimensions
    std::map<PQ, std::size_t> e2;  ///< nonzero E_2 dimensions

    std::map<int, std::size_t> weight_dims(int degree) const;
    std::size_t total_dim(int degree) const;
};

/// E_1^{p,q} = ⊕ H^q(Y_σ), σ in Y_p, with d_1 = Σ_j (-1)^j λ_j^*.
/// Throws InvalidInput when d_1 ∘ d_1 != 0 or d_1 is not a morphism of HS.
WeightGradedCohomology ncd_weight_cohomology(const NCDInput& input);

/// E_1^{-m,q} = ⊕ H^{q-2m}(Y_τ)(-m), τ in Y^m, with d_1 = Σ_j (-1)^{j+1} G_j.
/// Throws InvalidInput on a Gysin bidegree violation or d_1 ∘ d_1 != 0.
WeightGradedCohomology open_weight_cohomology(const OpenSmoothInput& input);

/// Direct sum of the graded pieces as a split mixed Hodge structure.
MixedHodgeStructure split_mhs(const std::map<int, HodgeStructure>& graded);

/// H^k of a smooth projective curve of genus g: weight-1 part spanned by
/// e_a + i e_{a+g} in F^1.
std::vector<HodgeStructure> curve_cohomology(int genus);

/// Cohomology of standard spaces, one MHS per degree (zero degrees omitted).
/// kind: "projective_space" (params {n}), "torus" (params {r}: complex
/// dimension), "punctured_curve" (params {g, m}).
std::map<int, MixedHodgeStructure> standard_space(const std::string& kind, const std::vector<int>& params);

/// Punctured curve as the mixed cone of the Gysin map H^{*-2}(Y)(-1) -> H^*(X)
/// for Y = m points on a genus-g curve X. h2 (degree 2, a 2g x m matrix) is an
/// optional homotopy for the comparison square.
mhc::MHCMorphism punctured_curve_gysin(int genus, int points);
mhc::MixedHodgeComplexData punctured_curve_mhc(int genus, int points, const mhc::ConeHomotopies& h = {});

/// Stratum data of the punctured curve as an open smooth input.
OpenSmoothInput punctured_curve_input(int genus, int points);

/// Künneth: H^i(X × Y) = ⊕_{r+s=i} H^r(X) ⊗ H^s(Y).
std::map<int, MixedHodgeStructure> product(const std::map<int, MixedHodgeStructure>& x,
                                           const std::map<int, MixedHodgeStructure>& y);

/// Data of 0 -> H^i(X') -> H^i(Y') ⊕ H^i(X) -> H^i(Y) -> 0 for a proper
/// p: X' -> X that is an isomorphism off Y, with Y' = p^{-1}(Y) a normal
/// crossing divisor.
struct EmbeddedVarietyInput {
    int degree = 0;
    MixedHodgeStructure x_prime;
    MixedHodgeStructure x;
    MixedHodgeStructure y_prime;
    Mat i_prime_star;  ///< H^i(X') -> H^i(Y')
    Mat tr_p;          ///< H^i(X') -> H^i(X)
    std::optional<Mat> tr_p_y;    ///< H^i(Y') -> H^i(Y)
    std::optional<Mat> i_star;    ///< H^i(X) -> H^i(Y)
    std::optional<Mat> p_y_star;  ///< H^i(Y) -> H^i(Y')
};

struct EmbeddedVarietyResult {
    /// In H^i(Y) coordinates when the maps to H^i(Y) are given, otherwise in
    /// cokernel coordinates.
    MixedHodgeStructure h_y;
    MixedHodgeStructure cokernel;
    bool in_y_coordinates = false;
};
/// H^i(Y) as the cokernel of i'^* - Tr p. Throws InvalidInput when the
/// sequence is not short exact or p_Y^* has no retraction (Tr p)|_Y.
EmbeddedVarietyResult embedded_variety_mhs(const EmbeddedVarietyInput& input);

/// Line and conic in P^2 meeting in two points, resolved by blowing up both
/// points: the data of the sequence in degree i (0, 1 or 2).
EmbeddedVarietyInput line_conic_example(int degree);
/// The same curve Y as an NCD input (two P^1 meeting in two points).
NCDInput line_conic_ncd();
/// Y' for the resolved line and conic: strict transforms of both curves and
/// the two exceptional lines, forming a cycle of four P^1.
NCDInput line_conic_resolution_ncd();

}  // namespace hodgekit::geometry
