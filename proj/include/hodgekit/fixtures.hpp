#pragma once

#include "hodgekit/geometry.hpp"
#include "hodgekit/mhc.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hodgekit::fixtures {

using hodge::HodgeNumbers;
using mhs::MixedHodgeStructure;

/// Seeded source of small exact scalars and matrices.
class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }
    Scalar rational(int bound = 2);
    Scalar gaussian(int bound = 2);
    Mat rational_matrix(std::size_t rows, std::size_t cols, int bound = 2);
    Mat gaussian_matrix(std::size_t rows, std::size_t cols, int bound = 2);
    /// Product of random unit lower and upper triangular matrices.
    Mat invertible_rational(std::size_t n);
    Mat invertible_gaussian(std::size_t n);
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Split MHS with the given Hodge numbers (h^{p,q} = h^{q,p} required).
/// Coordinates are grouped by weight, ascending; a conjugate pair of types
/// (p,q), (q,p) uses e_a ± i e_b.
struct BigradedModel {
    MixedHodgeStructure mhs;
    std::map<hodge::Bidegree, Subspace> pieces;
    std::vector<int> coordinate_weight;
};
BigradedModel bigraded_model(const HodgeNumbers& h);

struct MhsOptions {
    std::size_t max_dim = 8;
    int min_weights = 3;
    int max_weights = 4;
    bool non_split = true;     ///< apply a random W-unipotent complex perturbation to F
    bool base_change = true;   ///< apply a random rational change of coordinates
};
HodgeNumbers random_hodge_numbers(Random& rng, const MhsOptions& opt);
MixedHodgeStructure random_mhs(Random& rng, const MhsOptions& opt = {});
/// Random pure Hodge structure of the given weight and dimension at most max_dim.
hodge::HodgeStructure random_hs(Random& rng, int weight, std::size_t max_dim, bool base_change = true);

/// Morphisms: c·id blocks between shared summands, inclusions of W_k,
/// projections to H/W_k and their composites, all under base changes.
struct MorphismSample {
    std::string kind;
    mhs::MHSMorphism morphism;
};
MorphismSample random_morphism(Random& rng, std::size_t max_dim = 8);

struct ComplexOptions {
    int degrees = 3;
    std::size_t max_dim = 4;
    int filtration_span = 3;
    bool strict = false;  ///< graded (split) construction, so d is strict
};
/// Decreasing filtered complex with filtration by generated subcomplexes.
ss::FilteredComplex random_filtered_complex(Random& rng, const ComplexOptions& opt = {});
/// Complex with W (increasing) and F (decreasing), both by generated subcomplexes.
ss::BiFilteredComplex random_bifiltered_complex(Random& rng, const ComplexOptions& opt = {});

/// K^0 = <y>, K^1 = <z, f>, dy = z - f, z in W_m, f and y in W_{m+1}, F^s = <f>
/// in degree 1: F_d is strictly smaller than F_d* on E_2 at (-m, 1+m).
ss::BiFilteredComplex adversarial_gadget(int lo, int m, int s);
/// Gadget summed with a random bifiltered complex and base-changed.
struct AdversarialSample {
    ss::BiFilteredComplex complex;
    std::pair<int, int> term;  ///< decreasing-notation (p, q) of the gadget's E_2 term
    int s = 0;                 ///< F index where F_d ≠ F_d*
};
AdversarialSample random_adversarial(Random& rng);

/// Pure Hodge structure in one degree as a mixed Hodge complex with zero
/// differential, W trivial at `w_index`, and comparison `beta` (identity when
/// empty): K_C = K_Q with F transported by beta.
mhc::MixedHodgeComplexData pure_mhc(const hodge::HodgeStructure& h, int degree, int w_index, const Mat& beta = {});
/// Rational change of coordinates on K_Q (g[n] per degree) and a complex one
/// on K_C (c[n] per degree); missing degrees keep their coordinates.
mhc::MixedHodgeComplexData base_change(const mhc::MixedHodgeComplexData& m, const std::map<int, Mat>& g,
                                       const std::map<int, Mat>& c);
/// c·id-block morphism A -> B between sums of copies of one pure Hodge
/// structure, realized in degree 0 with random complex comparisons.
mhc::MHCMorphism random_cone_morphism(Random& rng);
/// Direct sums of shifts of mixed cones over type-(0,0) morphisms of pure
/// Hodge structures, followed by a random base change.
mhc::MixedHodgeComplexData random_mhc(Random& rng);

}  // namespace hodgekit::fixtures
