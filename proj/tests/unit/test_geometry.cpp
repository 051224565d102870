#include "doctest.h"
#include "support/oracles.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/geometry.hpp"

using namespace hodgekit;
using geometry::NCDInput;
using geometry::OpenSmoothInput;
using geometry::Stratum;
using hodge::HodgeNumbers;
using hodge::HodgeStructure;
using mhs::MixedHodgeStructure;

namespace {

using Dims = std::map<int, std::size_t>;

std::vector<HodgeStructure> p1() { return {HodgeStructure::tate(0), HodgeStructure::zero(1), HodgeStructure::tate(-1)}; }
std::vector<HodgeStructure> point() { return {HodgeStructure::tate(0)}; }
const std::map<int, Mat> kOne{{0, Mat{{1}}}};

NCDInput two_lines_one_point() {
    NCDInput in;
    in.levels.push_back({Stratum{"A", p1(), {}, {}}, Stratum{"B", p1(), {}, {}}});
    in.levels.push_back({Stratum{"AB", point(), {1, 0}, {kOne, kOne}}});
    return in;
}

/// Three lines in a plane, pairwise meeting in three distinct points.
NCDInput triangle() {
    NCDInput in;
    in.levels.push_back({Stratum{"A", p1(), {}, {}}, Stratum{"B", p1(), {}, {}}, Stratum{"C", p1(), {}, {}}});
    in.levels.push_back({Stratum{"AB", point(), {1, 0}, {kOne, kOne}}, Stratum{"BC", point(), {2, 1}, {kOne, kOne}},
                         Stratum{"AC", point(), {2, 0}, {kOne, kOne}}});
    return in;
}

/// H^1 of the nerve from the incidence matrix, by ranks.
std::size_t nerve_h1(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Mat inc(edges.size(), vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        inc(e, edges[e].first) = Scalar(-1);
        inc(e, edges[e].second) = Scalar(1);
    }
    return edges.size() - oracle::bareiss_rank(inc);
}

Dims dims_of(const std::map<int, HodgeStructure>& graded) {
    Dims out;
    for (const auto& [w, h] : graded)
        if (h.dim() > 0) out[w] = h.dim();
    return out;
}

Dims graded(const geometry::WeightGradedCohomology& c, int degree) {
    auto it = c.graded.find(degree);
    return it == c.graded.end() ? Dims{} : dims_of(it->second);
}

template <class Input>
Input negated(Input in) {
    for (auto& level : in.levels)
        for (auto& s : level)
            for (auto& m : s.maps)
                for (auto& [q, mat] : m) mat = -mat;
    return in;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

TEST_CASE("two lines meeting in a point") {
    const auto c = geometry::ncd_weight_cohomology(two_lines_one_point());
    CHECK(c.total_dim(0) == 1);
    CHECK(c.total_dim(1) == 0);
    CHECK(c.total_dim(2) == 2);
    CHECK(graded(c, 0) == Dims{{0, 1}});
    CHECK(graded(c, 2) == Dims{{2, 2}});
}

TEST_CASE("a triangle of lines has a weight zero class in H^1") {
    const auto c = geometry::ncd_weight_cohomology(triangle());
    CHECK(graded(c, 1) == Dims{{0, nerve_h1(3, {{0, 1}, {1, 2}, {0, 2}})}});
    CHECK(graded(c, 1) == Dims{{0, 1}});
    CHECK(c.total_dim(0) == 1);
    CHECK(c.total_dim(2) == 3);
}

TEST_CASE("a single smooth component is pure") {
    NCDInput in;
    in.levels.push_back({Stratum{"X", p1(), {}, {}}});
    const auto c = geometry::ncd_weight_cohomology(in);
    CHECK(graded(c, 0) == Dims{{0, 1}});
    CHECK(graded(c, 2) == Dims{{2, 1}});
    CHECK(c.graded.at(2).at(2) == HodgeStructure::tate(-1));
}

TEST_CASE("NCD weights lie between 0 and the degree") {
    for (const NCDInput& in : {two_lines_one_point(), triangle(), geometry::line_conic_ncd(),
                               geometry::line_conic_resolution_ncd()}) {
        const auto c = geometry::ncd_weight_cohomology(in);
        for (const auto& [i, table] : c.graded)
            for (const auto& [w, h] : table) {
                CHECK(w >= 0);
                CHECK(w <= i);
            }
    }
}

TEST_CASE("bad NCD data is rejected") {
    NCDInput in = two_lines_one_point();
    in.levels[1][0].maps[0] = {{0, Mat{{Scalar::i()}}}};
    CHECK_THROWS_AS(geometry::ncd_weight_cohomology(in), InvalidInput);
    in = two_lines_one_point();
    in.levels[1][0].maps[0] = {{0, Mat{{1, 1}}}};
    CHECK_THROWS_AS(geometry::ncd_weight_cohomology(in), InvalidInput);
}

TEST_CASE("open curves: P^1 and genus g curves minus m points") {
    for (int g = 0; g <= 2; ++g)
        for (int m = 0; m <= 4; ++m) {
            CAPTURE(g);
            CAPTURE(m);
            const auto c = geometry::open_weight_cohomology(geometry::punctured_curve_input(g, m));
            Dims h1;
            if (g > 0) h1[1] = static_cast<std::size_t>(2 * g);
            if (m > 1) h1[2] = static_cast<std::size_t>(m - 1);
            CHECK(graded(c, 1) == h1);
            CHECK(c.total_dim(2) == (m == 0 ? 1u : 0u));
            for (const auto& [i, table] : c.graded)
                for (const auto& [w, h] : table) {
                    CHECK(w >= i);
                    CHECK(w <= 2 * i);
                    for (const auto& [pq, d] : hodge::hodge_numbers(h)) {
                        CHECK(pq.first >= 0);
                        CHECK(pq.first <= i);
                        CHECK(pq.second >= 0);
                        CHECK(pq.second <= i);
                    }
                }
            // The front-end and the mixed cone agree on the graded pieces.
            if (m > 0) {
                const MixedHodgeStructure h = mhc::cohomology_mhs(geometry::punctured_curve_mhc(g, m), 1);
                CHECK(mhs::weight_dims(h) == h1);
            }
        }
}

TEST_CASE("global sign flips leave every dimension unchanged") {
    for (const NCDInput& in : {triangle(), geometry::line_conic_ncd(), geometry::line_conic_resolution_ncd()}) {
        const auto a = geometry::ncd_weight_cohomology(in), b = geometry::ncd_weight_cohomology(negated(in));
        CHECK(a.e1 == b.e1);
        CHECK(a.e2 == b.e2);
    }
    const auto in = geometry::punctured_curve_input(1, 3);
    CHECK(geometry::open_weight_cohomology(in).e2 == geometry::open_weight_cohomology(negated(in)).e2);
}

TEST_CASE("projective spaces") {
    for (int n = 0; n <= 4; ++n) {
        const auto h = geometry::standard_space("projective_space", {n});
        for (int k = 0; k <= 2 * n; ++k) {
            if (k % 2 == 1) {
                CHECK((h.count(k) == 0 || h.at(k).dim() == 0));
                continue;
            }
            REQUIRE(h.count(k));
            CHECK(mhs::hodge_numbers(h.at(k)) == HodgeNumbers{{{k / 2, k / 2}, 1}});
        }
    }
    CHECK_THROWS_AS(geometry::standard_space("projective_space", {}), InvalidInput);
    CHECK_THROWS_AS(geometry::standard_space("sphere", {2}), InvalidInput);
}

TEST_CASE("tori: h^{p,q}(H^j) = C(r,p) C(r,q)") {
    for (int r = 0; r <= 3; ++r) {
        const auto h = geometry::standard_space("torus", {r});
        for (int j = 0; j <= 2 * r; ++j) {
            HodgeNumbers expected;
            for (int p = 0; p <= j; ++p) {
                const long d = binom(r, p) * binom(r, j - p);
                if (d > 0) expected[{p, j - p}] = static_cast<std::size_t>(d);
            }
            REQUIRE(h.count(j));
            CHECK(mhs::is_valid(h.at(j)));
            CHECK(mhs::hodge_numbers(h.at(j)) == expected);
        }
    }
}

TEST_CASE("punctured curves as standard spaces") {
    const auto one = geometry::standard_space("punctured_curve", {1, 1});
    CHECK(mhs::weight_dims(one.at(1)) == Dims{{1, 2}});
    const auto three = geometry::standard_space("punctured_curve", {1, 3});
    CHECK(mhs::weight_dims(three.at(1)) == Dims{{1, 2}, {2, 2}});
    CHECK_THROWS_AS(geometry::standard_space("punctured_curve", {-1, 2}), InvalidInput);
}

TEST_CASE("Kunneth for products of standard spaces") {
    const auto x = geometry::standard_space("torus", {1});
    const auto y = geometry::standard_space("punctured_curve", {0, 3});
    const auto xy = geometry::product(x, y);
    for (int i = 0; i <= 4; ++i) {
        HodgeNumbers expected;
        for (const auto& [r, hx] : x)
            for (const auto& [s, hy] : y)
                if (r + s == i)
                    for (const auto& [a, m] : mhs::hodge_numbers(hx))
                        for (const auto& [b, n] : mhs::hodge_numbers(hy))
                            expected[{a.first + b.first, a.second + b.second}] += m * n;
        const HodgeNumbers got = xy.count(i) ? mhs::hodge_numbers(xy.at(i)) : HodgeNumbers{};
        CHECK(got == expected);
        if (xy.count(i)) CHECK(mhs::is_valid(xy.at(i)));
    }
    // P^1 x P^1: H^2 has rank 2, type (1,1).
    const auto pp = geometry::product(geometry::standard_space("projective_space", {1}),
                                      geometry::standard_space("projective_space", {1}));
    CHECK(mhs::hodge_numbers(pp.at(2)) == HodgeNumbers{{{1, 1}, 2}});
}

TEST_CASE("line and conic: cokernel construction matches the NCD front-end") {
    const auto ncd = geometry::ncd_weight_cohomology(geometry::line_conic_ncd());
    for (int i = 0; i <= 2; ++i) {
        CAPTURE(i);
        const auto r = geometry::embedded_variety_mhs(geometry::line_conic_example(i));
        CHECK(r.in_y_coordinates);
        CHECK(mhs::is_valid(r.h_y));
        CHECK(mhs::weight_dims(r.h_y) == graded(ncd, i));
        CHECK(mhs::weight_dims(r.cokernel) == graded(ncd, i));
        for (const auto& [w, d] : mhs::weight_dims(r.h_y)) {
            CHECK(w >= 0);
            CHECK(w <= i);
        }
    }
    CHECK(graded(ncd, 1) == Dims{{0, 1}});
    CHECK(graded(ncd, 2) == Dims{{2, 2}});
    const auto resolved = geometry::ncd_weight_cohomology(geometry::line_conic_resolution_ncd());
    CHECK(graded(resolved, 1) == Dims{{0, 1}});
    CHECK(graded(resolved, 2) == Dims{{2, 4}});
}

TEST_CASE("embedded varieties: identity resolution and inconsistent data") {
    // X' = X, p = id, Y' = Y: the cokernel is H^i(Y).
    geometry::EmbeddedVarietyInput id;
    id.degree = 2;
    id.x_prime = MixedHodgeStructure::from_pure(HodgeStructure::tate(-1));
    id.x = id.x_prime;
    id.y_prime = mhs::mhs_direct_sum(id.x_prime, id.x_prime);
    id.i_prime_star = Mat{{1}, {1}};
    id.tr_p = Mat{{1}};
    const auto r = geometry::embedded_variety_mhs(id);
    CHECK_FALSE(r.in_y_coordinates);
    CHECK(mhs::weight_dims(r.h_y) == Dims{{2, 2}});

    auto bad = geometry::line_conic_example(2);
    bad.tr_p_y = Mat{{1, 0, 1, 1}, {0, 1, 1, 0}};
    CHECK_THROWS_AS(geometry::embedded_variety_mhs(bad), InvalidInput);
    bad = geometry::line_conic_example(2);
    bad.i_prime_star = Mat{{1, 0, 0}, {2, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(geometry::embedded_variety_mhs(bad), InvalidInput);
    CHECK_THROWS_AS(geometry::line_conic_example(3), InvalidInput);
}
