#include "doctest.h"
#include "support/oracles.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/fixtures.hpp"
#include "hodgekit/hodge.hpp"

using namespace hodgekit;
using filt::Direction;
using filt::Filtration;
using hodge::HodgeNumbers;
using hodge::HodgeStructure;

namespace {

Scalar I() { return Scalar::i(); }

/// Weight-1 structure on Q(i)^2 with F^1 spanned by v.
HodgeStructure weight_one(const Vec& v) {
    return HodgeStructure(1, Filtration::decreasing(2, {{0, Subspace::full(2)}, {1, Subspace::span({v}, 2)},
                                                         {2, Subspace::zero(2)}}));
}

/// h^{p,q} = dim F^p ∩ conj(F)^q by ranks.
HodgeNumbers oracle_hodge_numbers(const HodgeStructure& h) {
    HodgeNumbers out;
    const auto [lo, hi] = h.F().index_range();
    for (int p = lo - 1; p <= hi + 1; ++p) {
        const int q = h.weight() - p;
        const std::size_t d =
            oracle::intersection_dim(h.F().at(p).basis(), h.F().at(q).basis().conj());
        if (d > 0) out[{p, q}] = d;
    }
    return out;
}

HodgeNumbers convolve(const HodgeNumbers& a, const HodgeNumbers& b) {
    HodgeNumbers out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out[{x.first + y.first, x.second + y.second}] += m * n;
    return out;
}

/// H^{2k}(P^n) = Q(-k).
HodgeStructure projective_piece(int k) { return HodgeStructure::tate(-k); }

}  // namespace

TEST_CASE("Tate structures") {
    const HodgeStructure t = HodgeStructure::tate(1);
    CHECK(t.weight() == -2);
    CHECK(t.dim() == 1);
    CHECK(hodge::hodge_numbers(t) == HodgeNumbers{{{-1, -1}, 1}});
    CHECK(hodge::hodge_numbers(hodge::tate_twist(HodgeStructure::tate(0), -2)) == HodgeNumbers{{{2, 2}, 1}});
    CHECK(hodge::tate_twist(HodgeStructure::tate(0), 3) == HodgeStructure::tate(3));
}

TEST_CASE("weight one structures: opposed and degenerate lines") {
    const HodgeStructure good = weight_one(Vec{I(), 1});
    CHECK(hodge::is_valid(good));
    CHECK(hodge::hodge_numbers(good) == HodgeNumbers{{{1, 0}, 1}, {{0, 1}, 1}});

    const HodgeStructure bad = weight_one(Vec{1, 1});
    CHECK_FALSE(hodge::is_valid(bad));
    CHECK_THROWS_AS(hodge::validate_hs(bad), InvalidInput);
    try {
        hodge::validate_hs(bad);
    } catch (const InvalidInput& e) {
        CHECK_FALSE(e.witness().empty());
    }
}

TEST_CASE("Weil operator acts by i^{p-q} on each piece") {
    fixtures::Random rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = rng.uniform(-1, 4);
        const HodgeStructure h = fixtures::random_hs(rng, w, 5);
        const Mat c = hodge::weil_operator(h);
        CHECK(c.is_real());
        const hodge::Bigrading bg = hodge::validate_hs(h);
        for (const auto& [p, piece] : bg.pieces)
            for (std::size_t r = 0; r < piece.dim(); ++r) {
                const Vec v = piece.basis().row(r);
                CHECK(c.apply(v) == Scalar::i_pow(2 * p - w) * v);
            }
        // C^2 = (-1)^w
        CHECK(c * c == Scalar(w % 2 == 0 ? 1 : -1) * Mat::identity(h.dim()));
    }
}

TEST_CASE("Hodge numbers match the rank oracle and are symmetric") {
    fixtures::Random rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const HodgeStructure h = fixtures::random_hs(rng, rng.uniform(-2, 4), 6);
        const HodgeNumbers hn = hodge::hodge_numbers(h);
        CHECK(hn == oracle_hodge_numbers(h));
        std::size_t total = 0;
        for (const auto& [pq, d] : hn) {
            CHECK(pq.first + pq.second == h.weight());
            CHECK(hn.at({pq.second, pq.first}) == d);
            total += d;
        }
        CHECK(total == h.dim());
    }
}

TEST_CASE("tensor, dual, twist and hom of Hodge structures") {
    fixtures::Random rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const HodgeStructure a = fixtures::random_hs(rng, rng.uniform(0, 2), 3);
        const HodgeStructure b = fixtures::random_hs(rng, rng.uniform(-1, 2), 3);
        const HodgeStructure t = hodge::hs_tensor(a, b);
        CHECK(t.weight() == a.weight() + b.weight());
        CHECK(hodge::hodge_numbers(t) == convolve(hodge::hodge_numbers(a), hodge::hodge_numbers(b)));

        const HodgeStructure d = hodge::hs_dual(a);
        CHECK(d.weight() == -a.weight());
        HodgeNumbers expected_dual;
        for (const auto& [pq, n] : hodge::hodge_numbers(a)) expected_dual[{-pq.first, -pq.second}] = n;
        CHECK(hodge::hodge_numbers(d) == expected_dual);

        const int m = rng.uniform(-2, 2);
        HodgeNumbers expected_twist;
        for (const auto& [pq, n] : hodge::hodge_numbers(a)) expected_twist[{pq.first - m, pq.second - m}] = n;
        CHECK(hodge::hodge_numbers(hodge::tate_twist(a, m)) == expected_twist);
        CHECK(hodge::tate_twist(a, m).weight() == a.weight() - 2 * m);

        // The identity is a rational (0,0) element of Hom(a, a).
        const HodgeStructure e = hodge::hs_hom(a, a);
        CHECK(hodge::is_valid(e));
        const Vec id = hodge::flatten_hom(Mat::identity(a.dim()));
        CHECK(e.F().at(0).contains(id));
    }
}

TEST_CASE("polarization of a weight one structure") {
    const HodgeStructure h = weight_one(Vec{I(), 1});
    const Mat q{{0, 1}, {-1, 0}};
    const auto rep = hodge::check_polarization(h, {q});
    CHECK(rep.parity_ok);
    CHECK(rep.nondegenerate);
    CHECK(rep.polarized());

    const auto lower = hodge::check_polarization(weight_one(Vec{-I(), 1}), {q});
    CHECK_FALSE(lower.positive);
    CHECK_FALSE(lower.polarized());

    const auto neg = hodge::check_polarization(h, {-q});
    CHECK_FALSE(neg.positive);
    CHECK(neg.failing.has_value());

    CHECK_THROWS_AS(hodge::check_polarization(h, {Mat{{1, 0}, {0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(hodge::check_polarization(h, {Mat{{0, 0}, {0, 0}}}), InvalidInput);
}

TEST_CASE("signature of a polarized weight two structure") {
    // h^{2,0} = h^{1,1} = h^{0,2} = 1, F^2 = <(1, i, 0)>.
    const Subspace f2 = Subspace::span({Vec{1, I(), 0}}, 3);
    const Subspace f1 = Subspace::span({Vec{1, I(), 0}, Vec{0, 0, 1}}, 3);
    const HodgeStructure h(2, Filtration::decreasing(3, {{0, Subspace::full(3)}, {1, f1}, {2, f2}, {3, Subspace::zero(3)}}));
    const auto rep = hodge::check_polarization(h, {Mat::diagonal({-1, -1, 1})});
    CHECK(rep.polarized());
    CHECK(rep.signature == Inertia{1, 2, 0});
    REQUIRE(rep.expected_signature.has_value());
    CHECK(*rep.expected_signature == rep.signature);

    const auto wrong = hodge::check_polarization(h, {Mat::diagonal({1, 1, 1})});
    CHECK_FALSE(wrong.polarized());
}

TEST_CASE("hard Lefschetz on P^2 and on a curve") {
    hodge::LefschetzPackage p2;
    p2.n_dim = 2;
    p2.h = {projective_piece(0), HodgeStructure::zero(1), projective_piece(1), HodgeStructure::zero(3),
            projective_piece(2)};
    p2.l = {Mat{{1}}, Mat(0, 0), Mat{{1}}};
    auto rep = hodge::lefschetz_decompose(p2);
    CHECK(rep.hard_lefschetz);
    CHECK(rep.l_type_ok);
    CHECK(rep.decomposition_ok);
    CHECK(rep.primitive.at(0).dim() == 1);
    CHECK(rep.primitive.at(2).dim() == 0);

    p2.l[2] = Mat{{0}};
    rep = hodge::lefschetz_decompose(p2);
    CHECK_FALSE(rep.hard_lefschetz);
    CHECK(rep.failing_i == 2);

    hodge::LefschetzPackage curve;
    curve.n_dim = 1;
    curve.h = {projective_piece(0), weight_one(Vec{I(), 1}), projective_piece(1)};
    curve.l = {Mat{{0}}};
    rep = hodge::lefschetz_decompose(curve);
    CHECK_FALSE(rep.hard_lefschetz);
    CHECK(rep.failing_i == 1);

    curve.l = {Mat{{1}}};
    curve.lambda = std::vector<Mat>{Mat{{1}}};
    rep = hodge::lefschetz_decompose(curve);
    CHECK(rep.hard_lefschetz);
    CHECK(rep.primitive.at(1).dim() == 2);
    CHECK(rep.sl2_ok == true);
    curve.lambda = std::vector<Mat>{Mat{{2}}};
    CHECK(hodge::lefschetz_decompose(curve).sl2_ok == false);
}

TEST_CASE("Riemann relations for an elliptic period matrix") {
    CHECK(hodge::riemann_relations(Mat{{I()}}, Mat{{1}}).holds());
    const auto flat = hodge::riemann_relations(Mat{{1}}, Mat{{1}});
    CHECK(flat.first);
    CHECK_FALSE(flat.second);
    CHECK(hodge::riemann_relations(Scalar::i() * Mat::identity(2), Mat::identity(2)).holds());
    CHECK(hodge::riemann_relations(Mat{{1}}, Mat{{-I()}}).holds());
    const auto upper = hodge::riemann_relations(Mat{{1}}, Mat{{I()}});
    CHECK(upper.first);
    CHECK_FALSE(upper.second);
    // Two-dimensional: symmetric, definite block.
    const Mat m2{{-I(), 0}, {0, Scalar(0, -2)}};
    CHECK(hodge::riemann_relations(Mat::identity(2), m2).holds());
    const Mat skew{{-I(), 1}, {0, -I()}};
    CHECK_FALSE(hodge::riemann_relations(Mat::identity(2), skew).first);
}

TEST_CASE("Hodge numbers are invariant under rational base change") {
    fixtures::Random rng(14);
    for (int trial = 0; trial < 15; ++trial) {
        const HodgeStructure h = fixtures::random_hs(rng, rng.uniform(0, 3), 5, false);
        const Mat g = rng.invertible_rational(h.dim());
        const HodgeStructure moved(h.weight(), h.F().image_under(g));
        CHECK(hodge::is_valid(moved));
        CHECK(hodge::hodge_numbers(moved) == hodge::hodge_numbers(h));
    }
    // A complex change of coordinates generally breaks opposedness.
    const HodgeStructure h = weight_one(Vec{I(), 1});
    const Mat g{{-I(), 0}, {0, 1}};  // sends the F^1 line to a real one
    CHECK_FALSE(hodge::is_valid(HodgeStructure(1, h.F().image_under(g))));
}
