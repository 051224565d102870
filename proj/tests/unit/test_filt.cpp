#include "doctest.h"
#include "support/oracles.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/filtration.hpp"

#include <map>

using namespace hodgekit;
using filt::Direction;
using filt::Filtration;

namespace {

Subspace span_rows(std::initializer_list<Vec> rows, std::size_t n) { return Subspace::span(rows, n); }

Filtration complete_flag(std::size_t n) {
    std::vector<std::pair<int, Subspace>> steps;
    for (std::size_t p = 0; p <= n; ++p) {
        std::vector<Vec> rows;
        for (std::size_t k = p; k < n; ++k) rows.push_back(unit_vector(n, k));
        steps.emplace_back(static_cast<int>(p), Subspace::span(rows, n));
    }
    return Filtration::decreasing(n, steps);
}

/// Random decreasing filtration: a random complete flag, then some steps merged.
Filtration random_filtration(oracle::Rng& rng, std::size_t n, int lo) {
    const Mat basis = rng.rational_matrix(n, n, 2);
    std::map<int, Subspace> steps;
    int idx = lo;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Vec> rows;
        for (std::size_t j = k; j < n; ++j) rows.push_back(basis.row(j));
        steps.insert_or_assign(idx, Subspace::span(rows, n));
        idx += rng.uniform(0, 1);
    }
    return Filtration::decreasing(n, {steps.begin(), steps.end()});
}

}  // namespace

TEST_CASE("canonical form of filtrations") {
    const Subspace line = span_rows({Vec{1, 0}}, 2);
    const Filtration a = Filtration::decreasing(2, {{3, line}});
    const Filtration b = Filtration::decreasing(2, {{1, Subspace::full(2)}, {3, line}, {4, line}, {6, Subspace::zero(2)}});
    CHECK(a.at(2).is_full());
    CHECK(a.at(3) == line);
    CHECK(a.at(4).is_zero());
    CHECK(b.at(5) == line);
    CHECK(b.at(2).is_full());
    CHECK(a.jumps() == std::vector<int>{2, 3});
    CHECK(b.jumps() == std::vector<int>{2, 5});

    const Filtration w = Filtration::increasing(2, {{0, line}});
    CHECK(w.at(-1).is_zero());
    CHECK(w.at(0) == line);
    CHECK(w.at(1).is_full());
    CHECK(w.jumps() == std::vector<int>{0, 1});

    CHECK_THROWS_AS(Filtration::decreasing(2, {{0, line}, {1, span_rows({Vec{0, 1}}, 2)}}), InvalidInput);
    CHECK_THROWS_AS(Filtration::decreasing(2, {{0, Subspace::full(3)}}), InvalidInput);
}

TEST_CASE("shift laws") {
    oracle::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const Filtration f = random_filtration(rng, 3, rng.uniform(-2, 2));
        const int n = rng.uniform(-3, 3);
        const Filtration fs = f.shift(n);
        const Filtration w = f.flipped();
        const Filtration ws = w.shift(n);
        for (int p = -8; p <= 8; ++p) {
            CHECK(fs.at(p) == f.at(n + p));
            CHECK(w.at(p) == f.at(-p));
            CHECK(ws.at(p) == w.at(p - n));
        }
        CHECK(w.flipped() == f);
    }
}

TEST_CASE("induced filtrations on a subspace and the quotient") {
    const Filtration f = complete_flag(3);
    const auto full = filt::induced(f, Subspace::full(3));
    CHECK(full.on_sub == f);
    CHECK(full.quotient.dim() == 0);
    const auto none = filt::induced(f, Subspace::zero(3));
    CHECK(none.on_sub.ambient_dim() == 0);
    CHECK(none.on_quotient == f);

    const Filtration two = Filtration::decreasing(3, {{0, Subspace::full(3)}, {1, span_rows({Vec{1, 0, 0}, Vec{0, 1, 0}}, 3)}, {2, Subspace::zero(3)}});
    const Subspace b = span_rows({Vec{1, 2, 3}}, 3);
    const auto ind = filt::induced(two, b);
    for (int p = -1; p <= 3; ++p)
        CHECK(ind.on_sub.at(p).dim() + ind.on_quotient.at(p).dim() == two.at(p).dim());
    CHECK_THROWS_AS(filt::induced(two, Subspace::full(2)), InvalidInput);
}

TEST_CASE("graded pieces") {
    const Filtration one = Filtration::trivial(Direction::Decreasing, 3, 4);
    const auto g1 = filt::gr(one);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].index == 4);
    CHECK(g1[0].piece.dim() == 3);

    const auto flag = filt::gr(complete_flag(3));
    REQUIRE(flag.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(flag[k].index == static_cast<int>(k));
        CHECK(flag[k].piece.dim() == 1);
    }

    oracle::Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const Filtration f = random_filtration(rng, 4, 0);
        std::size_t total = 0;
        for (const auto& g : filt::gr(f)) {
            const std::size_t expected = oracle::bareiss_rank(f.at(g.index).basis()) -
                                         oracle::bareiss_rank(f.at(g.index + 1).basis());
            CHECK(g.piece.dim() == expected);
            total += g.piece.dim();
        }
        CHECK(total == 4);
    }
}

TEST_CASE("strictness") {
    const Filtration f = complete_flag(2);
    CHECK(filt::is_strict(filt::FilteredMap(Mat::identity(2), f, f)).strict);

    const Filtration at0 = Filtration::trivial(Direction::Decreasing, 1, 0);
    const Filtration at1 = Filtration::trivial(Direction::Decreasing, 1, 1);
    const filt::StrictnessReport r = filt::is_strict(filt::FilteredMap(Mat::identity(1), at0, at1));
    CHECK_FALSE(r.strict);
    CHECK(*r.index == 1);
    CHECK(r.witness == Vec{1});
    CHECK_THROWS_AS(filt::FilteredMap(Mat::identity(1), at1, at0), InvalidInput);
}

TEST_CASE("strictness is equivalent to exactness of the graded sequence") {
    oracle::Rng rng(23);
    int strict_seen = 0, nonstrict_seen = 0;
    for (int t = 0; t < 40; ++t) {
        const Filtration a = random_filtration(rng, 3, 0);
        const Filtration b = random_filtration(rng, 3, 0);
        // A filtered map: send a basis adapted to a into b step by step.
        Mat m(3, 3);
        for (int p = 0; p <= 3 && t % 4 != 0; ++p) {
            const Subspace src = a.at(p), dst = b.at(p + rng.uniform(0, 1));
            for (std::size_t k = 0; k < src.dim() && dst.dim() > 0; ++k) {
                Mat piece(3, 3);
                const Vec target = dst.basis().row(k % dst.dim());
                const Vec from = src.basis().row(k);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) piece(i, j) = target[i] * from[j];
                if (filt::is_compatible(m + piece, a, b)) m += piece;
            }
        }
        if (!filt::is_compatible(m, a, b)) continue;
        const bool strict = filt::is_strict(m, a, b).strict;
        strict ? ++strict_seen : ++nonstrict_seen;
        const Subspace ker = kernel_space(m);
        const Subspace im = image(m);
        const auto ind_ker = filt::induced(a, ker);
        const auto ind_im = filt::induced(b, im);
        bool exact = true;
        for (int p = -1; p <= 5; ++p) {
            const std::size_t gk = ind_ker.on_sub.gr(p).dim();
            const std::size_t ga = a.gr(p).dim();
            const std::size_t gb = b.gr(p).dim();
            const std::size_t gc = ind_im.on_quotient.gr(p).dim();
            // Gr(f) restricted to degree p; exactness forces rank(Gr f) = ga - gk = gb - gc.
            const Subquotient sa = a.gr(p), sb = b.gr(p);
            Mat grf(sb.dim(), sa.dim());
            const Mat reps = sa.representatives();
            for (std::size_t j = 0; j < sa.dim(); ++j) {
                const Vec img = m.apply(reps.row(j));
                const Vec c = b.at(p).contains(img) ? sb.coords(img) : Vec(sb.dim());
                for (std::size_t i = 0; i < sb.dim(); ++i) grf(i, j) = c[i];
            }
            const std::size_t rk = oracle::bareiss_rank(grf);
            if (ga != gk + rk || gb != gc + rk) exact = false;
        }
        CHECK(exact == strict);
    }
    CHECK(strict_seen > 0);
    CHECK(nonstrict_seen > 0);
}

TEST_CASE("two-filtration graded table") {
    const Filtration flag = complete_flag(3);
    const auto t = filt::two_filtration_gr(flag, flag);
    CHECK(t.g_of_f.size() == 3);
    for (const auto& [mn, d] : t.g_of_f) {
        CHECK(mn.first == mn.second);
        CHECK(d == 1);
    }
    const Filtration one = Filtration::trivial(Direction::Decreasing, 3, 2);
    const auto t2 = filt::two_filtration_gr(one, flag);
    for (const auto& [mn, d] : t2.g_of_f) {
        CHECK(mn.first == 2);
        CHECK(d == flag.gr(mn.second).dim());
    }
    oracle::Rng rng(31);
    for (int t3 = 0; t3 < 20; ++t3) {
        const auto r = filt::two_filtration_gr(random_filtration(rng, 4, 0), random_filtration(rng, 4, -1));
        CHECK(r.g_of_f == r.f_of_g);
    }
}

TEST_CASE("opposed filtrations") {
    // A = A^{1,0} ⊕ A^{0,1} with F^1 = A^{1,0}, G^1 = A^{0,1}.
    const Subspace a10 = span_rows({Vec{1, 0}}, 2), a01 = span_rows({Vec{0, 1}}, 2);
    const Filtration f = Filtration::decreasing(2, {{0, Subspace::full(2)}, {1, a10}, {2, Subspace::zero(2)}});
    const Filtration g = Filtration::decreasing(2, {{0, Subspace::full(2)}, {1, a01}, {2, Subspace::zero(2)}});
    const auto rep = filt::check_n_opposite(f, g, 1);
    REQUIRE(rep.opposite);
    CHECK(rep.pieces.at({1, 0}) == a10);
    CHECK(rep.pieces.at({0, 1}) == a01);

    CHECK_FALSE(filt::check_n_opposite(f, f, 1).opposite);

    const Scalar i = Scalar::i();
    const Subspace v = span_rows({Vec{i, 1}}, 2);
    const Filtration h = Filtration::decreasing(2, {{0, Subspace::full(2)}, {1, v}, {2, Subspace::zero(2)}});
    const auto hv = filt::check_n_opposite(h, h.conj(), 1);
    REQUIRE(hv.opposite);
    CHECK(hv.pieces.at({1, 0}) == v);
    CHECK(intersect(h.at(1), h.conj().at(1)).is_zero());
}

TEST_CASE("opposed filtrations recover F as a sum of pieces") {
    oracle::Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        const Mat basis = rng.gaussian_matrix(4, 4, 2);
        if (rank(basis) < 4) continue;
        // Pieces A^{p,3-p}, p = 0..3, one basis vector each.
        std::vector<std::pair<int, Subspace>> fs, gs;
        for (int p = 0; p <= 4; ++p) {
            std::vector<Vec> fr, gr;
            for (int k = p; k < 4; ++k) fr.push_back(basis.row(static_cast<std::size_t>(k)));
            for (int k = 0; k < 4 - p; ++k) gr.push_back(basis.row(static_cast<std::size_t>(k)));
            fs.emplace_back(p, Subspace::span(fr, 4));
            gs.emplace_back(p, Subspace::span(gr, 4));
        }
        const Filtration f = Filtration::decreasing(4, fs), g = Filtration::decreasing(4, gs);
        const auto rep = filt::check_n_opposite(f, g, 3);
        REQUIRE(rep.opposite);
        for (int p = 0; p <= 4; ++p) {
            Subspace acc = Subspace::zero(4);
            for (const auto& [pq, s] : rep.pieces)
                if (pq.first >= p) acc = sum(acc, s);
            CHECK(acc == f.at(p));
        }
    }
}

TEST_CASE("tensor, dual and direct sum of filtrations") {
    const Filtration a = complete_flag(2);
    const Filtration t = filt::tensor(a, a);
    CHECK(t.ambient_dim() == 4);
    CHECK(t.at(0).is_full());
    CHECK(t.at(1).dim() == 3);
    CHECK(t.at(2).dim() == 1);
    CHECK(t.at(3).is_zero());

    const Filtration d = filt::dual(a);
    for (int p = -3; p <= 3; ++p) CHECK(d.at(p).dim() + a.at(1 - p).dim() == 2);
    CHECK(filt::dual(d) == a);

    const Filtration s = filt::direct_sum(a, Filtration::trivial(Direction::Decreasing, 1, 5));
    CHECK(s.at(1).dim() == 2);
    CHECK(s.at(5).dim() == 1);
    CHECK(s.at(6).is_zero());
}
