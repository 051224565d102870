// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values come from closed formulas or from the rank oracles in
// support/oracles.hpp, never from the code under test.

#include "support/oracles.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/fixtures.hpp"
#include "hodgekit/geometry.hpp"
#include "hodgekit/mhc.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hodgekit;
using filt::Filtration;
using hodge::HodgeNumbers;
using hodge::HodgeStructure;
using mhs::MixedHodgeStructure;
using ss::ChainMap;
using ss::Complex;

namespace {

using Dims = std::map<int, std::size_t>;

/// Collects failed checks; a criterion passes when none were recorded.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream note;
    void operator()(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() >= 5) failures.back() = what + " (and more)";
    }
};

std::size_t orank(const Mat& m) { return oracle::bareiss_rank(m); }

std::size_t oracle_h(const Complex& k, int n) { return k.dim(n) - orank(k.d(n)) - orank(k.d(n - 1)); }

std::size_t at(const Dims& d, int k) {
    auto it = d.find(k);
    return it == d.end() ? 0 : it->second;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Scalar I() { return Scalar::i(); }

/// h^{p,q} of an MHS by ranks, with dim(F^p ∩ W_n) = rk F^p + rk W_n - rk[F^p; W_n]
/// and dim F^p Gr^W_n = dim(F^p ∩ W_n) - dim(F^p ∩ W_{n-1}).
HodgeNumbers oracle_hodge_numbers(const MixedHodgeStructure& h) {
    HodgeNumbers out;
    const auto [wlo, whi] = h.W().index_range();
    const auto [flo, fhi] = h.F().index_range();
    std::map<std::pair<int, int>, std::size_t> stacked;
    auto g = [&](int n, int p) -> long {
        auto key = std::make_pair(n, p);
        auto it = stacked.find(key);
        if (it == stacked.end())
            it = stacked.emplace(key, orank(oracle::stacked(h.F().at(p).basis(), h.W().at(n).basis()))).first;
        return static_cast<long>(it->second);
    };
    std::map<int, long> wrank, frank;
    for (int n = wlo - 1; n <= whi + 1; ++n) wrank[n] = static_cast<long>(orank(h.W().at(n).basis()));
    for (int p = flo - 1; p <= fhi + 2; ++p) frank[p] = static_cast<long>(orank(h.F().at(p).basis()));
    for (int n = wlo; n <= whi + 1; ++n) {
        auto f_dim = [&](int p) {
            return (frank[p] + wrank[n] - g(n, p)) - (frank[p] + wrank[n - 1] - g(n - 1, p));
        };
        for (int p = flo - 1; p <= fhi + 1; ++p) {
            const long d = f_dim(p) - f_dim(p + 1);
            if (d > 0) out[{p, n - p}] = static_cast<std::size_t>(d);
        }
    }
    return out;
}

Dims oracle_weight_dims(const MixedHodgeStructure& h) {
    Dims out;
    const auto [lo, hi] = h.W().index_range();
    for (int n = lo; n <= hi; ++n) {
        const std::size_t d = h.W().at(n).dim() - h.W().at(n - 1).dim();
        if (d > 0) out[n] = d;
    }
    return out;
}

Mat rows(const std::vector<Mat>& blocks, std::size_t cols) {
    Mat out(0, cols);
    for (const Mat& b : blocks) out = vstack(out, b);
    return out;
}

/// f strict for filtrations given as subspace families: dim f(A_k) = dim(f(V) ∩ B_k).
bool oracle_strict(const Mat& f, const Filtration& src, const Filtration& tgt) {
    const Mat image = f.transpose();  // rows span f(V)
    auto [lo, hi] = src.index_range();
    const auto [tlo, thi] = tgt.index_range();
    lo = std::min(lo, tlo) - 1;
    hi = std::max(hi, thi) + 1;
    for (int k = lo; k <= hi; ++k) {
        const Mat a = src.at(k).basis();
        const std::size_t fa = a.rows() == 0 ? 0 : orank(a * f.transpose());
        if (fa != oracle::intersection_dim(image, tgt.at(k).basis())) return false;
    }
    return true;
}

/// Exactness of a sequence of maps by ranks: dim ker m_{k+1} = rank m_k.
bool oracle_exact(const std::vector<Mat>& maps) {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        if (!(maps[k + 1] * maps[k]).is_zero()) return false;
        if (maps[k + 1].cols() - orank(maps[k + 1]) != orank(maps[k])) return false;
    }
    return true;
}

// Fixtures.

std::vector<HodgeStructure> p1() { return {HodgeStructure::tate(0), HodgeStructure::zero(1), HodgeStructure::tate(-1)}; }
std::vector<HodgeStructure> point() { return {HodgeStructure::tate(0)}; }
const std::map<int, Mat> kOne{{0, Mat{{1}}}};

geometry::NCDInput two_lines_one_point() {
    geometry::NCDInput in;
    in.levels.push_back({{"A", p1(), {}, {}}, {"B", p1(), {}, {}}});
    in.levels.push_back({{"AB", point(), {0, 1}, {kOne, kOne}}});
    return in;
}

geometry::NCDInput triangle() {
    geometry::NCDInput in;
    in.levels.push_back({{"A", p1(), {}, {}}, {"B", p1(), {}, {}}, {"C", p1(), {}, {}}});
    in.levels.push_back({{"AB", point(), {0, 1}, {kOne, kOne}},
                         {"BC", point(), {1, 2}, {kOne, kOne}},
                         {"AC", point(), {0, 2}, {kOne, kOne}}});
    return in;
}

/// H^1 of a graph from its incidence matrix.
std::size_t nerve_h1(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Mat inc(edges.size(), vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        inc(e, edges[e].first) = Scalar(-1);
        inc(e, edges[e].second) = Scalar(1);
    }
    return edges.size() - orank(inc);
}

HodgeStructure weight_one(const Vec& v) {
    return HodgeStructure(1, Filtration::decreasing(2, {{0, Subspace::full(2)}, {1, Subspace::span({v}, 2)},
                                                         {2, Subspace::zero(2)}}));
}

/// Zero morphism Q(-1)[-1] -> Q(0): the cone's H^0 is an extension whose class depends on h2.
mhc::MHCMorphism kummer_morphism() {
    mhc::MHCMorphism u;
    u.source = fixtures::pure_mhc(HodgeStructure::tate(-1), 1, 1);
    u.target = fixtures::pure_mhc(HodgeStructure::tate(0), 0, 0);
    u.rational = ChainMap(u.source.rational, u.target.rational, {});
    u.hodge = ChainMap(u.source.hodge.complex(), u.target.hodge.complex(), {});
    return u;
}

// Criteria.

void punctured_curves(Check& check) {
    for (const auto& [g, m] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 5}}) {
        const std::string tag = "(g,m)=(" + std::to_string(g) + "," + std::to_string(m) + ")";
        const std::size_t gr1 = static_cast<std::size_t>(2 * g), gr2 = static_cast<std::size_t>(std::max(m - 1, 0));
        const std::size_t f1 = static_cast<std::size_t>(g + std::max(m - 1, 0));
        const auto k = geometry::punctured_curve_mhc(g, m);
        const MixedHodgeStructure h1 = mhc::cohomology_mhs(k, 1);
        mhs::validate_mhs(h1);
        const Dims wd = oracle_weight_dims(h1);
        check(at(wd, 1) == gr1, tag + " Gr^W_1");
        check(at(wd, 2) == gr2, tag + " Gr^W_2");
        check(wd.size() == (gr1 > 0) + (gr2 > 0), tag + " extra weights");
        check(h1.F().at(1).dim() == f1, tag + " dim F^1");
        check(h1.dim() == oracle_h(k.rational, 1), tag + " dim H^1");
        const auto open = geometry::open_weight_cohomology(geometry::punctured_curve_input(g, m));
        check(open.weight_dims(1) == wd, tag + " open front-end disagrees");
        const auto bundle = geometry::standard_space("punctured_curve", {g, m});
        check(bundle.count(1) ? oracle_weight_dims(bundle.at(1)) == wd : wd.empty(), tag + " standard_space disagrees");
    }
    check.note << "4 curves";
}

void projective_spaces(Check& check) {
    for (int n = 0; n <= 4; ++n) {
        const auto h = geometry::standard_space("projective_space", {n});
        for (int k = 0; k <= 2 * n + 1; ++k) {
            const std::string tag = "P^" + std::to_string(n) + " H^" + std::to_string(k);
            auto it = h.find(k);
            if (k % 2 == 1) {
                check(it == h.end() || it->second.dim() == 0, tag + " nonzero");
                continue;
            }
            if (it == h.end()) {
                check(false, tag + " missing");
                continue;
            }
            mhs::validate_mhs(it->second);
            check(oracle_hodge_numbers(it->second) == HodgeNumbers{{{k / 2, k / 2}, 1}}, tag + " not of type (r,r), rank 1");
            check(oracle_weight_dims(it->second) == Dims{{k, 1}}, tag + " not pure");
        }
    }
    check.note << "n = 0..4";
}

void tori(Check& check) {
    for (int r = 1; r <= 3; ++r) {
        const auto h = geometry::standard_space("torus", {r});
        for (int j = 0; j <= 2 * r; ++j) {
            HodgeNumbers expected;
            for (int p = 0; p <= j; ++p) {
                const long d = binom(r, p) * binom(r, j - p);
                if (d > 0) expected[{p, j - p}] = static_cast<std::size_t>(d);
            }
            const std::string tag = "torus(" + std::to_string(r) + ") H^" + std::to_string(j);
            if (!h.count(j)) {
                check(false, tag + " missing");
                continue;
            }
            mhs::validate_mhs(h.at(j));
            check(oracle_hodge_numbers(h.at(j)) == expected, tag);
            check(oracle_weight_dims(h.at(j)) == Dims{{j, h.at(j).dim()}}, tag + " not pure");
        }
    }
    check.note << "r = 1..3";
}

void deligne_splitting(Check& check) {
    fixtures::Random rng(1001);
    int accepted = 0, tries = 0, asymmetric = 0;
    while (accepted < 120 && tries < 1000) {
        ++tries;
        const MixedHodgeStructure h = fixtures::random_mhs(rng);
        const Dims wd = oracle_weight_dims(h);
        if (h.dim() > 8 || wd.size() < 3) continue;
        ++accepted;
        mhs::validate_mhs(h);
        const auto split = mhs::deligne_splitting(h);
        const HodgeNumbers hn = oracle_hodge_numbers(h);
        const std::size_t n = h.dim();
        std::vector<Mat> all;
        for (const auto& [pq, s] : split) all.push_back(s.basis());
        check(orank(rows(all, n)) == n && rows(all, n).rows() == n, "the I^{p,q} do not form a direct sum");
        const auto [wlo, whi] = h.W().index_range();
        for (int k = wlo - 1; k <= whi; ++k) {
            std::vector<Mat> below;
            for (const auto& [pq, s] : split)
                if (pq.first + pq.second <= k) below.push_back(s.basis());
            check(oracle::same_row_space(rows(below, n), h.W().at(k).basis()), "W_n != sum of I^{p,q}, p+q <= n");
        }
        const auto [flo, fhi] = h.F().index_range();
        for (int p = flo; p <= fhi + 1; ++p) {
            std::vector<Mat> above;
            for (const auto& [pq, s] : split)
                if (pq.first >= p) above.push_back(s.basis());
            check(oracle::same_row_space(rows(above, n), h.F().at(p).basis()), "F^p != sum of I^{p',q}, p' >= p");
        }
        bool strict_here = false;
        for (const auto& [pq, s] : split) {
            const auto [p, q] = pq;
            check(s.dim() == (hn.count(pq) ? hn.at(pq) : 0), "dim I^{p,q} != h^{p,q}");
            check(oracle::intersection_dim(s.basis(), h.W().at(p + q - 1).basis()) == 0, "I^{p,q} meets W_{p+q-1}");
            auto mirror = split.find({q, p});
            if (mirror == split.end()) {
                check(false, "I^{q,p} missing");
                continue;
            }
            const Mat lower = h.W().at(p + q - 2).basis();
            check(oracle::same_row_space(vstack(s.basis(), lower), vstack(mirror->second.basis().conj(), lower)),
                  "I^{p,q} != conj I^{q,p} mod W_{p+q-2}");
            if (!oracle::same_row_space(s.basis(), mirror->second.basis().conj())) strict_here = true;
        }
        asymmetric += strict_here;
    }
    check(accepted >= 100, "fewer than 100 qualifying structures");
    check(asymmetric >= 1, "no instance with I^{p,q} != conj I^{q,p}");
    check.note << accepted << " structures, " << asymmetric << " with I^{p,q} != conj I^{q,p}";
}

void strictness(Check& check) {
    fixtures::Random rng(1002);
    std::map<std::string, int> kinds;
    for (int trial = 0; trial < 120; ++trial) {
        const auto sample = fixtures::random_morphism(rng);
        ++kinds[sample.kind];
        const auto& f = sample.morphism;
        check(mhs::strictness_of(f).strict(), "is_strict failed (" + sample.kind + ")");
        check(oracle_strict(f.map(), f.source().W(), f.target().W()), "oracle: not W-strict (" + sample.kind + ")");
        check(oracle_strict(f.map(), f.source().F(), f.target().F()), "oracle: not F-strict (" + sample.kind + ")");
        const auto kc = mhs::kernel_cokernel(f);
        mhs::validate_mhs(kc.kernel);
        mhs::validate_mhs(kc.cokernel);
        const std::size_t r = orank(f.map());
        check(kc.kernel.dim() == f.source().dim() - r, "kernel dimension");
        check(kc.cokernel.dim() == f.target().dim() - r, "cokernel dimension");
        Dims src = oracle_weight_dims(f.source()), tgt = oracle_weight_dims(f.target());
        Dims ker_im = oracle_weight_dims(kc.kernel), im_cok = oracle_weight_dims(kc.cokernel);
        // dim Gr^W_n f(H) by ranks: dim f(W_n) - dim f(W_{n-1}).
        const auto [lo, hi] = f.source().W().index_range();
        for (int n = lo; n <= hi; ++n) {
            auto fdim = [&](int k) {
                const Mat w = f.source().W().at(k).basis();
                return w.rows() == 0 ? std::size_t{0} : orank(w * f.map().transpose());
            };
            const std::size_t im = fdim(n) - fdim(n - 1);
            if (im > 0) {
                ker_im[n] += im;
                im_cok[n] += im;
            }
        }
        std::erase_if(ker_im, [](const auto& kv) { return kv.second == 0; });
        check(ker_im == src, "Gr^W(Ker) + Gr^W(Im) != Gr^W(H)");
        // Gr^W of the image is read through f(W_n); strictness makes it the target-side grading.
        std::erase_if(im_cok, [](const auto& kv) { return kv.second == 0; });
        check(im_cok == tgt, "Gr^W(Im) + Gr^W(Coker) != Gr^W(H')");
    }
    check.note << "120 morphisms (";
    bool first = true;
    for (const auto& [k, n] : kinds) {
        check.note << (first ? "" : ", ") << k << " " << n;
        first = false;
    }
    check.note << ")";
}

void spectral_sequences(Check& check) {
    fixtures::Random rng(1003);
    int strict_witnesses = 0, nonstrict_witnesses = 0;
    for (int trial = 0; trial < 120; ++trial) {
        fixtures::ComplexOptions opt;
        opt.degrees = rng.uniform(1, 6);
        opt.max_dim = static_cast<std::size_t>(rng.uniform(1, 6));
        opt.filtration_span = rng.uniform(1, 4);
        opt.strict = trial % 4 == 0;
        const ss::FilteredComplex k = fixtures::random_filtered_complex(rng, opt);
        const Complex& c = k.complex();
        bool small = c.hi() - c.lo() + 1 <= 6;
        for (int n = c.lo(); n <= c.hi(); ++n) small = small && c.dim(n) <= 6;
        check(small, "generated complex exceeds 6 degrees or dimension 6");

        const int bound = ss::support_bound(k);
        for (int r = 0; r <= bound + 1; ++r) {
            const auto pg = ss::page(k, r);
            auto homology = ss::page_cohomology_dims(pg);
            std::erase_if(homology, [](const auto& kv) { return kv.second == 0; });
            check(homology == ss::page(k, r + 1).dims(), "E_{r+1} != H(E_r, d_r)");
        }
        const auto inf = ss::page(k, ss::kInfinity);
        for (int n = c.lo(); n <= c.hi(); ++n) {
            // dim F^p H^n = dim F^p - orank(d|F^p) - dim(F^p ∩ Im d).
            auto fh = [&](int p) {
                const Mat fp = k.at(n).at(p).basis();
                if (fp.rows() == 0) return std::size_t{0};
                return fp.rows() - orank(c.d(n) * fp.transpose()) - oracle::intersection_dim(fp, c.d(n - 1).transpose());
            };
            const auto [lo, hi] = k.at(n).index_range();
            for (int p = lo - 1; p <= hi + 1; ++p)
                check(inf.dim(p, n - p) == fh(p) - fh(p + 1), "E_inf != Gr_F H");
        }
        for (const auto& [pq, e] : ss::e_infinity_vs_gr(k)) check(e.isomorphic, "E_inf -> Gr_F H not bijective");

        bool strict = true;
        for (int n = c.lo(); n < c.hi(); ++n) strict = strict && oracle_strict(c.d(n), k.at(n), k.at(n + 1));
        const auto deg = ss::degeneration_rank(k);
        // Degeneration at rank 1 read directly off the pages: E_1 = E_inf.
        const bool e1_is_limit = ss::page(k, 1).dims() == inf.dims();
        check(e1_is_limit == (deg.rank == 1), "degeneration rank disagrees with E_1 = E_inf");
        check(e1_is_limit == strict, "rank-1 degeneration differs from strictness of d");
        (strict ? strict_witnesses : nonstrict_witnesses)++;
    }
    check(strict_witnesses >= 10, "fewer than 10 strict witnesses");
    check(nonstrict_witnesses >= 10, "fewer than 10 non-strict witnesses");
    check.note << "120 complexes, " << strict_witnesses << " degenerate at E_1, " << nonstrict_witnesses << " not";
}

std::vector<mhc::MixedHodgeComplexData> generated_mhcs() {
    fixtures::Random rng(1004);
    std::vector<mhc::MixedHodgeComplexData> out;
    for (int k = 0; k < 32; ++k) out.push_back(fixtures::random_mhc(rng));
    for (const auto& [g, m] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {2, 1}})
        out.push_back(geometry::punctured_curve_mhc(g, m));
    return out;
}

bool contains(const Filtration& big, const Filtration& small) {
    const auto [a, b] = big.index_range();
    const auto [c, d] = small.index_range();
    for (int p = std::min(a, c) - 1; p <= std::max(b, d) + 1; ++p)
        if (!big.at(p).contains(small.at(p))) return false;
    return true;
}

void two_filtrations(Check& check, const std::vector<mhc::MixedHodgeComplexData>& mhcs) {
    int terms = 0;
    for (const auto& m : mhcs) {
        mhc::validate_mhc(m);
        const int bound = ss::support_bound(m.hodge.by_w());
        for (int r = 0; r <= bound + 1; ++r)
            for (const auto& [pq, tf] : ss::three_filtrations(m.hodge, r)) {
                ++terms;
                check(tf.direct == tf.recurrent, "F_d != F_rec on an MHC");
                check(tf.recurrent == tf.dual_direct, "F_rec != F_d* on an MHC");
            }
    }
    fixtures::Random rng(1005);
    int strict_cases = 0;
    const int adversarial = 12;
    for (int trial = 0; trial < adversarial; ++trial) {
        const auto sample = fixtures::random_adversarial(rng);
        check(!mhc::is_valid(mhc::MixedHodgeComplexData{sample.complex.complex(), sample.complex.w_filtrations(), sample.complex,
                                                        ChainMap::identity(sample.complex.complex())}),
              "adversarial complex is unexpectedly a mixed Hodge complex");
        bool strict_here = false;
        for (int r = 0; r <= 3; ++r)
            for (const auto& [pq, tf] : ss::three_filtrations(sample.complex, r)) {
                check(contains(tf.recurrent, tf.direct), "F_d not inside F_rec");
                check(contains(tf.dual_direct, tf.recurrent), "F_rec not inside F_d*");
                if (!(tf.direct == tf.dual_direct)) strict_here = true;
            }
        const auto t = ss::three_filtrations(sample.complex, 2).at(sample.term);
        check(t.direct.at(sample.s).dim() < t.dual_direct.at(sample.s).dim(), "gadget term shows no strict inclusion");
        strict_cases += strict_here;
    }
    check(mhcs.size() >= 30, "fewer than 30 MHCs");
    check(strict_cases >= 1, "no strict inclusion exhibited");
    check.note << mhcs.size() << " MHCs (" << terms << " page terms), " << adversarial << " adversarial complexes, "
               << strict_cases << " with F_d != F_d*";
}

void mhc_degeneration(Check& check, const std::vector<mhc::MixedHodgeComplexData>& mhcs) {
    for (const auto& m : mhcs) {
        const ss::FilteredComplex w(m.rational, m.rational_w);
        const ss::FilteredComplex f = m.hodge.by_f();
        const auto w_inf = ss::page(w, ss::kInfinity).dims();
        const auto e2 = ss::page(w, 2);
        check(e2.dims() == w_inf, "W: E_2 != E_inf");
        for (int r = 2; r <= ss::support_bound(w) + 1; ++r)
            for (const auto& [pq, d] : ss::page(w, r).d) check(d.is_zero(), "W: d_r != 0 for r >= 2");
        check(ss::page(f, 1).dims() == ss::page(f, ss::kInfinity).dims(), "F: E_1 != E_inf");
        for (int n = m.rational.lo(); n <= m.rational.hi(); ++n) {
            const MixedHodgeStructure h = mhc::cohomology_mhs(m, n);
            mhs::validate_mhs(h);
            check(h.dim() == oracle_h(m.rational, n), "dim H^n");
            const Dims wd = oracle_weight_dims(h);
            for (const auto& [q, d] : wd) check(e2.dim(n - q, q) == d, "Gr^{W[n]}_q H^n != E_2 term");
            for (const auto& [pq, d] : e2.dims())
                if (pq.first + pq.second == n) check(at(wd, pq.second) == d, "E_2 term missing from Gr^W H^n");
        }
    }
    check.note << mhcs.size() << " MHCs";
}

void ncd_front_end(Check& check) {
    const auto tri = geometry::ncd_weight_cohomology(triangle());
    const std::size_t circle = nerve_h1(3, {{0, 1}, {1, 2}, {0, 2}});
    check(circle == 1, "nerve oracle");
    check(tri.weight_dims(1) == Dims{{0, circle}}, "triangle: Gr^W_0 H^1");
    const auto two = geometry::ncd_weight_cohomology(two_lines_one_point());
    // Mayer-Vietoris: 0 -> H^0(Y) -> Q^2 -> Q -> H^1(Y) -> 0, H^2(Y) = H^2(A) + H^2(B).
    check(two.total_dim(0) == 1 && two.total_dim(1) == 0 && two.total_dim(2) == 2, "two lines: Mayer-Vietoris");
    int fixtures_seen = 0;
    for (const auto& in : {two_lines_one_point(), triangle(), geometry::line_conic_ncd(), geometry::line_conic_resolution_ncd()}) {
        ++fixtures_seen;
        for (const auto& [i, table] : geometry::ncd_weight_cohomology(in).graded)
            for (const auto& [w, h] : table)
                if (h.dim() > 0) check(w >= 0 && w <= i, "weight outside [0,i]");
    }
    check.note << fixtures_seen << " NCD fixtures";
}

void mixed_cone(Check& check) {
    fixtures::Random rng(1006);
    int les_count = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto u = fixtures::random_cone_morphism(rng);
        const auto& src = u.source;
        const mhc::MHCMorphism id{src, src, ChainMap::identity(src.rational), ChainMap::identity(src.hodge.complex())};
        const auto cone = mhc::mixed_cone(id);
        for (int n = cone.rational.lo() - 1; n <= cone.rational.hi() + 1; ++n)
            check(oracle_h(cone.rational, n) == 0 && oracle_h(cone.hodge.complex(), n) == 0, "cone over identity not acyclic");

        for (const auto& morphism : {u, geometry::punctured_curve_gysin(trial % 3, 1 + trial % 4)}) {
            const auto les = mhc::cone_long_exact_sequence(morphism);
            ++les_count;
            check(les.exact && les.morphisms && les.strict, "LES report not exact/strict");
            check(oracle_exact(les.maps), "LES not exact by ranks");
            for (std::size_t k = 0; k < les.maps.size(); ++k) {
                const auto& a = les.terms[k].mhs;
                const auto& b = les.terms[k + 1].mhs;
                check(oracle_strict(les.maps[k], a.W(), b.W()) && oracle_strict(les.maps[k], a.F(), b.F()),
                      "LES map not strict");
            }
        }
    }
    // Two homotopy pairs on one fixture: h2 = 0 and h2 = i.
    const auto u = kummer_morphism();
    mhc::ConeHomotopies alt;
    alt.h2[1] = Mat{{I()}};
    const auto c0 = mhc::mixed_cone(u), c1 = mhc::mixed_cone(u, alt);
    bool differ = false;
    for (int n = -1; n <= 1; ++n) {
        const auto h0 = mhc::cohomology_mhs(c0, n), h1 = mhc::cohomology_mhs(c1, n);
        check(oracle_weight_dims(h0) == oracle_weight_dims(h1), "cone weight dims depend on the homotopy");
        differ = differ || !(h0 == h1);
    }
    check(oracle_weight_dims(mhc::cohomology_mhs(c0, 0)) == Dims{{0, 1}, {2, 1}}, "Kummer cone H^0 weights");
    check(differ, "the two homotopies gave identical structures");
    check.note << "12 identity cones, " << les_count << " long exact sequences, homotopies h2 = 0 and h2 = i";
}

void hodge_riemann(Check& check) {
    const Mat q{{0, 1}, {-1, 0}};
    check(hodge::check_polarization(weight_one(Vec{I(), 1}), {q}).polarized(), "tau = i not polarized");
    const HodgeStructure flat = weight_one(Vec{1, 1});
    bool rejected = !hodge::is_valid(flat);
    try {
        rejected = rejected || !hodge::check_polarization(flat, {q}).polarized();
    } catch (const InvalidInput&) {
        rejected = true;
    }
    check(rejected, "tau = 1 accepted");
    check(hodge::riemann_relations(I() * Mat::identity(2), Mat::identity(2)).holds(), "Siegel point iI rejected");

    const Subspace f2 = Subspace::span({Vec{1, I(), 0}}, 3);
    const Subspace f1 = Subspace::span({Vec{1, I(), 0}, Vec{0, 0, 1}}, 3);
    const HodgeStructure h(2, Filtration::decreasing(3, {{0, Subspace::full(3)}, {1, f1}, {2, f2}, {3, Subspace::zero(3)}}));
    const auto rep = hodge::check_polarization(h, {Mat::diagonal({-1, -1, 1})});
    // h^{p,q} as dim F^p ∩ conj F^q.
    auto h_pq = [&](int p) { return oracle::intersection_dim(h.F().at(p).basis(), h.F().at(2 - p).basis().conj()); };
    check(rep.polarized(), "rank-3 fixture not polarized");
    check(rep.signature.positive == h_pq(1) && rep.signature.negative == 2 * h_pq(2) && rep.signature.zero == 0,
          "signature != (h^{1,1}, 2h^{2,0})");
    check.note << "signature (" << rep.signature.positive << ", " << rep.signature.negative << ")";
}

}  // namespace

int main() {
    const auto mhcs = generated_mhcs();
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"punctured curves", punctured_curves},
        {"projective spaces", projective_spaces},
        {"tori", tori},
        {"Deligne splitting", deligne_splitting},
        {"strictness of morphisms", strictness},
        {"spectral sequence engine", spectral_sequences},
        {"two-filtration theorem", [&](Check& c) { two_filtrations(c, mhcs); }},
        {"MHC degeneration", [&](Check& c) { mhc_degeneration(c, mhcs); }},
        {"NCD front-end", ncd_front_end},
        {"mixed cone", mixed_cone},
        {"Hodge-Riemann relations", hodge_riemann},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool pass = check.failures.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": ";
        if (pass) {
            std::cout << check.note.str();
        } else {
            for (std::size_t j = 0; j < check.failures.size(); ++j) std::cout << (j ? "; " : "") << check.failures[j];
        }
        std::cout << " [" << ms << " ms]\n";
    }
    return failed == 0 ? 0 : 1;
}
