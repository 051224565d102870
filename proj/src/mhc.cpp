#include "hodgekit/mhc.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hodgekit::mhc {

namespace {

std::string deg(int n) { return std::to_string(n); }

Filtration zero_filtration(filt::Direction dir) { return Filtration(dir, 0, {}); }

Filtration filtration_at(const std::vector<Filtration>& f, const Complex& k, int n, filt::Direction dir) {
    if (k.empty() || n < k.lo() || n > k.hi()) return zero_filtration(dir);
    return f[static_cast<std::size_t>(n - k.lo())];
}

/// Gr^W_m of a complex: the graded complex and the subquotient per degree.
struct GradedComplex {
    Complex complex;
    std::vector<Subquotient> pieces;
};

GradedComplex graded_complex(const Complex& k, const std::vector<Filtration>& w, int m) {
    GradedComplex out;
    if (k.empty()) return out;
    std::vector<std::size_t> dims;
    for (int n = k.lo(); n <= k.hi(); ++n) {
        out.pieces.push_back(w[static_cast<std::size_t>(n - k.lo())].gr(m));
        dims.push_back(out.pieces.back().dim());
    }
    std::vector<Mat> d;
    for (int n = k.lo(); n < k.hi(); ++n) {
        const auto j = static_cast<std::size_t>(n - k.lo());
        d.push_back(out.pieces[j + 1].projector() * k.d(n) * out.pieces[j].representatives().transpose());
    }
    out.complex = Complex(k.lo(), std::move(dims), std::move(d));
    return out;
}

Mat induced_on_pieces(const Mat& f, const Subquotient& src, const Subquotient& tgt) {
    return tgt.projector() * f * src.representatives().transpose();
}

void check_shapes(const MixedHodgeComplexData& m) {
    if (!(m.comparison.source() == m.rational))
        throw InvalidInput("comparison does not start at the rational complex");
    if (!(m.comparison.target() == m.hodge.complex()))
        throw InvalidInput("comparison does not end at the complex-level complex");
    if (!m.rational.is_real()) throw InvalidInput("rational complex has non-rational differentials");
    if (m.rational_w.size() != m.rational.dims().size())
        throw InvalidInput("rational complex needs one weight filtration per degree");
    for (const Filtration& w : m.rational_w) {
        if (w.decreasing()) throw InvalidInput("weight filtration must be increasing");
        if (!w.is_real()) throw InvalidInput("rational weight filtration must have rational bases");
    }
    m.rational_filtered();
    for (const auto& [n, b] : m.comparison.maps()) {
        if (!b.is_zero() && !filt::is_compatible(b, filtration_at(m.rational_w, m.rational, n, filt::Direction::Increasing),
                                                 m.hodge.w(n)))
            throw InvalidInput("comparison does not preserve W in degree " + deg(n));
    }
}

MixedHodgeStructure cohomology_unchecked(const MixedHodgeComplexData& m, int n) {
    const Subquotient hq = m.rational.cohomology(n);
    const Filtration wq = m.rational_filtered().on_cohomology(n);
    if (hq.dim() == 0)
        return MixedHodgeStructure(Filtration(filt::Direction::Increasing, 0, {}),
                                   Filtration(filt::Direction::Decreasing, 0, {}));
    const Mat b = m.comparison.on_cohomology(n);
    if (b.rows() != b.cols() || rank(b) != b.rows())
        throw Inconsistent("comparison is not an isomorphism on H^" + deg(n));
    if (!(m.hodge.by_w().on_cohomology(n) == wq.image_under(b)))
        throw Inconsistent("comparison does not match the weight filtrations on H^" + deg(n));
    const Filtration f = m.hodge.by_f().on_cohomology(n).image_under(inverse(b));
    return MixedHodgeStructure(wq.shift(n), f);
}

}  // namespace

HodgeComplexReport validate_hc(const HodgeComplexData& k) {
    if (!(k.comparison.source() == k.rational)) throw InvalidInput("comparison does not start at the rational complex");
    if (!(k.comparison.target() == k.hodge.complex()))
        throw InvalidInput("comparison does not end at the filtered complex");
    if (!k.rational.is_real()) throw InvalidInput("rational complex has non-rational differentials");
    if (!k.hodge.filtrations().empty() && k.hodge.direction() != filt::Direction::Decreasing)
        throw InvalidInput("Hodge filtration of a Hodge complex must be decreasing");
    if (!k.comparison.is_quasi_isomorphism()) throw InvalidInput("comparison is not a quasi-isomorphism");

    HodgeComplexReport rep;
    rep.degeneration = ss::degeneration_rank(k.hodge);
    if (!rep.degeneration.strict)
        throw InvalidInput("d is not strict for F in degree " + deg(*rep.degeneration.nonstrict_degree),
                           "{\"degree\":" + deg(*rep.degeneration.nonstrict_degree) + "}");
    if (k.rational.empty()) return rep;
    for (int n = k.rational.lo(); n <= k.rational.hi(); ++n) {
        const Subquotient hq = k.rational.cohomology(n);
        if (hq.dim() == 0) continue;
        const Mat b = k.comparison.on_cohomology(n);
        HodgeStructure hs(k.weight + n, k.hodge.on_cohomology(n).image_under(inverse(b)));
        try {
            hodge::validate_hs(hs);
        } catch (const InvalidInput& e) {
            throw InvalidInput("H^" + deg(n) + " is not a Hodge structure of weight " + deg(k.weight + n) + ": " +
                                   e.what(),
                               "{\"degree\":" + deg(n) + ",\"piece\":" + e.witness() + "}");
        }
        rep.cohomology.emplace(n, std::move(hs));
    }
    return rep;
}

std::vector<int> weights(const MixedHodgeComplexData& m) {
    std::set<int> out;
    for (const Filtration& w : m.rational_w)
        for (int j : w.jumps()) out.insert(j);
    for (const Filtration& w : m.hodge.w_filtrations())
        for (int j : w.jumps()) out.insert(j);
    return {out.begin(), out.end()};
}

HodgeComplexData graded_hodge_complex(const MixedHodgeComplexData& m, int weight) {
    const GradedComplex gq = graded_complex(m.rational, m.rational_w, weight);
    const Complex& kc = m.hodge.complex();
    const GradedComplex gc = graded_complex(kc, m.hodge.w_filtrations(), weight);

    std::vector<Filtration> f;
    for (int n = kc.lo(); n <= kc.hi() && !kc.empty(); ++n)
        f.push_back(m.hodge.f(n).on_subquotient(gc.pieces[static_cast<std::size_t>(n - kc.lo())]));

    std::map<int, Mat> beta;
    for (int n = m.rational.lo(); n <= m.rational.hi() && !m.rational.empty(); ++n) {
        if (n < kc.lo() || n > kc.hi() || kc.empty()) continue;
        beta[n] = induced_on_pieces(m.comparison.at(n), gq.pieces[static_cast<std::size_t>(n - m.rational.lo())],
                                    gc.pieces[static_cast<std::size_t>(n - kc.lo())]);
    }
    HodgeComplexData out;
    out.weight = weight;
    out.rational = gq.complex;
    out.hodge = FilteredComplex(gc.complex, std::move(f));
    out.comparison = ChainMap(gq.complex, gc.complex, std::move(beta));
    return out;
}

std::map<int, HodgeComplexReport> validate_mhc(const MixedHodgeComplexData& m) {
    check_shapes(m);
    std::map<int, HodgeComplexReport> out;
    for (int w : weights(m)) {
        try {
            out.emplace(w, validate_hc(graded_hodge_complex(m, w)));
        } catch (const InvalidInput& e) {
            throw InvalidInput("Gr^W_" + deg(w) + " is not a Hodge complex of weight " + deg(w) + ": " + e.what(),
                               "{\"weight\":" + deg(w) + (e.witness().empty() ? "" : ",\"detail\":" + e.witness()) +
                                   "}");
        }
    }
    return out;
}

bool is_valid(const MixedHodgeComplexData& m) {
    try {
        validate_mhc(m);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

MixedHodgeStructure cohomology_mhs(const MixedHodgeComplexData& m, int n) {
    validate_mhc(m);
    MixedHodgeStructure h = cohomology_unchecked(m, n);
    try {
        mhs::validate_mhs(h);
    } catch (const InvalidInput& e) {
        throw Inconsistent("H^" + deg(n) + " of a valid mixed Hodge complex is not a mixed Hodge structure: " + e.what(),
                           e.witness());
    }
    return h;
}

DegenerationTheorems degeneration_theorems(const MixedHodgeComplexData& m) {
    validate_mhc(m);
    DegenerationTheorems out;
    const FilteredComplex kw = m.rational_filtered();
    const int bound = ss::support_bound(kw);

    out.w_degenerates_at_e2 = true;
    for (int r = 2; r <= bound; ++r)
        for (const auto& [pq, d] : ss::page(kw, r).d)
            if (!d.is_zero()) out.w_degenerates_at_e2 = false;

    out.f_rank = ss::degeneration_rank(m.hodge.by_f()).rank;

    const ss::SSPage e1 = ss::page(m.hodge.by_w(), 1);
    const auto tf1 = ss::three_filtrations(m.hodge, 1);
    out.d1_strict = true;
    for (const auto& [pq, d] : e1.d) {
        auto t = tf1.find(e1.target(pq));
        if (t == tf1.end() || d.rows() == 0 || d.cols() == 0) continue;
        if (!filt::is_strict(d, tf1.at(pq).recurrent, t->second.recurrent).strict) out.d1_strict = false;
    }

    out.three_filtrations_agree = true;
    for (int r = 0; r <= std::max(2, bound + 1); ++r)
        for (const auto& [pq, tf] : ss::three_filtrations(m.hodge, r))
            if (!tf.all_equal()) out.three_filtrations_agree = false;

    out.weight_graded_matches_e2 = true;
    const ss::SSPage e2 = ss::page(kw, 2);
    if (!m.rational.empty())
        for (int n = m.rational.lo(); n <= m.rational.hi(); ++n) {
            MixedHodgeStructure h = cohomology_unchecked(m, n);
            try {
                mhs::validate_mhs(h);
            } catch (const InvalidInput& e) {
                throw Inconsistent("H^" + deg(n) + " is not a mixed Hodge structure: " + e.what(), e.witness());
            }
            std::map<int, std::size_t> from_e2;
            for (const auto& [pq, dim] : e2.dims())
                if (pq.first + pq.second == n) from_e2[pq.second] = dim;
            if (mhs::weight_dims(h) != from_e2) out.weight_graded_matches_e2 = false;
            out.cohomology.emplace(n, std::move(h));
        }

    if (!out.w_degenerates_at_e2) throw Inconsistent("the weight spectral sequence does not degenerate at E_2");
    if (out.f_rank != 1) throw Inconsistent("the Hodge spectral sequence does not degenerate at E_1");
    if (!out.d1_strict) throw Inconsistent("d_1 of the weight spectral sequence is not strict for F_rec");
    if (!out.three_filtrations_agree) throw Inconsistent("the three filtrations differ on a weight page");
    if (!out.weight_graded_matches_e2) throw Inconsistent("Gr^W H differs from E_2 of the weight spectral sequence");
    return out;
}

MixedHodgeComplexData shift(const MixedHodgeComplexData& m, int a, int b) {
    MixedHodgeComplexData out;
    out.rational = m.rational.shift(a);
    for (const Filtration& w : m.rational_w) out.rational_w.push_back(w.shift(a - 2 * b));
    std::vector<Filtration> w, f;
    for (const Filtration& x : m.hodge.w_filtrations()) w.push_back(x.shift(a - 2 * b));
    for (const Filtration& x : m.hodge.f_filtrations()) f.push_back(x.shift(b));
    out.hodge = BiFilteredComplex(m.hodge.complex().shift(a), std::move(w), std::move(f));
    std::map<int, Mat> maps;
    for (const auto& [n, x] : m.comparison.maps()) maps[n - a] = x;
    out.comparison = ChainMap(out.rational, out.hodge.complex(), std::move(maps));
    return out;
}

MixedHodgeComplexData direct_sum(const MixedHodgeComplexData& x, const MixedHodgeComplexData& y) {
    MixedHodgeComplexData out;
    out.rational = ss::direct_sum(x.rational, y.rational);
    for (int n = out.rational.lo(); n <= out.rational.hi() && !out.rational.empty(); ++n)
        out.rational_w.push_back(filt::direct_sum(
            filtration_at(x.rational_w, x.rational, n, filt::Direction::Increasing),
            filtration_at(y.rational_w, y.rational, n, filt::Direction::Increasing)));
    const Complex kc = ss::direct_sum(x.hodge.complex(), y.hodge.complex());
    std::vector<Filtration> w, f;
    for (int n = kc.lo(); n <= kc.hi() && !kc.empty(); ++n) {
        w.push_back(filt::direct_sum(x.hodge.w(n), y.hodge.w(n)));
        f.push_back(filt::direct_sum(x.hodge.f(n), y.hodge.f(n)));
    }
    out.hodge = BiFilteredComplex(kc, std::move(w), std::move(f));
    out.comparison = ss::direct_sum(x.comparison, y.comparison);
    return out;
}

namespace {

Mat homotopy_at(const std::map<int, Mat>& h, int n, std::size_t rows, std::size_t cols) {
    auto it = h.find(n);
    if (it == h.end()) return Mat(rows, cols);
    if (it->second.rows() != rows || it->second.cols() != cols)
        throw InvalidInput("homotopy component in degree " + deg(n) + " has the wrong shape");
    return it->second;
}

void check_homotopy_weights(const std::map<int, Mat>& h, const Complex& src, const std::vector<Filtration>& wsrc,
                            const Complex& tgt, const std::vector<Filtration>& wtgt, const char* name) {
    for (const auto& [n, m] : h) {
        if (m.is_zero()) continue;
        const Filtration from = filtration_at(wsrc, src, n, filt::Direction::Increasing);
        const Filtration to = filtration_at(wtgt, tgt, n - 1, filt::Direction::Increasing);
        if (m.cols() != from.ambient_dim() || m.rows() != to.ambient_dim())
            throw InvalidInput(std::string(name) + " in degree " + deg(n) + " has the wrong shape");
        if (!filt::is_compatible(m, from, to.shift(-1)))
            throw InvalidInput(std::string(name) + " raises W by more than one in degree " + deg(n));
    }
}

void check_morphism(const MHCMorphism& u) {
    if (!(u.rational.source() == u.source.rational) || !(u.rational.target() == u.target.rational))
        throw InvalidInput("rational part of the morphism does not match the complexes");
    if (!(u.hodge.source() == u.source.hodge.complex()) || !(u.hodge.target() == u.target.hodge.complex()))
        throw InvalidInput("complex part of the morphism does not match the complexes");
    for (const auto& [n, m] : u.rational.maps()) {
        if (!m.is_real()) throw InvalidInput("rational part of the morphism is not rational");
        if (!filt::is_compatible(m, filtration_at(u.source.rational_w, u.source.rational, n, filt::Direction::Increasing),
                                 filtration_at(u.target.rational_w, u.target.rational, n, filt::Direction::Increasing)))
            throw InvalidInput("rational part of the morphism does not preserve W in degree " + deg(n));
    }
    for (const auto& [n, m] : u.hodge.maps()) {
        if (!filt::is_compatible(m, u.source.hodge.w(n), u.target.hodge.w(n)))
            throw InvalidInput("complex part of the morphism does not preserve W in degree " + deg(n));
        if (!filt::is_compatible(m, u.source.hodge.f(n), u.target.hodge.f(n)))
            throw InvalidInput("complex part of the morphism does not preserve F in degree " + deg(n));
    }
}

MixedHodgeComplexData build_cone(const MHCMorphism& u, const ConeHomotopies& h) {
    check_morphism(u);
    const MixedHodgeComplexData& s = u.source;
    const MixedHodgeComplexData& t = u.target;
    for (const auto& [n, m] : h.h1)
        if (!m.is_real()) throw InvalidInput("h1 must be rational");
    check_homotopy_weights(h.h1, s.rational, s.rational_w, t.rational, t.rational_w, "h1");
    check_homotopy_weights(h.h2, s.rational, s.rational_w, t.hodge.complex(), t.hodge.w_filtrations(), "h2");
    if (!ss::is_homotopy(u.rational, u.rational, h.h1))
        throw InvalidInput("h1 does not satisfy d' h1 + h1 d = 0");
    if (!ss::is_homotopy(ss::compose(t.comparison, u.rational), ss::compose(u.hodge, s.comparison), h.h2))
        throw InvalidInput("h2 does not satisfy β' u_Q - u_C β = d' h2 + h2 d");

    MixedHodgeComplexData out;
    out.rational = ss::mapping_cone(u.rational);
    const Complex cc = ss::mapping_cone(u.hodge);
    const auto inc = filt::Direction::Increasing;
    for (int i = out.rational.lo(); i <= out.rational.hi() && !out.rational.empty(); ++i)
        out.rational_w.push_back(filt::direct_sum(filtration_at(s.rational_w, s.rational, i + 1, inc).shift(1),
                                                  filtration_at(t.rational_w, t.rational, i, inc)));
    std::vector<Filtration> w, f;
    for (int i = cc.lo(); i <= cc.hi() && !cc.empty(); ++i) {
        w.push_back(filt::direct_sum(s.hodge.w(i + 1).shift(1), t.hodge.w(i)));
        f.push_back(filt::direct_sum(s.hodge.f(i + 1), t.hodge.f(i)));
    }
    out.hodge = BiFilteredComplex(cc, std::move(w), std::move(f));

    std::map<int, Mat> beta;
    for (int i = out.rational.lo(); i <= out.rational.hi() && !out.rational.empty(); ++i) {
        const std::size_t kq = s.rational.dim(i + 1), kpq = t.rational.dim(i);
        const std::size_t kc = s.hodge.complex().dim(i + 1), kpc = t.hodge.complex().dim(i);
        Mat m(kc + kpc, kq + kpq);
        const Mat bp = t.comparison.at(i);
        m.set_block(0, 0, s.comparison.at(i + 1));
        m.set_block(kc, 0,
                    homotopy_at(h.h2, i + 1, kpc, kq) + bp * homotopy_at(h.h1, i + 1, kpq, kq));
        m.set_block(kc, kq, bp);
        beta[i] = std::move(m);
    }
    try {
        out.comparison = ChainMap(out.rational, cc, std::move(beta));
    } catch (const InvalidInput& e) {
        throw Inconsistent(std::string("cone comparison is not a chain map: ") + e.what());
    }
    return out;
}

}  // namespace

MixedHodgeComplexData mixed_cone(const MHCMorphism& u, const ConeHomotopies& h) {
    validate_mhc(u.source);
    validate_mhc(u.target);
    MixedHodgeComplexData out = build_cone(u, h);
    try {
        validate_mhc(out);
    } catch (const InvalidInput& e) {
        throw Inconsistent(std::string("mixed cone is not a mixed Hodge complex: ") + e.what(), e.witness());
    }
    return out;
}

LongExactSequence cone_long_exact_sequence(const MHCMorphism& u, const ConeHomotopies& h) {
    const MixedHodgeComplexData cone = mixed_cone(u, h);
    const Complex& k = u.source.rational;
    const Complex& kp = u.target.rational;
    const Complex& c = cone.rational;

    int lo = 0, hi = 0;
    bool first = true;
    for (const Complex* x : {&k, &kp, &c}) {
        if (x->empty()) continue;
        lo = first ? x->lo() : std::min(lo, x->lo());
        hi = first ? x->hi() : std::max(hi, x->hi());
        first = false;
    }
    --lo;
    ++hi;

    std::map<int, Mat> iota, pi;
    for (int i = c.lo(); i <= c.hi() && !c.empty(); ++i) {
        Mat a(c.dim(i), kp.dim(i));
        a.set_block(k.dim(i + 1), 0, Mat::identity(kp.dim(i)));
        iota[i] = std::move(a);
        Mat b(k.dim(i + 1), c.dim(i));
        b.set_block(0, 0, Mat::identity(k.dim(i + 1)));
        pi[i] = std::move(b);
    }
    const ChainMap iota_map(kp, c, std::move(iota));
    const ChainMap pi_map(c, k.shift(1), std::move(pi));

    LongExactSequence out;
    for (int i = lo; i <= hi; ++i) {
        out.terms.push_back({"K", i, cohomology_unchecked(u.source, i)});
        out.terms.push_back({"K'", i, cohomology_unchecked(u.target, i)});
        out.terms.push_back({"C", i, cohomology_unchecked(cone, i)});
        out.maps.push_back(u.rational.on_cohomology(i));
        out.maps.push_back(iota_map.on_cohomology(i));
        out.maps.push_back(pi_map.on_cohomology(i));
    }
    out.terms.push_back({"K", hi + 1, cohomology_unchecked(u.source, hi + 1)});

    out.morphisms = true;
    out.strict = true;
    for (std::size_t j = 0; j < out.maps.size(); ++j) {
        try {
            const mhs::MHSMorphism f(out.maps[j], out.terms[j].mhs, out.terms[j + 1].mhs);
            if (!mhs::strictness_of(f).strict()) out.strict = false;
        } catch (const InvalidInput&) {
            out.morphisms = false;
            out.strict = false;
        }
    }
    out.exact = true;
    const std::size_t first_dim = out.terms.front().mhs.dim();
    if (first_dim > 0 && kernel_space(out.maps.front()).dim() != 0) out.exact = false;
    for (std::size_t j = 1; j < out.maps.size(); ++j)
        if (!(image(out.maps[j - 1]) == kernel_space(out.maps[j]))) out.exact = false;
    if (image(out.maps.back()).dim() != out.terms.back().mhs.dim()) out.exact = false;

    if (!out.exact) throw Inconsistent("cohomology sequence of the mixed cone is not exact");
    if (!out.morphisms) throw Inconsistent("a map of the cohomology sequence is not a morphism of MHS");
    if (!out.strict) throw Inconsistent("a map of the cohomology sequence is not strict");
    return out;
}

std::map<int, mhs::Comparison> compare_cones(const MHCMorphism& u, const ConeHomotopies& a, const ConeHomotopies& b) {
    const MixedHodgeComplexData ca = mixed_cone(u, a);
    const MixedHodgeComplexData cb = mixed_cone(u, b);
    std::map<int, mhs::Comparison> out;
    if (ca.rational.empty()) return out;
    for (int i = ca.rational.lo(); i <= ca.rational.hi(); ++i) {
        const mhs::Comparison cmp = mhs::compare(cohomology_mhs(ca, i), cohomology_mhs(cb, i));
        if (!cmp.same_weight_dims)
            throw Inconsistent("cones built with different homotopies have different Gr^W dimensions on H^" + deg(i));
        out.emplace(i, cmp);
    }
    return out;
}

DiagonalFiltration diagonal_filtration(const DoubleComplex& dc) {
    using Key = std::pair<int, int>;
    auto dim_at = [&](int a, int c) -> std::size_t {
        auto it = dc.entries.find({a, c});
        return it == dc.entries.end() ? 0 : it->second.dim;
    };
    auto map_or_zero = [](const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
        if (m.rows() == 0 && m.cols() == 0) return Mat(rows, cols);
        if (m.rows() != rows || m.cols() != cols) throw InvalidInput(what + " has the wrong shape");
        return m;
    };
    auto key_text = [](const Key& k) { return "K^{" + deg(k.first) + "," + deg(k.second) + "}"; };
    auto d_int = [&](int a, int c) {
        auto it = dc.entries.find({a, c});
        if (it == dc.entries.end()) return Mat(dim_at(a + 1, c), 0);
        return map_or_zero(it->second.d_internal, dim_at(a + 1, c), it->second.dim,
                           "internal differential on " + key_text({a, c}));
    };
    auto d_col = [&](int a, int c) {
        auto it = dc.entries.find({a, c});
        if (it == dc.entries.end()) return Mat(dim_at(a, c + 1), 0);
        return map_or_zero(it->second.d_column, dim_at(a, c + 1), it->second.dim,
                           "column differential on " + key_text({a, c}));
    };
    auto w_at = [&](int a, int c) {
        auto it = dc.entries.find({a, c});
        return it == dc.entries.end() ? zero_filtration(filt::Direction::Increasing) : it->second.w;
    };

    if (dc.entries.empty()) return {FilteredComplex(Complex(), {}), {}};
    int tlo = 0, thi = 0;
    bool first = true;
    for (const auto& [key, e] : dc.entries) {
        const auto [a, c] = key;
        if (e.w.ambient_dim() != e.dim || e.w.decreasing())
            throw InvalidInput("W on " + key_text(key) + " must be increasing on a space of dimension " + deg(static_cast<int>(e.dim)));
        if (!(d_int(a + 1, c) * d_int(a, c)).is_zero()) throw InvalidInput("internal d∘d is not zero at " + key_text(key));
        if (!(d_col(a, c + 1) * d_col(a, c)).is_zero()) throw InvalidInput("column d∘d is not zero at " + key_text(key));
        if (!(d_int(a, c + 1) * d_col(a, c) == d_col(a + 1, c) * d_int(a, c)))
            throw InvalidInput("the two differentials do not commute at " + key_text(key));
        if (dim_at(a + 1, c) > 0 && !filt::is_compatible(d_int(a, c), e.w, w_at(a + 1, c)))
            throw InvalidInput("internal differential does not preserve W at " + key_text(key));
        if (dim_at(a, c + 1) > 0 && !filt::is_compatible(d_col(a, c), e.w, w_at(a, c + 1)))
            throw InvalidInput("column differential does not preserve W at " + key_text(key));
        tlo = first ? a + c : std::min(tlo, a + c);
        thi = first ? a + c : std::max(thi, a + c);
        first = false;
    }

    DiagonalFiltration out;
    std::map<int, std::vector<Key>> layout;
    std::vector<std::size_t> dims;
    for (int i = tlo; i <= thi; ++i) {
        std::size_t offset = 0;
        for (const auto& [key, e] : dc.entries)
            if (key.first + key.second == i) {
                layout[i].push_back(key);
                out.offsets[key] = offset;
                offset += e.dim;
            }
        std::sort(layout[i].begin(), layout[i].end(), [](const Key& x, const Key& y) { return x.second < y.second; });
        offset = 0;
        for (const Key& key : layout[i]) {
            out.offsets[key] = offset;
            offset += dim_at(key.first, key.second);
        }
        dims.push_back(offset);
    }

    std::vector<Mat> d;
    for (int i = tlo; i < thi; ++i) {
        Mat m(dims[static_cast<std::size_t>(i + 1 - tlo)], dims[static_cast<std::size_t>(i - tlo)]);
        for (const Key& key : layout[i]) {
            const auto [a, c] = key;
            if (dim_at(a + 1, c) > 0) m.set_block(out.offsets.at({a + 1, c}), out.offsets.at(key), d_int(a, c));
            if (dim_at(a, c + 1) > 0) {
                const Mat col = d_col(a, c);
                m.set_block(out.offsets.at({a, c + 1}), out.offsets.at(key), a % 2 == 0 ? col : -col);
            }
        }
        d.push_back(std::move(m));
    }
    const Complex total(tlo, dims, std::move(d));

    std::vector<Filtration> delta;
    for (int i = tlo; i <= thi; ++i) {
        const std::size_t ambient = dims[static_cast<std::size_t>(i - tlo)];
        int nlo = 0, nhi = 0;
        bool any = false;
        for (const Key& key : layout[i]) {
            const auto [lo, hi] = w_at(key.first, key.second).index_range();
            nlo = any ? std::min(nlo, lo - key.second) : lo - key.second;
            nhi = any ? std::max(nhi, hi - key.second) : hi - key.second;
            any = true;
        }
        auto value = [&](int n) {
            Subspace s = Subspace::zero(ambient);
            for (const Key& key : layout[i])
                s = sum(s, filt::embed(w_at(key.first, key.second).at(n + key.second), out.offsets.at(key), ambient));
            return s;
        };
        Filtration f = filt::tabulate(filt::Direction::Increasing, ambient, nlo, nhi, value);
        for (int n = nlo; n <= nhi; ++n) {
            std::size_t expected = 0;
            for (const Key& key : layout[i]) expected += w_at(key.first, key.second).gr(n + key.second).dim();
            if (f.gr(n).dim() != expected)
                throw Inconsistent("Gr^δ_" + deg(n) + " in degree " + deg(i) + " does not split along the columns");
        }
        delta.push_back(std::move(f));
    }
    out.total = FilteredComplex(total, std::move(delta));
    return out;
}

}  // namespace hodgekit::mhc
