#include "hodgekit/specseq.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <string>

namespace hodgekit::ss {

namespace {

std::string pq_text(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

Complex::Complex(int lo, std::vector<std::size_t> dims, std::vector<Mat> d)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (d_.size() != expected)
        throw InvalidInput("complex needs " + std::to_string(expected) + " differentials, got " +
                           std::to_string(d_.size()));
    for (std::size_t k = 0; k < d_.size(); ++k)
        if (d_[k].rows() != dims_[k + 1] || d_[k].cols() != dims_[k])
            throw InvalidInput("differential d^" + std::to_string(lo_ + static_cast<int>(k)) + " has the wrong shape");
    for (std::size_t k = 0; k + 1 < d_.size(); ++k)
        if (!(d_[k + 1] * d_[k]).is_zero())
            throw InvalidInput("d^" + std::to_string(lo_ + static_cast<int>(k) + 1) + " ∘ d^" +
                               std::to_string(lo_ + static_cast<int>(k)) + " is not zero");
}

Complex Complex::concentrated(int n, std::size_t dim) { return Complex(n, {dim}, {}); }

std::size_t Complex::dim(int n) const {
    if (dims_.empty() || n < lo_ || n > hi()) return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
}

Mat Complex::d(int n) const {
    if (n >= lo_ && n < hi()) return d_[static_cast<std::size_t>(n - lo_)];
    return Mat(dim(n + 1), dim(n));
}

Subquotient Complex::cohomology(int n) const { return Subquotient(kernel_space(d(n)), image(d(n - 1))); }

bool Complex::is_real() const {
    return std::all_of(d_.begin(), d_.end(), [](const Mat& m) { return m.is_real(); });
}

Complex Complex::shift(int m) const {
    std::vector<Mat> d = d_;
    if (m % 2 != 0)
        for (auto& x : d) x = -x;
    return Complex(lo_ - m, dims_, std::move(d));
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(a.dim(n) + b.dim(n));
        if (n < hi) d.push_back(block_diag(a.d(n), b.d(n)));
    }
    return Complex(lo, std::move(dims), std::move(d));
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, Mat> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    for (const auto& [n, m] : maps_)
        if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n))
            throw InvalidInput("chain map component in degree " + std::to_string(n) + " has the wrong shape");
    const int lo = std::min(source_.lo(), target_.lo()) - 1;
    const int hi = std::max(source_.hi(), target_.hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (!(target_.d(n) * at(n) == at(n + 1) * source_.d(n)))
            throw InvalidInput("chain map does not commute with d in degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const Complex& k) {
    std::map<int, Mat> maps;
    for (int n = k.lo(); n <= k.hi(); ++n) maps[n] = Mat::identity(k.dim(n));
    return ChainMap(k, k, std::move(maps));
}

Mat ChainMap::at(int n) const {
    auto it = maps_.find(n);
    if (it != maps_.end()) return it->second;
    return Mat(target_.dim(n), source_.dim(n));
}

Mat ChainMap::on_cohomology(int n) const {
    const Subquotient hs = source_.cohomology(n);
    const Subquotient ht = target_.cohomology(n);
    const Mat reps = hs.representatives();
    const Mat f = at(n);
    Mat out(ht.dim(), hs.dim());
    for (std::size_t j = 0; j < hs.dim(); ++j) {
        const Vec c = ht.coords(f.apply(reps.row(j)));
        for (std::size_t k = 0; k < c.size(); ++k) out(k, j) = c[k];
    }
    return out;
}

bool ChainMap::is_quasi_isomorphism() const {
    const Complex cone = mapping_cone(*this);
    for (int n = cone.lo(); n <= cone.hi(); ++n)
        if (cone.cohomology(n).dim() != 0) return false;
    return true;
}

Complex mapping_cone(const ChainMap& f) {
    const Complex& k = f.source();
    const Complex& kp = f.target();
    int lo = kp.empty() ? k.lo() - 1 : kp.lo();
    int hi = kp.empty() ? k.hi() - 1 : kp.hi();
    if (!k.empty()) {
        lo = std::min(lo, k.lo() - 1);
        hi = std::max(hi, k.hi() - 1);
    }
    if (k.empty() && kp.empty()) return Complex();
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(k.dim(n + 1) + kp.dim(n));
        if (n == hi) break;
        Mat m(k.dim(n + 2) + kp.dim(n + 1), k.dim(n + 1) + kp.dim(n));
        m.set_block(0, 0, -k.d(n + 1));
        m.set_block(k.dim(n + 2), 0, f.at(n + 1));
        m.set_block(k.dim(n + 2), k.dim(n + 1), kp.d(n));
        d.push_back(std::move(m));
    }
    return Complex(lo, std::move(dims), std::move(d));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target() == g.source())) throw InvalidInput("compose: chain maps do not meet");
    std::map<int, Mat> maps;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) maps[n] = g.at(n) * f.at(n);
    return ChainMap(f.source(), g.target(), std::move(maps));
}

ChainMap direct_sum(const ChainMap& a, const ChainMap& b) {
    const Complex src = direct_sum(a.source(), b.source());
    const Complex tgt = direct_sum(a.target(), b.target());
    std::map<int, Mat> maps;
    for (int n = src.lo(); n <= src.hi(); ++n) maps[n] = block_diag(a.at(n), b.at(n));
    return ChainMap(src, tgt, std::move(maps));
}

bool is_homotopy(const ChainMap& f, const ChainMap& g, const std::map<int, Mat>& h) {
    const Complex& k = f.source();
    const Complex& kp = f.target();
    auto h_at = [&](int n) {
        auto it = h.find(n);
        if (it == h.end()) return Mat(kp.dim(n - 1), k.dim(n));
        if (it->second.rows() != kp.dim(n - 1) || it->second.cols() != k.dim(n))
            throw InvalidInput("homotopy component h^" + std::to_string(n) + " has the wrong shape");
        return it->second;
    };
    const int lo = std::min(k.lo(), kp.lo()) - 1;
    const int hi = std::max(k.hi(), kp.hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (!(f.at(n) - g.at(n) == kp.d(n - 1) * h_at(n) + h_at(n + 1) * k.d(n))) return false;
    return true;
}

FilteredComplex::FilteredComplex(Complex k, std::vector<Filtration> filtrations)
    : k_(std::move(k)), f_(std::move(filtrations)) {
    if (f_.size() != k_.dims().size()) throw InvalidInput("filtered complex needs one filtration per degree");
    if (!f_.empty()) dir_ = f_.front().direction();
    for (std::size_t j = 0; j < f_.size(); ++j) {
        if (f_[j].direction() != dir_) throw InvalidInput("filtrations of a complex must all point the same way");
        if (f_[j].ambient_dim() != k_.dims()[j])
            throw InvalidInput("filtration in degree " + std::to_string(k_.lo() + static_cast<int>(j)) +
                               " has the wrong ambient dimension");
    }
    for (int n = k_.lo(); n < k_.hi(); ++n)
        if (!filt::is_compatible(k_.d(n), at(n), at(n + 1)))
            throw InvalidInput("d^" + std::to_string(n) + " does not preserve the filtration");
}

FilteredComplex FilteredComplex::trivial(Complex k, Direction dir, int index) {
    std::vector<Filtration> f;
    for (int n = k.lo(); n <= k.hi(); ++n) f.push_back(Filtration::trivial(dir, k.dim(n), index));
    FilteredComplex out(std::move(k), std::move(f));
    out.dir_ = dir;
    return out;
}

Filtration FilteredComplex::at(int n) const {
    if (n < k_.lo() || n > k_.hi() || k_.empty()) return Filtration(dir_, 0, {});
    return f_[static_cast<std::size_t>(n - k_.lo())];
}

FilteredComplex FilteredComplex::as_decreasing() const {
    if (dir_ == Direction::Decreasing) return *this;
    std::vector<Filtration> f;
    for (const auto& x : f_) f.push_back(x.flipped());
    FilteredComplex out(k_, std::move(f));
    out.dir_ = Direction::Decreasing;
    return out;
}

Filtration FilteredComplex::on_cohomology(int n) const { return at(n).on_subquotient(k_.cohomology(n)); }

BiFilteredComplex::BiFilteredComplex(Complex k, std::vector<Filtration> w, std::vector<Filtration> f)
    : k_(std::move(k)), w_(std::move(w)), f_(std::move(f)) {
    for (const auto& x : w_)
        if (x.decreasing()) throw InvalidInput("weight filtration of a complex must be increasing");
    for (const auto& x : f_)
        if (!x.decreasing()) throw InvalidInput("Hodge filtration of a complex must be decreasing");
    by_w();
    by_f();
}

Filtration BiFilteredComplex::w(int n) const {
    if (n < k_.lo() || n > k_.hi() || k_.empty()) return Filtration(Direction::Increasing, 0, {});
    return w_[static_cast<std::size_t>(n - k_.lo())];
}

Filtration BiFilteredComplex::f(int n) const {
    if (n < k_.lo() || n > k_.hi() || k_.empty()) return Filtration(Direction::Decreasing, 0, {});
    return f_[static_cast<std::size_t>(n - k_.lo())];
}

std::size_t SSPage::dim(int p, int q) const {
    auto it = terms.find({p, q});
    return it == terms.end() ? 0 : it->second.dim();
}

std::map<PQ, std::size_t> SSPage::dims() const {
    std::map<PQ, std::size_t> out;
    for (const auto& [pq, t] : terms)
        if (t.dim() > 0) out[pq] = t.dim();
    return out;
}

namespace {

void require_decreasing(const FilteredComplex& k) {
    if (k.direction() != Direction::Decreasing) throw InvalidInput("expected a decreasing filtration");
}

}  // namespace

Subspace z_space(const FilteredComplex& k, int p, int n, PageIndex r) {
    require_decreasing(k);
    const Mat d = k.complex().d(n);
    if (!r) return intersect(k.at(n).at(p), kernel_space(d));
    return intersect(k.at(n).at(p), preimage(d, k.at(n + 1).at(p + *r)));
}

Subspace b_space(const FilteredComplex& k, int p, int n, PageIndex r) {
    require_decreasing(k);
    const Mat d = k.complex().d(n - 1);
    if (!r) return sum(k.at(n).at(p + 1), image(d));
    return sum(k.at(n).at(p + 1), image(d, k.at(n - 1).at(p - *r + 1)));
}

SSPage page(const FilteredComplex& input, PageIndex r) {
    if (r && *r < 0) throw InvalidInput("page index must be non-negative");
    const FilteredComplex k = input.as_decreasing();
    const Complex& c = k.complex();
    SSPage pg;
    pg.r = r;
    if (c.empty()) return pg;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (int p : k.at(n).jumps()) {
            Subspace z = z_space(k, p, n, r);
            Subspace b = b_space(k, p, n, r);
            Subquotient sq(z, intersect(b, z));
            pg.terms.emplace(PQ{p, n - p}, PageTerm{std::move(z), std::move(b), std::move(sq)});
        }
    if (!r) return pg;

    for (const auto& [pq, term] : pg.terms) {
        const int n = pq.first + pq.second;
        const PQ tpq = pg.target(pq);
        auto tit = pg.terms.find(tpq);
        const std::size_t tdim = tit == pg.terms.end() ? 0 : tit->second.dim();
        const Mat d = c.d(n);
        Mat m(tdim, term.dim());
        if (tdim > 0) {
            const PageTerm& tt = tit->second;
            const Mat reps = term.sq.representatives();
            for (std::size_t j = 0; j < term.dim(); ++j) {
                const Vec v = d.apply(reps.row(j));
                if (!tt.z.contains(v))
                    throw Inconsistent("d_" + std::to_string(*r) + " leaves Z at " + pq_text(pq.first, pq.second));
                const Vec cc = tt.sq.coords(v);
                for (std::size_t i = 0; i < tdim; ++i) m(i, j) = cc[i];
            }
            const Subspace& den = term.sq.den();
            for (std::size_t j = 0; j < den.dim(); ++j)
                if (!is_zero(tt.sq.coords(d.apply(den.basis().row(j)))))
                    throw Inconsistent("d_" + std::to_string(*r) + " is not well defined at " +
                                       pq_text(pq.first, pq.second));
        }
        pg.d.emplace(pq, std::move(m));
    }
    for (const auto& [pq, m] : pg.d) {
        auto it = pg.d.find(pg.target(pq));
        if (it != pg.d.end() && it->second.cols() == m.rows() && !(it->second * m).is_zero())
            throw Inconsistent("d_r ∘ d_r is not zero at " + pq_text(pq.first, pq.second));
    }
    return pg;
}

std::map<PQ, std::size_t> page_cohomology_dims(const SSPage& pg) {
    std::map<PQ, std::size_t> out;
    for (const auto& [pq, term] : pg.terms) {
        std::size_t dim = term.dim();
        if (pg.r) {
            auto out_it = pg.d.find(pq);
            if (out_it != pg.d.end()) dim -= rank(out_it->second);
            auto in_it = pg.d.find({pq.first - *pg.r, pq.second + *pg.r - 1});
            if (in_it != pg.d.end()) dim -= rank(in_it->second);
        }
        if (dim > 0) out[pq] = dim;
    }
    return out;
}

int support_bound(const FilteredComplex& input) {
    const FilteredComplex k = input.as_decreasing();
    const Complex& c = k.complex();
    int bound = 0;
    if (c.empty()) return 0;
    for (int n = c.lo(); n < c.hi(); ++n) {
        const auto src = k.at(n).jumps();
        const auto tgt = k.at(n + 1).jumps();
        if (src.empty() || tgt.empty()) continue;
        bound = std::max(bound, tgt.back() - src.front());
    }
    return bound;
}

std::map<PQ, EInfinityEntry> e_infinity_vs_gr(const FilteredComplex& input) {
    const FilteredComplex k = input.as_decreasing();
    const Complex& c = k.complex();
    const SSPage inf = page(k, kInfinity);
    std::map<PQ, EInfinityEntry> out;
    if (c.empty()) return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const Subquotient h = c.cohomology(n);
        const Filtration fh = k.on_cohomology(n);
        for (int p : k.at(n).jumps()) {
            const PageTerm& term = inf.terms.at({p, n - p});
            const Subquotient gr(fh.at(p), fh.at(p + 1));
            EInfinityEntry e{term.dim(), gr.dim(), false};
            if (e.e_infinity == 0 && e.graded == 0) continue;
            Mat m(gr.dim(), term.dim());
            const Mat reps = term.sq.representatives();
            for (std::size_t j = 0; j < term.dim(); ++j) {
                const Vec cc = gr.coords(h.coords(reps.row(j)));
                for (std::size_t i = 0; i < gr.dim(); ++i) m(i, j) = cc[i];
            }
            e.isomorphic = e.e_infinity == e.graded && rank(m) == e.graded;
            if (!e.isomorphic)
                throw Inconsistent("E_∞ differs from Gr_F H at " + pq_text(p, n - p));
            out[{p, n - p}] = e;
        }
    }
    return out;
}

DegenerationReport degeneration_rank(const FilteredComplex& input) {
    const FilteredComplex k = input.as_decreasing();
    const Complex& c = k.complex();
    DegenerationReport rep;
    const int bound = support_bound(k);
    int last_nonzero = 0;
    for (int r = 1; r <= bound; ++r) {
        const SSPage pg = page(k, r);
        for (const auto& [pq, m] : pg.d)
            if (!m.is_zero()) last_nonzero = r;
    }
    rep.rank = std::max(1, last_nonzero + 1);
    if (page(k, bound + 1).dims() != page(k, kInfinity).dims())
        throw Inconsistent("the spectral sequence does not reach E_∞ within its support");
    for (int n = c.lo(); n < c.hi() && !c.empty(); ++n) {
        filt::StrictnessReport s = filt::is_strict(c.d(n), k.at(n), k.at(n + 1));
        if (!s.strict) {
            rep.strict = false;
            rep.nonstrict_degree = n;
            rep.witness = std::move(s);
            break;
        }
    }
    if ((rep.rank == 1) != rep.strict)
        throw Inconsistent(rep.strict ? "d is strict but the spectral sequence does not degenerate at E_1"
                                      : "the spectral sequence degenerates at E_1 but d is not strict");
    return rep;
}

std::size_t quotient_complex_term_dim(const FilteredComplex& k, int p, int q, int r) {
    if (k.direction() != Direction::Increasing) throw InvalidInput("expected an increasing filtration");
    if (r < 1) throw InvalidInput("the quotient complex formula needs r >= 1");
    const Complex& c = k.complex();
    const int n = p + q;
    const Filtration w = k.at(n);
    const Filtration w_prev = k.at(n - 1);
    const Filtration w_next = k.at(n + 1);
    const Subspace b_next = w_next.at(-p - r);
    const Subspace cocycles_mod = preimage(c.d(n), b_next);
    const Subspace boundaries = sum(w.at(-p - r), image(c.d(n - 1), w_prev.at(-p + r - 1)));
    const Subspace top = sum(intersect(w.at(-p), cocycles_mod), boundaries);
    const Subspace bottom = sum(intersect(w.at(-p - 1), cocycles_mod), boundaries);
    return top.dim() - bottom.dim();
}

SSPage increasing_page(const FilteredComplex& k, int r) {
    if (k.direction() != Direction::Increasing) throw InvalidInput("increasing_page needs an increasing filtration");
    SSPage pg = page(k, r);
    if (r >= 1)
        for (const auto& [pq, term] : pg.terms)
            if (quotient_complex_term_dim(k, pq.first, pq.second, r) != term.dim())
                throw Inconsistent("quotient complex formula disagrees with Z_r/B_r at " + pq_text(pq.first, pq.second));
    return pg;
}

std::map<PQ, Mat> page_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt, PageIndex r) {
    if (src.direction() != tgt.direction()) throw InvalidInput("page map: filtrations point different ways");
    const SSPage ps = page(src, r);
    const SSPage pt = page(tgt, r);
    std::map<PQ, Mat> out;
    for (const auto& [pq, term] : ps.terms) {
        const int n = pq.first + pq.second;
        auto it = pt.terms.find(pq);
        const std::size_t tdim = it == pt.terms.end() ? 0 : it->second.dim();
        Mat m(tdim, term.dim());
        const Mat fn = f.at(n);
        if (tdim > 0) {
            const PageTerm& tt = it->second;
            const Mat reps = term.sq.representatives();
            for (std::size_t j = 0; j < term.dim(); ++j) {
                const Vec v = fn.apply(reps.row(j));
                if (!tt.z.contains(v)) throw Inconsistent("chain map is not filtered at " + pq_text(pq.first, pq.second));
                const Vec cc = tt.sq.coords(v);
                for (std::size_t i = 0; i < tdim; ++i) m(i, j) = cc[i];
            }
            const Subspace& den = term.sq.den();
            for (std::size_t j = 0; j < den.dim(); ++j)
                if (!is_zero(tt.sq.coords(fn.apply(den.basis().row(j)))))
                    throw Inconsistent("induced page map is not well defined at " + pq_text(pq.first, pq.second));
        }
        out.emplace(pq, std::move(m));
    }
    return out;
}

std::map<PQ, TermFiltrations> three_filtrations(const BiFilteredComplex& k, int r) {
    if (r < 0) throw InvalidInput("page index must be non-negative");
    const FilteredComplex kw = k.by_w().as_decreasing();
    const Complex& c = k.complex();
    std::map<PQ, TermFiltrations> out;
    if (c.empty()) return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const Filtration fn = k.f(n);
        auto [slo, shi] = fn.index_range();
        for (int p : kw.at(n).jumps()) {
            std::vector<Subspace> z, nn;
            for (int j = 0; j <= r; ++j) {
                z.push_back(z_space(kw, p, n, j));
                nn.push_back(intersect(b_space(kw, p, n, j), z.back()));
            }
            const Subspace& zr = z.back();
            const Subspace br = b_space(kw, p, n, r);
            const Subquotient sq(zr, nn.back());

            std::map<int, Subspace> direct, recurrent, dual_direct;
            for (int s = slo; s <= shi; ++s) {
                const Subspace fs = fn.at(s);
                direct.emplace(s, sum(intersect(zr, fs), nn.back()));
                dual_direct.emplace(s, intersect(zr, sum(br, fs)));
                Subspace rec = sum(intersect(z[0], fs), nn[0]);
                for (int j = 0; j < r; ++j) {
                    const Subspace ker_lift = sum(z[j + 1], nn[j]);
                    rec = sum(intersect(sum(intersect(rec, ker_lift), sum(nn[j], nn[j + 1])), z[j + 1]), nn[j + 1]);
                }
                recurrent.emplace(s, std::move(rec));
                if (!recurrent.at(s).contains(direct.at(s)) || !dual_direct.at(s).contains(recurrent.at(s)))
                    throw Inconsistent("F_d ⊆ F_rec ⊆ F_d* fails at " + pq_text(p, n - p) + ", F^" + std::to_string(s));
                if (r <= 1 && !(direct.at(s) == dual_direct.at(s)))
                    throw Inconsistent("F_d differs from F_d* on E_" + std::to_string(r) + " at " + pq_text(p, n - p));
            }
            auto to_filtration = [&](const std::map<int, Subspace>& values) {
                return filt::tabulate(Direction::Decreasing, sq.dim(), slo, shi,
                                      [&](int s) { return sq.coords(values.at(s)); });
            };
            out.emplace(PQ{p, n - p}, TermFiltrations{to_filtration(direct), to_filtration(recurrent),
                                                      to_filtration(dual_direct)});
        }
    }
    return out;
}

}  // namespace hodgekit::ss
