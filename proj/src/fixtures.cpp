#include "hodgekit/fixtures.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <set>

namespace hodgekit::fixtures {

using filt::Direction;
using filt::Filtration;
using hodge::Bidegree;
using hodge::HodgeStructure;
using ss::BiFilteredComplex;
using ss::Complex;

Scalar Random::rational(int bound) {
    const int num = uniform(-bound, bound);
    const int den = uniform(1, 2);
    return Scalar::rational(num, den);
}

Scalar Random::gaussian(int bound) { return Scalar(rational(bound).re(), rational(bound).re()); }

Mat Random::rational_matrix(std::size_t rows, std::size_t cols, int bound) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(bound);
    return m;
}

Mat Random::gaussian_matrix(std::size_t rows, std::size_t cols, int bound) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian(bound);
    return m;
}

namespace {

Mat triangular_product(Random& rng, std::size_t n, bool gaussian) {
    Mat lower = Mat::identity(n), upper = Mat::identity(n);
    for (std::size_t r = 0; r < n; ++r) {
        upper(r, r) = Scalar(rng.coin() ? 1 : -1) * Scalar(rng.uniform(1, 2));
        for (std::size_t c = 0; c < r; ++c) {
            lower(r, c) = gaussian ? rng.gaussian(1) : rng.rational(1);
            upper(c, r) = gaussian ? rng.gaussian(1) : rng.rational(1);
        }
    }
    return lower * upper;
}

}  // namespace

Mat Random::invertible_rational(std::size_t n) { return triangular_product(*this, n, false); }
Mat Random::invertible_gaussian(std::size_t n) { return triangular_product(*this, n, true); }

BigradedModel bigraded_model(const HodgeNumbers& h) {
    for (const auto& [pq, d] : h) {
        auto it = h.find({pq.second, pq.first});
        if (it == h.end() || it->second != d) throw InvalidInput("Hodge numbers must satisfy h^{p,q} = h^{q,p}");
    }
    std::map<int, std::vector<std::pair<Bidegree, std::size_t>>> by_weight;
    for (const auto& [pq, d] : h)
        if (d > 0 && pq.first >= pq.second) by_weight[pq.first + pq.second].push_back({pq, d});
    std::size_t dim = 0;
    for (const auto& [n, list] : by_weight)
        for (const auto& [pq, d] : list) dim += (pq.first == pq.second ? 1 : 2) * d;

    BigradedModel out;
    std::map<Bidegree, std::vector<Vec>> vectors;
    std::size_t next = 0;
    for (const auto& [n, list] : by_weight)
        for (const auto& [pq, d] : list)
            for (std::size_t copy = 0; copy < d; ++copy) {
                if (pq.first == pq.second) {
                    vectors[pq].push_back(unit_vector(dim, next++));
                    out.coordinate_weight.push_back(n);
                    continue;
                }
                Vec v(dim);
                v[next] = Scalar(1);
                v[next + 1] = Scalar::i();
                vectors[pq].push_back(v);
                vectors[{pq.second, pq.first}].push_back(conj(v));
                next += 2;
                out.coordinate_weight.push_back(n);
                out.coordinate_weight.push_back(n);
            }
    for (const auto& [pq, vs] : vectors) out.pieces.emplace(pq, Subspace::span(vs, dim));

    if (dim == 0) {
        out.mhs = MixedHodgeStructure::zero();
        return out;
    }
    const int wlo = by_weight.begin()->first, whi = by_weight.rbegin()->first;
    const Filtration w = filt::tabulate(Direction::Increasing, dim, wlo - 1, whi, [&](int n) {
        std::vector<Vec> span;
        for (std::size_t a = 0; a < dim; ++a)
            if (out.coordinate_weight[a] <= n) span.push_back(unit_vector(dim, a));
        return Subspace::span(span, dim);
    });
    int plo = 0, phi = 0;
    bool first = true;
    for (const auto& [pq, s] : out.pieces) {
        plo = first ? pq.first : std::min(plo, pq.first);
        phi = first ? pq.first : std::max(phi, pq.first);
        first = false;
    }
    const Filtration f = filt::tabulate(Direction::Decreasing, dim, plo, phi + 1, [&](int p) {
        Subspace s = Subspace::zero(dim);
        for (const auto& [pq, piece] : out.pieces)
            if (pq.first >= p) s = sum(s, piece);
        return s;
    });
    out.mhs = MixedHodgeStructure(w, f);
    return out;
}

namespace {

std::size_t min_size(int n) { return n % 2 == 0 ? 1 : 2; }

void add_atom(Random& rng, HodgeNumbers& h, int n, std::size_t& budget) {
    const bool even = n % 2 == 0;
    if (even && (budget < 2 || rng.coin())) {
        if (budget < 1) return;
        h[{n / 2, n / 2}] += 1;
        budget -= 1;
        return;
    }
    if (budget < 2) return;
    const int half = n >= 0 ? n / 2 : -((-n + 1) / 2);  // floor(n/2)
    const int p = half + rng.uniform(1, 2);
    h[{p, n - p}] += 1;
    h[{n - p, p}] += 1;
    budget -= 2;
}

}  // namespace

HodgeNumbers random_hodge_numbers(Random& rng, const MhsOptions& opt) {
    for (;;) {
        const int k = rng.uniform(opt.min_weights, opt.max_weights);
        std::set<int> ws;
        while (static_cast<int>(ws.size()) < k) ws.insert(rng.uniform(-1, 5));
        std::size_t needed = 0;
        for (int n : ws) needed += min_size(n);
        if (needed > opt.max_dim) continue;
        HodgeNumbers h;
        std::size_t budget = opt.max_dim;
        std::size_t reserve = needed;
        for (int n : ws) {
            // Leave room for the smallest atom of every later weight.
            reserve -= min_size(n);
            std::size_t local = budget - reserve;
            const std::size_t before = local;
            while (local == before) add_atom(rng, h, n, local);
            budget -= before - local;
        }
        const std::vector<int> list(ws.begin(), ws.end());
        while (budget > 0 && rng.uniform(0, 2) != 0)
            add_atom(rng, h, list[static_cast<std::size_t>(rng.uniform(0, k - 1))], budget);
        return h;
    }
}

MixedHodgeStructure random_mhs(Random& rng, const MhsOptions& opt) {
    const BigradedModel model = bigraded_model(random_hodge_numbers(rng, opt));
    MixedHodgeStructure h = model.mhs;
    const std::size_t d = h.dim();
    if (opt.non_split) {
        Mat u = Mat::identity(d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (model.coordinate_weight[r] < model.coordinate_weight[c] && rng.uniform(0, 2) != 0)
                    u(r, c) = rng.gaussian(1);
        h = MixedHodgeStructure(h.W(), h.F().image_under(u));
    }
    if (opt.base_change) h = mhs::base_change(h, rng.invertible_rational(d));
    return h;
}

HodgeStructure random_hs(Random& rng, int weight, std::size_t max_dim, bool base_change) {
    HodgeNumbers h;
    std::size_t budget = std::max<std::size_t>(max_dim, min_size(weight));
    const std::size_t before = budget;
    while (budget == before) add_atom(rng, h, weight, budget);
    while (budget > 0 && rng.coin()) add_atom(rng, h, weight, budget);
    const BigradedModel model = bigraded_model(h);
    Filtration f = model.mhs.F();
    if (base_change) f = f.image_under(rng.invertible_rational(model.mhs.dim()));
    return HodgeStructure(weight, f);
}

namespace {

MixedHodgeStructure sub_mhs(const MixedHodgeStructure& h, const Subspace& s) {
    return MixedHodgeStructure(h.W().restricted_to(s), h.F().restricted_to(s));
}

MixedHodgeStructure quotient_mhs(const MixedHodgeStructure& h, const Subquotient& q) {
    return MixedHodgeStructure(h.W().on_subquotient(q), h.F().on_subquotient(q));
}

}  // namespace

MorphismSample random_morphism(Random& rng, std::size_t max_dim) {
    const int kind = rng.uniform(0, 3);
    MixedHodgeStructure src, tgt;
    Mat f;
    std::string name;
    if (kind == 0) {
        name = "blocks";
        MhsOptions small;
        small.max_dim = 3;
        small.min_weights = 1;
        small.max_weights = 2;
        std::vector<MixedHodgeStructure> blocks;
        const int nblocks = rng.uniform(1, 2);
        for (int k = 0; k < nblocks; ++k) blocks.push_back(random_mhs(rng, small));
        auto pick = [&](std::vector<int>& slots) {
            std::size_t total = 0;
            const int n = rng.uniform(1, 3);
            for (int k = 0; k < n; ++k) {
                const int b = rng.uniform(0, nblocks - 1);
                if (total + blocks[static_cast<std::size_t>(b)].dim() > max_dim) continue;
                total += blocks[static_cast<std::size_t>(b)].dim();
                slots.push_back(b);
            }
        };
        std::vector<int> s_slots, t_slots;
        pick(s_slots);
        pick(t_slots);
        src = tgt = MixedHodgeStructure::zero();
        std::vector<std::size_t> s_off, t_off;
        for (int b : s_slots) {
            s_off.push_back(src.dim());
            src = mhs::mhs_direct_sum(src, blocks[static_cast<std::size_t>(b)]);
        }
        for (int b : t_slots) {
            t_off.push_back(tgt.dim());
            tgt = mhs::mhs_direct_sum(tgt, blocks[static_cast<std::size_t>(b)]);
        }
        f = Mat(tgt.dim(), src.dim());
        for (std::size_t t = 0; t < t_slots.size(); ++t)
            for (std::size_t s = 0; s < s_slots.size(); ++s)
                if (t_slots[t] == s_slots[s]) {
                    const std::size_t dim = blocks[static_cast<std::size_t>(s_slots[s])].dim();
                    f.set_block(t_off[t], s_off[s], rng.rational(2) * Mat::identity(dim));
                }
    } else {
        MhsOptions opt;
        opt.max_dim = max_dim;
        opt.min_weights = 2;
        const MixedHodgeStructure h = random_mhs(rng, opt);
        const std::vector<int> jumps = h.W().jumps();
        const std::size_t jk = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(jumps.size()) - 2));
        const int k = jumps[jk];
        const Subspace wk = h.W().at(k);
        if (kind == 1) {
            name = "inclusion";
            src = sub_mhs(h, wk);
            tgt = h;
            f = wk.basis_columns();
        } else if (kind == 2) {
            name = "projection";
            const Subquotient q(Subspace::full(h.dim()), wk);
            src = h;
            tgt = quotient_mhs(h, q);
            f = q.projector();
        } else {
            name = "composite";
            const int upper = jumps[jk + 1];
            const Subspace wu = h.W().at(upper);
            const Subquotient q(Subspace::full(h.dim()), wk);
            src = sub_mhs(h, wu);
            tgt = quotient_mhs(h, q);
            f = q.projector() * wu.basis_columns();
        }
    }
    const Mat gs = rng.invertible_rational(src.dim());
    const Mat gt = rng.invertible_rational(tgt.dim());
    const MixedHodgeStructure src2 = src.dim() ? mhs::base_change(src, gs) : src;
    const MixedHodgeStructure tgt2 = tgt.dim() ? mhs::base_change(tgt, gt) : tgt;
    const Mat f2 = (src.dim() && tgt.dim()) ? gt * f * inverse(gs) : f;
    return {name, mhs::MHSMorphism(f2, src2, tgt2)};
}

namespace {

/// K^n = B^n ⊕ H^n ⊕ C^n with d mapping C^n identically onto B^{n+1}.
struct Adapted {
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
};

Adapted adapted_complex(Random& rng, int degrees, std::size_t max_dim) {
    Adapted out;
    std::vector<std::size_t> c(static_cast<std::size_t>(degrees), 0);
    std::size_t b = 0;
    for (int n = 0; n < degrees; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::size_t room = max_dim > b ? max_dim - b : 0;
        const std::size_t h = std::min<std::size_t>(room, static_cast<std::size_t>(rng.uniform(0, 1)));
        room -= h;
        c[un] = n + 1 < degrees ? std::min<std::size_t>(room, static_cast<std::size_t>(rng.uniform(0, 2))) : 0;
        out.dims.push_back(b + h + c[un]);
        b = c[un];
    }
    for (int n = 0; n + 1 < degrees; ++n) {
        const auto un = static_cast<std::size_t>(n);
        Mat d(out.dims[un + 1], out.dims[un]);
        const std::size_t c0 = out.dims[un] - c[un];
        for (std::size_t k = 0; k < c[un]; ++k) d(k, c0 + k) = Scalar(1);
        out.d.push_back(std::move(d));
    }
    return out;
}

Complex conjugated(const Complex& k, const std::vector<Mat>& g) {
    std::vector<Mat> d;
    for (int n = k.lo(); n < k.hi(); ++n) {
        const auto j = static_cast<std::size_t>(n - k.lo());
        d.push_back(g[j + 1] * k.d(n) * inverse(g[j]));
    }
    return Complex(k.lo(), k.dims(), std::move(d));
}

std::vector<Mat> random_changes(Random& rng, const Complex& k, bool gaussian) {
    std::vector<Mat> g;
    for (std::size_t dim : k.dims()) g.push_back(gaussian ? rng.invertible_gaussian(dim) : rng.invertible_rational(dim));
    return g;
}

/// Filtration by the subcomplexes generated by leveled vectors: level-l
/// generators in degree n span part of step l of K^n, their differentials part
/// of step l of K^{n+1}.
std::vector<Filtration> generated_filtration(Random& rng, const Complex& k, int lo, int hi, bool increasing,
                                             bool gaussian) {
    std::vector<std::vector<std::pair<int, Vec>>> gens(k.dims().size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t dim = k.dims()[j];
        const std::size_t count = dim == 0 ? 0 : static_cast<std::size_t>(rng.uniform(1, static_cast<int>(dim)));
        for (std::size_t g = 0; g < count; ++g) {
            const Mat v = gaussian ? rng.gaussian_matrix(1, dim, 1) : rng.rational_matrix(1, dim, 2);
            gens[j].push_back({rng.uniform(lo, hi), v.row(0)});
        }
    }
    std::vector<Filtration> out;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t dim = k.dims()[j];
        const int n = k.lo() + static_cast<int>(j);
        auto in_step = [&](int level, int index) { return increasing ? level <= index : level >= index; };
        auto value = [&](int index) {
            std::vector<Vec> span;
            for (const auto& [level, v] : gens[j])
                if (in_step(level, index)) span.push_back(v);
            if (j > 0) {
                const Mat d = k.d(n - 1);
                for (const auto& [level, v] : gens[j - 1])
                    if (in_step(level, index)) span.push_back(d.apply(v));
            }
            return Subspace::span(span, dim);
        };
        if (increasing) {
            out.push_back(filt::tabulate(Direction::Increasing, dim, lo - 1, hi + 1, [&](int index) {
                return index > hi ? Subspace::full(dim) : value(index);
            }));
        } else {
            out.push_back(filt::tabulate(Direction::Decreasing, dim, lo - 1, hi + 1, [&](int index) {
                return index < lo ? Subspace::full(dim) : value(index);
            }));
        }
    }
    return out;
}

Complex random_complex(Random& rng, const ComplexOptions& opt, int lo) {
    const Adapted a = adapted_complex(rng, opt.degrees, opt.max_dim);
    const Complex k(lo, a.dims, a.d);
    return conjugated(k, random_changes(rng, k, false));
}

}  // namespace

ss::FilteredComplex random_filtered_complex(Random& rng, const ComplexOptions& opt) {
    const int lo = rng.uniform(-1, 1);
    if (!opt.strict) {
        const Complex k = random_complex(rng, opt, lo);
        return ss::FilteredComplex(k, generated_filtration(rng, k, 1, opt.filtration_span, false, false));
    }
    const std::size_t per_block = std::max<std::size_t>(1, opt.max_dim / static_cast<std::size_t>(opt.filtration_span));
    Complex k;
    std::vector<std::vector<std::pair<int, std::size_t>>> owners;  // per degree: (level, dim) in order
    for (int p = 0; p < opt.filtration_span; ++p) {
        const Adapted a = adapted_complex(rng, opt.degrees, per_block);
        const Complex block(lo, a.dims, a.d);
        k = k.empty() ? block : ss::direct_sum(k, block);
        owners.resize(a.dims.size());
        for (std::size_t j = 0; j < a.dims.size(); ++j) owners[j].push_back({p, a.dims[j]});
    }
    std::vector<Filtration> f;
    for (std::size_t j = 0; j < owners.size(); ++j) {
        const std::size_t dim = k.dims()[j];
        f.push_back(filt::tabulate(Direction::Decreasing, dim, -1, opt.filtration_span, [&](int index) {
            std::vector<Vec> span;
            std::size_t off = 0;
            for (const auto& [level, d] : owners[j]) {
                if (level >= index)
                    for (std::size_t c = 0; c < d; ++c) span.push_back(unit_vector(dim, off + c));
                off += d;
            }
            return Subspace::span(span, dim);
        }));
    }
    const std::vector<Mat> g = random_changes(rng, k, rng.coin());
    const Complex kg = conjugated(k, g);
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = f[j].image_under(g[j]);
    return ss::FilteredComplex(kg, std::move(f));
}

ss::BiFilteredComplex random_bifiltered_complex(Random& rng, const ComplexOptions& opt) {
    const Complex k = random_complex(rng, opt, rng.uniform(-1, 1));
    auto w = generated_filtration(rng, k, -1, 1, true, false);
    auto f = generated_filtration(rng, k, 0, opt.filtration_span - 1, false, true);
    return BiFilteredComplex(k, std::move(w), std::move(f));
}

BiFilteredComplex adversarial_gadget(int lo, int m, int s) {
    const Complex k(lo, {1, 2}, {Mat{{1}, {-1}}});
    const Subspace z = Subspace::span({unit_vector(2, 0)}, 2);
    const Subspace f = Subspace::span({unit_vector(2, 1)}, 2);
    std::vector<Filtration> w{Filtration::trivial(Direction::Increasing, 1, m + 1),
                              Filtration::increasing(2, {{m - 1, Subspace::zero(2)}, {m, z}, {m + 1, Subspace::full(2)}})};
    std::vector<Filtration> fs{Filtration::trivial(Direction::Decreasing, 1, s - 1),
                               Filtration::decreasing(2, {{s - 1, Subspace::full(2)}, {s, f}, {s + 1, Subspace::zero(2)}})};
    return BiFilteredComplex(k, std::move(w), std::move(fs));
}

namespace {

BiFilteredComplex bifiltered_sum(const BiFilteredComplex& a, const BiFilteredComplex& b) {
    const Complex k = ss::direct_sum(a.complex(), b.complex());
    std::vector<Filtration> w, f;
    for (int n = k.lo(); n <= k.hi(); ++n) {
        w.push_back(filt::direct_sum(a.w(n), b.w(n)));
        f.push_back(filt::direct_sum(a.f(n), b.f(n)));
    }
    return BiFilteredComplex(k, std::move(w), std::move(f));
}

}  // namespace

AdversarialSample random_adversarial(Random& rng) {
    const int lo = rng.uniform(-1, 1), m = rng.uniform(-1, 1), s = rng.uniform(0, 2);
    BiFilteredComplex k = adversarial_gadget(lo, m, s);
    ComplexOptions opt;
    opt.max_dim = 3;
    if (rng.coin()) k = bifiltered_sum(k, random_bifiltered_complex(rng, opt));
    const std::vector<Mat> g = random_changes(rng, k.complex(), false);
    std::vector<Filtration> w, f;
    for (int n = k.complex().lo(); n <= k.complex().hi(); ++n) {
        const Mat& gn = g[static_cast<std::size_t>(n - k.complex().lo())];
        w.push_back(k.w(n).image_under(gn));
        f.push_back(k.f(n).image_under(gn));
    }
    return {BiFilteredComplex(conjugated(k.complex(), g), std::move(w), std::move(f)), {-m, lo + 1 + m}, s};
}

mhc::MixedHodgeComplexData pure_mhc(const HodgeStructure& h, int degree, int w_index, const Mat& beta) {
    const std::size_t dim = h.dim();
    const Mat b = beta.rows() == 0 && dim > 0 ? Mat::identity(dim) : beta;
    if (b.rows() != dim || b.cols() != dim) throw InvalidInput("comparison has the wrong shape");
    mhc::MixedHodgeComplexData out;
    out.rational = Complex::concentrated(degree, dim);
    const Filtration w = Filtration::trivial(Direction::Increasing, dim, w_index);
    out.rational_w = {w};
    out.hodge = BiFilteredComplex(out.rational, {w.image_under(b)}, {h.F().image_under(b)});
    out.comparison = ss::ChainMap(out.rational, out.rational, {{degree, b}});
    return out;
}

mhc::MixedHodgeComplexData base_change(const mhc::MixedHodgeComplexData& m, const std::map<int, Mat>& g,
                                       const std::map<int, Mat>& c) {
    auto pick = [](const std::map<int, Mat>& x, int n, std::size_t dim) {
        auto it = x.find(n);
        return it == x.end() ? Mat::identity(dim) : it->second;
    };
    std::vector<Mat> gq, gc;
    for (int n = m.rational.lo(); n <= m.rational.hi() && !m.rational.empty(); ++n)
        gq.push_back(pick(g, n, m.rational.dim(n)));
    const Complex& kc = m.hodge.complex();
    for (int n = kc.lo(); n <= kc.hi() && !kc.empty(); ++n) gc.push_back(pick(c, n, kc.dim(n)));

    mhc::MixedHodgeComplexData out;
    out.rational = m.rational.empty() ? m.rational : conjugated(m.rational, gq);
    for (std::size_t j = 0; j < m.rational_w.size(); ++j) out.rational_w.push_back(m.rational_w[j].image_under(gq[j]));
    std::vector<Filtration> w, f;
    for (std::size_t j = 0; j < gc.size(); ++j) {
        w.push_back(m.hodge.w_filtrations()[j].image_under(gc[j]));
        f.push_back(m.hodge.f_filtrations()[j].image_under(gc[j]));
    }
    const Complex kc2 = kc.empty() ? kc : conjugated(kc, gc);
    out.hodge = BiFilteredComplex(kc2, std::move(w), std::move(f));
    std::map<int, Mat> beta;
    for (const auto& [n, b] : m.comparison.maps())
        beta[n] = pick(c, n, kc.dim(n)) * b * inverse(pick(g, n, m.rational.dim(n)));
    out.comparison = ss::ChainMap(out.rational, kc2, std::move(beta));
    return out;
}

mhc::MHCMorphism random_cone_morphism(Random& rng) {
    const int w = rng.uniform(-1, 2);
    const HodgeStructure s = random_hs(rng, w, 2, false);
    const auto a = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto b = static_cast<std::size_t>(rng.uniform(1, 2));
    HodgeStructure ha = HodgeStructure::zero(w), hb = HodgeStructure::zero(w);
    for (std::size_t j = 0; j < a; ++j) ha = hodge::hs_direct_sum(ha, s);
    for (std::size_t j = 0; j < b; ++j) hb = hodge::hs_direct_sum(hb, s);
    const Mat ga = rng.invertible_rational(ha.dim()), gb = rng.invertible_rational(hb.dim());
    const Mat f = gb * kron(rng.rational_matrix(b, a, 2), Mat::identity(s.dim())) * inverse(ga);
    ha = HodgeStructure(w, ha.F().image_under(ga));
    hb = HodgeStructure(w, hb.F().image_under(gb));

    const Mat ba = rng.invertible_gaussian(ha.dim()), bb = rng.invertible_gaussian(hb.dim());
    mhc::MHCMorphism u;
    u.source = pure_mhc(ha, 0, w, ba);
    u.target = pure_mhc(hb, 0, w, bb);
    u.rational = ss::ChainMap(u.source.rational, u.target.rational, {{0, f}});
    u.hodge = ss::ChainMap(u.source.hodge.complex(), u.target.hodge.complex(), {{0, bb * f * inverse(ba)}});
    return u;
}

mhc::MixedHodgeComplexData random_mhc(Random& rng) {
    const int parts = rng.uniform(1, 3);
    mhc::MixedHodgeComplexData total;
    bool first = true;
    for (int k = 0; k < parts; ++k) {
        const mhc::MHCMorphism u = random_cone_morphism(rng);
        mhc::MixedHodgeComplexData part = mhc::shift(mhc::mixed_cone(u), rng.uniform(-1, 1), rng.uniform(-1, 1));
        total = first ? part : mhc::direct_sum(total, part);
        first = false;
    }
    std::map<int, Mat> g, c;
    for (int n = total.rational.lo(); n <= total.rational.hi(); ++n) {
        g[n] = rng.invertible_rational(total.rational.dim(n));
        c[n] = rng.invertible_gaussian(total.hodge.complex().dim(n));
    }
    return base_change(total, g, c);
}

}  // namespace hodgekit::fixtures
