#include "hodgekit/mhs.hpp"

#include "hodgekit/errors.hpp"

#include <string>

namespace hodgekit::mhs {

MixedHodgeStructure::MixedHodgeStructure(Filtration w, Filtration f) : w_(std::move(w)), f_(std::move(f)) {
    if (w_.decreasing()) throw InvalidInput("weight filtration must be increasing");
    if (!f_.decreasing()) throw InvalidInput("Hodge filtration must be decreasing");
    if (w_.ambient_dim() != f_.ambient_dim()) throw InvalidInput("W and F live on spaces of different dimension");
    if (!w_.is_real()) throw InvalidInput("weight filtration must have rational bases");
}

MixedHodgeStructure MixedHodgeStructure::zero() {
    return MixedHodgeStructure(Filtration(filt::Direction::Increasing, 0, {}),
                               Filtration(filt::Direction::Decreasing, 0, {}));
}

MixedHodgeStructure MixedHodgeStructure::from_pure(const HodgeStructure& h) {
    if (h.dim() == 0) return zero();
    return MixedHodgeStructure(Filtration::trivial(filt::Direction::Increasing, h.dim(), h.weight()), h.F());
}

HodgeStructure graded_piece(const MixedHodgeStructure& h, int n) {
    return HodgeStructure(n, h.F().on_subquotient(h.W().gr(n)));
}

std::map<int, HodgeStructure> validate_mhs(const MixedHodgeStructure& h) {
    std::map<int, HodgeStructure> out;
    for (int n : h.W().jumps()) {
        HodgeStructure piece = graded_piece(h, n);
        try {
            hodge::validate_hs(piece);
        } catch (const InvalidInput& e) {
            throw InvalidInput("Gr^W_" + std::to_string(n) + " is not a Hodge structure of weight " +
                                   std::to_string(n) + ": " + e.what(),
                               "{\"weight\":" + std::to_string(n) + ",\"piece\":" + e.witness() + "}");
        }
        out.emplace(n, std::move(piece));
    }
    return out;
}

bool is_valid(const MixedHodgeStructure& h) {
    try {
        validate_mhs(h);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

HodgeNumbers hodge_numbers(const MixedHodgeStructure& h) {
    HodgeNumbers out;
    for (const auto& [n, piece] : validate_mhs(h))
        for (const auto& [pq, d] : hodge::hodge_numbers(piece)) out[pq] += d;
    return out;
}

std::map<int, std::size_t> weight_dims(const MixedHodgeStructure& h) {
    std::map<int, std::size_t> out;
    for (int n : h.W().jumps()) out[n] = h.W().gr(n).dim();
    return out;
}

Subspace deligne_piece(const MixedHodgeStructure& h, int p, int q) {
    const std::size_t d = h.dim();
    const Filtration fbar = h.F().conj();
    const int n = p + q;
    const int w_lo = h.W().index_range().first;
    Subspace correction = intersect(fbar.at(q), h.W().at(n));
    for (int j = 1; n - j - 1 >= w_lo; ++j)
        correction = sum(correction, intersect(fbar.at(q - j), h.W().at(n - j - 1)));
    if (d == 0) return Subspace::zero(0);
    return intersect(intersect(h.F().at(p), h.W().at(n)), correction);
}

namespace {

std::string pq_json(int p, int q) {
    return "{\"p\":" + std::to_string(p) + ",\"q\":" + std::to_string(q) + "}";
}

}  // namespace

std::map<Bidegree, Subspace> deligne_splitting(const MixedHodgeStructure& h) {
    const auto graded = validate_mhs(h);
    const std::size_t d = h.dim();
    std::map<Bidegree, Subspace> pieces;
    auto [flo, fhi] = h.F().index_range();
    for (int n : h.W().jumps())
        for (int p = flo; p <= fhi; ++p) {
            Subspace piece = deligne_piece(h, p, n - p);
            if (!piece.is_zero()) pieces.emplace(Bidegree{p, n - p}, std::move(piece));
        }

    auto direct_sum_of = [&](auto keep) {
        Subspace span = Subspace::zero(d);
        std::size_t total = 0;
        for (const auto& [pq, piece] : pieces)
            if (keep(pq)) {
                span = sum(span, piece);
                total += piece.dim();
            }
        return std::make_pair(span, total);
    };

    auto [wlo, whi] = h.W().index_range();
    for (int n = wlo; n <= whi; ++n) {
        auto [span, total] = direct_sum_of([n](const Bidegree& pq) { return pq.first + pq.second <= n; });
        if (!(span == h.W().at(n)) || total != span.dim())
            throw Inconsistent("W_" + std::to_string(n) + " is not the direct sum of the I^{p,q} with p+q <= n");
    }
    for (int p = flo; p <= fhi; ++p) {
        auto [span, total] = direct_sum_of([p](const Bidegree& pq) { return pq.first >= p; });
        if (!(span == h.F().at(p)) || total != span.dim())
            throw Inconsistent("F^" + std::to_string(p) + " is not the direct sum of the I^{p',q} with p' >= p");
    }
    for (const auto& [pq, piece] : pieces) {
        const int n = pq.first + pq.second;
        const Subquotient gr = h.W().gr(n);
        const hodge::Bigrading bg = hodge::validate_hs(graded.at(n));
        auto it = bg.pieces.find(pq.first);
        if (it == bg.pieces.end() || !(gr.coords(piece) == it->second) || piece.dim() != it->second.dim())
            throw Inconsistent("I^{p,q} does not project isomorphically onto H^{p,q}(Gr^W)", pq_json(pq.first, pq.second));
    }
    for (const auto& [n, hs] : graded)
        for (const auto& [p, piece] : hodge::validate_hs(hs).pieces)
            if (!pieces.count({p, n - p}))
                throw Inconsistent("H^{p,q}(Gr^W) has no splitting piece", pq_json(p, n - p));
    return pieces;
}

MHSMorphism::MHSMorphism(Mat map, MixedHodgeStructure source, MixedHodgeStructure target)
    : map_(std::move(map)), source_(std::move(source)), target_(std::move(target)) {
    if (map_.cols() != source_.dim() || map_.rows() != target_.dim())
        throw InvalidInput("morphism matrix has the wrong shape");
    if (!map_.is_real()) throw InvalidInput("morphism of mixed Hodge structures must be rational");
    if (!filt::is_compatible(map_, source_.W(), target_.W())) throw InvalidInput("morphism does not preserve W");
    if (!filt::is_compatible(map_, source_.F(), target_.F())) throw InvalidInput("morphism does not preserve F");
}

StrictnessResult strictness_of(const MHSMorphism& f) {
    return {filt::is_strict(f.map(), f.source().W(), f.target().W()),
            filt::is_strict(f.map(), f.source().F(), f.target().F())};
}

StrictnessResult morphism_strictness(const MHSMorphism& f) {
    validate_mhs(f.source());
    validate_mhs(f.target());
    StrictnessResult r = strictness_of(f);
    if (!r.w.strict)
        throw Inconsistent("morphism of mixed Hodge structures is not strict for W at index " + std::to_string(*r.w.index));
    if (!r.f.strict)
        throw Inconsistent("morphism of mixed Hodge structures is not strict for F at index " + std::to_string(*r.f.index));
    return r;
}

KernelCokernel kernel_cokernel(const MHSMorphism& f) {
    validate_mhs(f.source());
    validate_mhs(f.target());
    const MixedHodgeStructure& src = f.source();
    const MixedHodgeStructure& tgt = f.target();

    KernelCokernel out;
    out.kernel_space = kernel_space(f.map());
    out.kernel = MixedHodgeStructure(src.W().restricted_to(out.kernel_space), src.F().restricted_to(out.kernel_space));
    const Subspace im = image(f.map());
    out.cokernel_space = Subquotient(Subspace::full(tgt.dim()), im);
    out.cokernel = MixedHodgeStructure(tgt.W().on_subquotient(out.cokernel_space),
                                       tgt.F().on_subquotient(out.cokernel_space));
    out.image = MixedHodgeStructure(tgt.W().restricted_to(im), tgt.F().restricted_to(im));

    // Coimage = source / Ker f, transported to image coordinates by f.
    const Subquotient coim(Subspace::full(src.dim()), out.kernel_space);
    const Mat reps = coim.representatives();
    Mat to_image(im.dim(), coim.dim());
    for (std::size_t j = 0; j < coim.dim(); ++j) {
        const Vec c = im.coords(f.map().apply(reps.row(j)));
        for (std::size_t k = 0; k < c.size(); ++k) to_image(k, j) = c[k];
    }
    out.coimage = MixedHodgeStructure(src.W().on_subquotient(coim).image_under(to_image),
                                      src.F().on_subquotient(coim).image_under(to_image));
    if (!(out.coimage == out.image))
        throw Inconsistent("coimage and image carry different filtrations (morphism is not strict)");

    for (const auto* part : {&out.kernel, &out.cokernel}) {
        try {
            validate_mhs(*part);
        } catch (const InvalidInput& e) {
            throw Inconsistent(std::string(part == &out.kernel ? "kernel" : "cokernel") +
                                   " is not a mixed Hodge structure: " + e.what(),
                               e.witness());
        }
    }
    return out;
}

MixedHodgeStructure mhs_direct_sum(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
    return MixedHodgeStructure(filt::direct_sum(a.W(), b.W()), filt::direct_sum(a.F(), b.F()));
}

MixedHodgeStructure mhs_tensor(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
    return MixedHodgeStructure(filt::tensor(a.W(), b.W()), filt::tensor(a.F(), b.F()));
}

MixedHodgeStructure mhs_dual(const MixedHodgeStructure& h) {
    return MixedHodgeStructure(filt::dual(h.W()), filt::dual(h.F()));
}

MixedHodgeStructure mhs_hom(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
    return mhs_tensor(b, mhs_dual(a));
}

MixedHodgeStructure mhs_twist(const MixedHodgeStructure& h, int m) {
    return MixedHodgeStructure(h.W().shift(-2 * m), h.F().shift(m));
}

MixedHodgeStructure base_change(const MixedHodgeStructure& h, const Mat& g) {
    if (!g.is_square() || g.rows() != h.dim() || !g.is_real() || (h.dim() > 0 && determinant(g).is_zero()))
        throw InvalidInput("base change must be an invertible rational matrix of the right size");
    return MixedHodgeStructure(h.W().image_under(g), h.F().image_under(g));
}

}  // namespace hodgekit::mhs

namespace hodgekit::mhs {

std::optional<Mat> unipotent_isomorphism(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
    if (!(a.W() == b.W())) throw InvalidInput("unipotent isomorphism needs a common weight filtration");
    const std::size_t d = a.dim();
    if (d == 0) return Mat();

    // Columns of p: lifts of Gr^W_n bases, weights ascending.
    Mat p(d, d);
    std::vector<int> weight;
    for (int n : a.W().jumps()) {
        const Mat reps = a.W().gr(n).representatives();
        for (std::size_t r = 0; r < reps.rows(); ++r) {
            for (std::size_t k = 0; k < d; ++k) p(k, weight.size()) = reps(r, k);
            weight.push_back(n);
        }
    }
    const Mat p_inv = inverse(p);
    const Filtration fa = a.F().image_under(p_inv);
    const Filtration fb = b.F().image_under(p_inv);

    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if (weight[r] < weight[c]) unknowns.emplace_back(r, c);

    std::vector<Vec> rows;
    auto [lo, hi] = fa.index_range();
    for (int k = lo; k <= hi; ++k) {
        const Subspace src = fa.at(k);
        const Mat conditions = annihilator(fb.at(k)).basis();
        if (src.dim() != fb.at(k).dim()) return std::nullopt;
        for (std::size_t v = 0; v < src.dim(); ++v)
            for (std::size_t c = 0; c < conditions.rows(); ++c) {
                Vec eq(unknowns.size() + 1);
                Scalar rhs(0);
                for (std::size_t j = 0; j < d; ++j) rhs -= conditions(c, j) * src.basis()(v, j);
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    eq[u] = conditions(c, unknowns[u].first) * src.basis()(v, unknowns[u].second);
                eq.back() = rhs;
                Vec re(eq.size()), im(eq.size());
                for (std::size_t u = 0; u < eq.size(); ++u) {
                    re[u] = Scalar(eq[u].re());
                    im[u] = Scalar(eq[u].im());
                }
                rows.push_back(std::move(re));
                rows.push_back(std::move(im));
            }
    }
    Mat n_adapted = Mat::identity(d);
    if (!rows.empty()) {
        const RrefResult rr = rref(Mat::from_rows(rows, unknowns.size() + 1));
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
            if (rr.pivots[k] == unknowns.size()) return std::nullopt;
            const auto [r, c] = unknowns[rr.pivots[k]];
            n_adapted(r, c) = rr.reduced(k, unknowns.size());
        }
    }
    const Mat g = p * n_adapted * p_inv;
    if (!(a.F().image_under(g) == b.F()) || !(a.W().image_under(g) == a.W()))
        throw Inconsistent("solution of the unipotent isomorphism system does not transport F");
    return g;
}

Comparison compare(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
    Comparison c;
    c.same_weight_dims = weight_dims(a) == weight_dims(b);
    c.same_hodge_numbers = hodge_numbers(a) == hodge_numbers(b);
    c.identical = a == b;
    c.unipotent_isomorphic = a.W() == b.W() && unipotent_isomorphism(a, b).has_value();
    return c;
}

}  // namespace hodgekit::mhs
