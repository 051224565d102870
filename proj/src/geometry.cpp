#include "hodgekit/geometry.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hodgekit::geometry {

namespace {

using filt::Direction;

std::string str(int n) { return std::to_string(n); }

HodgeStructure cohomology_of(const Stratum& s, int k, int weight_if_missing) {
    if (k < 0 || k >= static_cast<int>(s.cohomology.size())) return HodgeStructure::zero(weight_if_missing);
    return s.cohomology[static_cast<std::size_t>(k)];
}

void check_stratum(const Stratum& s) {
    for (std::size_t k = 0; k < s.cohomology.size(); ++k) {
        const HodgeStructure& h = s.cohomology[k];
        const int kk = static_cast<int>(k);
        if (h.weight() != kk)
            throw InvalidInput("H^" + str(kk) + " of stratum '" + s.name + "' has weight " + str(h.weight()));
        if (h.dim() == 0) continue;
        for (const auto& [pq, d] : hodge::hodge_numbers(h))
            if (d > 0 && (pq.first < 0 || pq.second < 0 || pq.first > kk || pq.second > kk))
                throw InvalidInput("H^" + str(kk) + " of stratum '" + s.name + "' has type (" + str(pq.first) + "," +
                                   str(pq.second) + ") outside [0," + str(kk) + "]");
    }
    if (s.maps.size() != s.faces.size())
        throw InvalidInput("stratum '" + s.name + "' needs one map family per face");
}

HodgeStructure sum_of(int weight, const std::vector<HodgeStructure>& parts) {
    HodgeStructure out = HodgeStructure::zero(weight);
    for (const HodgeStructure& h : parts) out = hodge::hs_direct_sum(out, h);
    return out;
}

std::vector<std::size_t> offsets_of(const std::vector<HodgeStructure>& parts) {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (const HodgeStructure& h : parts) {
        out.push_back(acc);
        acc += h.dim();
    }
    return out;
}

/// One row of E_1 (fixed q): terms at consecutive p and d_1 between them.
struct Row {
    int q = 0;
    int p_lo = 0;
    std::vector<HodgeStructure> terms;
    std::vector<Mat> d;  ///< d[k]: terms[k] -> terms[k+1]
};

template <class DegreeOf>
void finish_row(const Row& row, const std::string& map_name, DegreeOf degree_of, WeightGradedCohomology& out) {
    const std::size_t n = row.terms.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Mat& d = row.d[k];
        const int p = row.p_lo + static_cast<int>(k);
        if (!d.is_real()) throw InvalidInput(map_name + " out of E_1^{" + str(p) + "," + str(row.q) + "} is not rational");
        if (!filt::is_compatible(d, row.terms[k].F(), row.terms[k + 1].F()))
            throw InvalidInput("d_1 out of E_1^{" + str(p) + "," + str(row.q) + "} is not a morphism of Hodge structures (" +
                               map_name + ")");
        if (k + 2 < n && !(row.d[k + 1] * d).is_zero())
            throw InvalidInput("d_1 ∘ d_1 != 0 out of E_1^{" + str(p) + "," + str(row.q) +
                               "}: the face maps violate the simplicial identities");
    }
    for (std::size_t k = 0; k < n; ++k) {
        const int p = row.p_lo + static_cast<int>(k);
        const HodgeStructure& t = row.terms[k];
        if (t.dim() == 0) continue;
        out.e1[{p, row.q}] = t.dim();
        const Mat d_out = k + 1 < n ? row.d[k] : Mat(0, t.dim());
        const Subspace ker = kernel_space(d_out);
        const Subspace im = k > 0 ? image(row.d[k - 1]) : Subspace::zero(t.dim());
        const Subquotient sq(ker, im);
        if (sq.dim() == 0) continue;
        HodgeStructure piece(row.q, t.F().on_subquotient(sq));
        try {
            hodge::validate_hs(piece);
        } catch (const InvalidInput& e) {
            throw Inconsistent("E_2^{" + str(p) + "," + str(row.q) + "} is not a Hodge structure: " + e.what(),
                               e.witness());
        }
        out.e2[{p, row.q}] = sq.dim();
        out.graded[degree_of(p, row.q)].emplace(row.q, std::move(piece));
    }
}

int max_degree(const std::vector<std::vector<Stratum>>& levels, int per_level_shift) {
    int out = 0;
    for (std::size_t m = 0; m < levels.size(); ++m)
        for (const Stratum& s : levels[m])
            out = std::max(out, static_cast<int>(s.cohomology.size()) - 1 + per_level_shift * static_cast<int>(m));
    return out;
}

}  // namespace

std::map<int, std::size_t> WeightGradedCohomology::weight_dims(int degree) const {
    std::map<int, std::size_t> out;
    auto it = graded.find(degree);
    if (it == graded.end()) return out;
    for (const auto& [q, h] : it->second) out[q] = h.dim();
    return out;
}

std::size_t WeightGradedCohomology::total_dim(int degree) const {
    std::size_t out = 0;
    for (const auto& [q, d] : weight_dims(degree)) out += d;
    return out;
}

WeightGradedCohomology ncd_weight_cohomology(const NCDInput& input) {
    const auto& levels = input.levels;
    for (std::size_t p = 0; p < levels.size(); ++p)
        for (const Stratum& s : levels[p]) {
            check_stratum(s);
            if (p == 0 && !s.faces.empty()) throw InvalidInput("components cannot have faces");
            if (p > 0 && s.faces.size() != p + 1)
                throw InvalidInput("stratum '" + s.name + "' of Y_" + str(static_cast<int>(p)) + " needs " +
                                   str(static_cast<int>(p) + 1) + " faces");
            for (std::size_t f : s.faces)
                if (f >= levels[p - 1].size()) throw InvalidInput("stratum '" + s.name + "' names a missing face");
        }

    WeightGradedCohomology out;
    const int qmax = max_degree(levels, 0);
    for (int q = 0; q <= qmax; ++q) {
        Row row;
        row.q = q;
        std::vector<std::vector<HodgeStructure>> parts(levels.size());
        for (std::size_t p = 0; p < levels.size(); ++p) {
            for (const Stratum& s : levels[p]) parts[p].push_back(cohomology_of(s, q, q));
            row.terms.push_back(sum_of(q, parts[p]));
        }
        for (std::size_t p = 0; p + 1 < levels.size(); ++p) {
            const auto src_off = offsets_of(parts[p]);
            const auto tgt_off = offsets_of(parts[p + 1]);
            Mat d(row.terms[p + 1].dim(), row.terms[p].dim());
            for (std::size_t t = 0; t < levels[p + 1].size(); ++t) {
                const Stratum& tau = levels[p + 1][t];
                for (std::size_t j = 0; j < tau.faces.size(); ++j) {
                    const std::size_t sigma = tau.faces[j];
                    const std::size_t rows = parts[p + 1][t].dim(), cols = parts[p][sigma].dim();
                    if (rows == 0 || cols == 0) continue;
                    auto it = tau.maps[j].find(q);
                    if (it == tau.maps[j].end())
                        throw InvalidInput("stratum '" + tau.name + "' lacks the restriction from face " +
                                           str(static_cast<int>(j)) + " in degree " + str(q));
                    if (it->second.rows() != rows || it->second.cols() != cols)
                        throw InvalidInput("restriction into '" + tau.name + "' has the wrong shape");
                    const Mat block = (j % 2 == 0) ? it->second : -it->second;
                    for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < cols; ++c) d(tgt_off[t] + r, src_off[sigma] + c) += block(r, c);
                }
            }
            row.d.push_back(std::move(d));
        }
        finish_row(row, "restriction", [](int p, int qq) { return p + qq; }, out);
    }
    for (const auto& [i, pieces] : out.graded)
        for (const auto& [q, h] : pieces)
            if (q < 0 || q > i)
                throw Inconsistent("H^" + str(i) + " has weight " + str(q) + " outside [0," + str(i) + "]");
    return out;
}

WeightGradedCohomology open_weight_cohomology(const OpenSmoothInput& input) {
    const auto& levels = input.levels;
    if (levels.empty() || levels[0].size() != 1) throw InvalidInput("open input needs exactly one stratum Y^0 = X");
    for (std::size_t m = 0; m < levels.size(); ++m)
        for (const Stratum& s : levels[m]) {
            check_stratum(s);
            if (s.faces.size() != m)
                throw InvalidInput("stratum '" + s.name + "' of Y^" + str(static_cast<int>(m)) + " needs " +
                                   str(static_cast<int>(m)) + " faces");
            for (std::size_t f : s.faces)
                if (f >= levels[m - 1].size()) throw InvalidInput("stratum '" + s.name + "' names a missing face");
        }

    WeightGradedCohomology out;
    const int mmax = static_cast<int>(levels.size()) - 1;
    const int qmax = max_degree(levels, 2);
    for (int q = 0; q <= qmax; ++q) {
        Row row;
        row.q = q;
        row.p_lo = -mmax;
        std::vector<std::vector<HodgeStructure>> parts(levels.size());
        for (int m = mmax; m >= 0; --m) {
            const auto mu = static_cast<std::size_t>(m);
            for (const Stratum& s : levels[mu])
                parts[mu].push_back(hodge::tate_twist(cohomology_of(s, q - 2 * m, q - 2 * m), -m));
            row.terms.push_back(sum_of(q, parts[mu]));
        }
        for (int m = mmax; m >= 1; --m) {
            const auto mu = static_cast<std::size_t>(m);
            const auto src_off = offsets_of(parts[mu]);
            const auto tgt_off = offsets_of(parts[mu - 1]);
            const std::size_t src_dim = std::accumulate(parts[mu].begin(), parts[mu].end(), std::size_t{0},
                                                        [](std::size_t a, const HodgeStructure& h) { return a + h.dim(); });
            const std::size_t tgt_dim = std::accumulate(parts[mu - 1].begin(), parts[mu - 1].end(), std::size_t{0},
                                                        [](std::size_t a, const HodgeStructure& h) { return a + h.dim(); });
            Mat d(tgt_dim, src_dim);
            for (std::size_t t = 0; t < levels[mu].size(); ++t) {
                const Stratum& tau = levels[mu][t];
                for (std::size_t j = 0; j < tau.faces.size(); ++j) {
                    const std::size_t rho = tau.faces[j];
                    const std::size_t rows = parts[mu - 1][rho].dim(), cols = parts[mu][t].dim();
                    if (rows == 0 || cols == 0) continue;
                    auto it = tau.maps[j].find(q - 2 * m);
                    if (it == tau.maps[j].end())
                        throw InvalidInput("stratum '" + tau.name + "' lacks the Gysin map to face " +
                                           str(static_cast<int>(j) + 1) + " in degree " + str(q - 2 * m));
                    if (it->second.rows() != rows || it->second.cols() != cols)
                        throw InvalidInput("Gysin map out of '" + tau.name + "' has the wrong shape");
                    // (-1)^{j+1} with faces numbered from 1.
                    const Mat block = (j % 2 == 0) ? it->second : -it->second;
                    for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < cols; ++c) d(tgt_off[rho] + r, src_off[t] + c) += block(r, c);
                }
            }
            row.d.push_back(std::move(d));
        }
        finish_row(row, "Gysin map of type (1,1)", [](int p, int qq) { return p + qq; }, out);
    }
    for (const auto& [i, pieces] : out.graded)
        for (const auto& [q, h] : pieces) {
            if (q < i || q > 2 * i)
                throw Inconsistent("H^" + str(i) + " has weight " + str(q) + " outside [" + str(i) + "," + str(2 * i) + "]");
            for (const auto& [pq, d] : hodge::hodge_numbers(h))
                if (d > 0 && (pq.first < 0 || pq.second < 0 || pq.first > i || pq.second > i))
                    throw Inconsistent("H^" + str(i) + " has a Hodge number outside [0," + str(i) + "]");
        }
    return out;
}

MixedHodgeStructure split_mhs(const std::map<int, HodgeStructure>& graded) {
    MixedHodgeStructure out = MixedHodgeStructure::zero();
    for (const auto& [q, h] : graded) out = mhs::mhs_direct_sum(out, MixedHodgeStructure::from_pure(h));
    return out;
}

std::vector<HodgeStructure> curve_cohomology(int genus) {
    if (genus < 0) throw InvalidInput("genus must be non-negative");
    const auto g = static_cast<std::size_t>(genus);
    std::vector<HodgeStructure> out{HodgeStructure::tate(0)};
    if (g == 0) {
        out.push_back(HodgeStructure::zero(1));
    } else {
        std::vector<Vec> holo, anti;
        for (std::size_t a = 0; a < g; ++a) {
            Vec v(2 * g);
            v[a] = Scalar(1);
            v[a + g] = Scalar::i();
            holo.push_back(v);
            anti.push_back(conj(v));
        }
        out.push_back(HodgeStructure::from_bigrading(
            1, 2 * g, {{1, Subspace::span(holo, 2 * g)}, {0, Subspace::span(anti, 2 * g)}}));
    }
    out.push_back(HodgeStructure::tate(-1));
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t x = start; x < n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Coordinates of v_1 ∧ ... ∧ v_k in the basis e_S (S sorted, lexicographic).
Vec wedge(const std::vector<Vec>& vs, const std::vector<std::vector<std::size_t>>& basis) {
    Vec out(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Mat m(vs.size(), vs.size());
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = 0; c < vs.size(); ++c) m(r, c) = vs[r][basis[b][c]];
        out[b] = vs.empty() ? Scalar(1) : determinant(m);
    }
    return out;
}

HodgeStructure torus_cohomology(std::size_t r, std::size_t j) {
    const std::size_t n = 2 * r;
    const auto basis = combinations(n, j);
    std::vector<Vec> holo, anti;
    for (std::size_t a = 0; a < r; ++a) {
        Vec v(n);
        v[a] = Scalar(1);
        v[a + r] = Scalar::i();
        holo.push_back(v);
        anti.push_back(conj(v));
    }
    std::map<int, Subspace> pieces;
    for (std::size_t p = 0; p <= j; ++p) {
        if (p > r || j - p > r) continue;
        std::vector<Vec> span;
        for (const auto& a : combinations(r, p))
            for (const auto& b : combinations(r, j - p)) {
                std::vector<Vec> vs;
                for (std::size_t x : a) vs.push_back(holo[x]);
                for (std::size_t x : b) vs.push_back(anti[x]);
                span.push_back(wedge(vs, basis));
            }
        pieces.emplace(static_cast<int>(p), Subspace::span(span, basis.size()));
    }
    return HodgeStructure::from_bigrading(static_cast<int>(j), basis.size(), pieces);
}

mhc::MixedHodgeComplexData pure_complex(int lo, const std::vector<HodgeStructure>& h) {
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    std::vector<filt::Filtration> w, f;
    for (std::size_t k = 0; k < h.size(); ++k) {
        dims.push_back(h[k].dim());
        if (k > 0) d.push_back(Mat(h[k].dim(), h[k - 1].dim()));
        w.push_back(filt::Filtration::trivial(Direction::Increasing, h[k].dim(), 0));
        f.push_back(h[k].F());
    }
    mhc::MixedHodgeComplexData out;
    out.rational = ss::Complex(lo, dims, d);
    out.rational_w = w;
    out.hodge = ss::BiFilteredComplex(out.rational, w, f);
    out.comparison = ss::ChainMap::identity(out.rational);
    return out;
}

}  // namespace

OpenSmoothInput punctured_curve_input(int genus, int points) {
    if (points < 0) throw InvalidInput("number of points must be non-negative");
    OpenSmoothInput out;
    out.levels.push_back({Stratum{"X", curve_cohomology(genus), {}, {}}});
    std::vector<Stratum> pts;
    for (int k = 0; k < points; ++k)
        pts.push_back(Stratum{"y" + str(k), {HodgeStructure::tate(0)}, {0}, {{{0, Mat{{1}}}}}});
    if (!pts.empty()) out.levels.push_back(std::move(pts));
    return out;
}

mhc::MHCMorphism punctured_curve_gysin(int genus, int points) {
    if (points < 0) throw InvalidInput("number of points must be non-negative");
    const auto m = static_cast<std::size_t>(points);
    // H^0(Y)(-1) placed in degree 2: weight 2, type (1,1).
    HodgeStructure twisted(2, filt::Filtration::trivial(Direction::Decreasing, m, 1));
    mhc::MHCMorphism u;
    u.source = pure_complex(2, {twisted});
    u.target = pure_complex(0, curve_cohomology(genus));
    Mat gysin(1, m);
    for (std::size_t k = 0; k < m; ++k) gysin(0, k) = Scalar(1);
    u.rational = ss::ChainMap(u.source.rational, u.target.rational, {{2, gysin}});
    u.hodge = ss::ChainMap(u.source.hodge.complex(), u.target.hodge.complex(), {{2, gysin}});
    return u;
}

mhc::MixedHodgeComplexData punctured_curve_mhc(int genus, int points, const mhc::ConeHomotopies& h) {
    return mhc::mixed_cone(punctured_curve_gysin(genus, points), h);
}

std::map<int, MixedHodgeStructure> standard_space(const std::string& kind, const std::vector<int>& params) {
    std::map<int, MixedHodgeStructure> out;
    if (kind == "projective_space") {
        if (params.size() != 1 || params[0] < 0) throw InvalidInput("projective_space needs one parameter n >= 0");
        for (int r = 0; r <= params[0]; ++r) out.emplace(2 * r, MixedHodgeStructure::from_pure(HodgeStructure::tate(-r)));
    } else if (kind == "torus") {
        if (params.size() != 1 || params[0] < 0 || params[0] > 4)
            throw InvalidInput("torus needs one parameter 0 <= r <= 4 (complex dimension)");
        const auto r = static_cast<std::size_t>(params[0]);
        for (std::size_t j = 0; j <= 2 * r; ++j)
            out.emplace(static_cast<int>(j), MixedHodgeStructure::from_pure(torus_cohomology(r, j)));
    } else if (kind == "punctured_curve") {
        if (params.size() != 2 || params[0] < 0 || params[1] < 0)
            throw InvalidInput("punctured_curve needs parameters g >= 0 and m >= 0");
        const mhc::MixedHodgeComplexData m = punctured_curve_mhc(params[0], params[1]);
        for (int n = m.rational.lo(); n <= m.rational.hi(); ++n) {
            MixedHodgeStructure h = mhc::cohomology_mhs(m, n);
            if (h.dim() > 0) out.emplace(n, std::move(h));
        }
    } else {
        throw InvalidInput("unknown space kind '" + kind + "'");
    }
    for (const auto& [n, h] : out) mhs::validate_mhs(h);
    return out;
}

std::map<int, MixedHodgeStructure> product(const std::map<int, MixedHodgeStructure>& x,
                                           const std::map<int, MixedHodgeStructure>& y) {
    std::map<int, MixedHodgeStructure> out;
    for (const auto& [r, a] : x)
        for (const auto& [s, b] : y) {
            MixedHodgeStructure t = mhs::mhs_tensor(a, b);
            auto it = out.find(r + s);
            if (it == out.end())
                out.emplace(r + s, std::move(t));
            else
                it->second = mhs::mhs_direct_sum(it->second, t);
        }
    return out;
}

EmbeddedVarietyResult embedded_variety_mhs(const EmbeddedVarietyInput& in) {
    for (const MixedHodgeStructure* h : {&in.x_prime, &in.x, &in.y_prime}) {
        mhs::validate_mhs(*h);
        for (const auto& [w, d] : mhs::weight_dims(*h))
            if (w < 0 || w > in.degree)
                throw InvalidInput("input weight " + str(w) + " outside [0," + str(in.degree) + "]");
    }
    const MixedHodgeStructure middle = mhs::mhs_direct_sum(in.y_prime, in.x);
    if (in.i_prime_star.rows() != in.y_prime.dim() || in.i_prime_star.cols() != in.x_prime.dim() ||
        in.tr_p.rows() != in.x.dim() || in.tr_p.cols() != in.x_prime.dim())
        throw InvalidInput("i'^* or Tr p has the wrong shape");
    const Mat phi = vstack(in.i_prime_star, -in.tr_p);
    const mhs::MHSMorphism morphism(phi, in.x_prime, middle);
    if (rank(phi) != in.x_prime.dim()) throw InvalidInput("i'^* - Tr p is not injective");
    const mhs::KernelCokernel kc = mhs::kernel_cokernel(morphism);

    EmbeddedVarietyResult out;
    out.cokernel = kc.cokernel;
    out.h_y = kc.cokernel;

    const bool any = in.tr_p_y || in.i_star || in.p_y_star;
    if (any) {
        if (!in.tr_p_y || !in.i_star || !in.p_y_star)
            throw InvalidInput("(Tr p)|_Y, i^* and p_Y^* must be given together");
        const std::size_t dy = in.tr_p_y->rows();
        if (in.tr_p_y->cols() != in.y_prime.dim() || in.i_star->rows() != dy || in.i_star->cols() != in.x.dim() ||
            in.p_y_star->rows() != in.y_prime.dim() || in.p_y_star->cols() != dy)
            throw InvalidInput("maps to H^i(Y) have inconsistent shapes");
        if (!((*in.tr_p_y) * (*in.p_y_star) == Mat::identity(dy)))
            throw InvalidInput("(Tr p)|_Y is not a retraction of p_Y^*");
        if (rank(*in.p_y_star) != dy) throw InvalidInput("p_Y^* is not injective");
        const Mat psi = hstack(*in.tr_p_y, *in.i_star);
        if (!(psi * phi).is_zero()) throw InvalidInput("((Tr p)|_Y + i^*) ∘ (i'^* - Tr p) != 0");
        if (rank(psi) != dy) throw InvalidInput("(Tr p)|_Y + i^* is not surjective");
        if (!(kernel_space(psi) == image(phi))) throw InvalidInput("the three-term sequence is not exact in the middle");
        const Mat to_y = psi * kc.cokernel_space.representatives().transpose();
        out.h_y = MixedHodgeStructure(kc.cokernel.W().image_under(to_y), kc.cokernel.F().image_under(to_y));
        out.in_y_coordinates = true;
        try {
            mhs::validate_mhs(out.h_y);
        } catch (const InvalidInput& e) {
            throw Inconsistent(std::string("H^i(Y) is not a mixed Hodge structure: ") + e.what(), e.witness());
        }
    }
    for (const auto& [w, d] : mhs::weight_dims(out.h_y))
        if (w < 0 || w > in.degree) throw Inconsistent("H^i(Y) has weight " + str(w) + " outside [0," + str(in.degree) + "]");
    return out;
}

namespace {

std::vector<HodgeStructure> p1_cohomology() {
    return {HodgeStructure::tate(0), HodgeStructure::zero(1), HodgeStructure::tate(-1)};
}

MixedHodgeStructure pure_tate_sum(int m, std::size_t copies) {
    MixedHodgeStructure out = MixedHodgeStructure::zero();
    for (std::size_t k = 0; k < copies; ++k)
        out = mhs::mhs_direct_sum(out, MixedHodgeStructure::from_pure(HodgeStructure::tate(m)));
    return out;
}

}  // namespace

NCDInput line_conic_ncd() {
    NCDInput out;
    out.levels.push_back({Stratum{"L", p1_cohomology(), {}, {}}, Stratum{"C", p1_cohomology(), {}, {}}});
    const std::map<int, Mat> one{{0, Mat{{1}}}};
    out.levels.push_back({Stratum{"P1", {HodgeStructure::tate(0)}, {1, 0}, {one, one}},
                          Stratum{"P2", {HodgeStructure::tate(0)}, {1, 0}, {one, one}}});
    return out;
}

NCDInput line_conic_resolution_ncd() {
    NCDInput out;
    out.levels.push_back({Stratum{"L'", p1_cohomology(), {}, {}}, Stratum{"C'", p1_cohomology(), {}, {}},
                          Stratum{"E1", p1_cohomology(), {}, {}}, Stratum{"E2", p1_cohomology(), {}, {}}});
    const std::map<int, Mat> one{{0, Mat{{1}}}};
    // Faces of a point σ = {a < b}: dropping a leaves b, dropping b leaves a.
    out.levels.push_back({Stratum{"L'E1", {HodgeStructure::tate(0)}, {2, 0}, {one, one}},
                          Stratum{"C'E1", {HodgeStructure::tate(0)}, {2, 1}, {one, one}},
                          Stratum{"L'E2", {HodgeStructure::tate(0)}, {3, 0}, {one, one}},
                          Stratum{"C'E2", {HodgeStructure::tate(0)}, {3, 1}, {one, one}}});
    return out;
}

EmbeddedVarietyInput line_conic_example(int degree) {
    EmbeddedVarietyInput in;
    in.degree = degree;
    switch (degree) {
    case 0:
        in.x_prime = pure_tate_sum(0, 1);
        in.x = pure_tate_sum(0, 1);
        in.y_prime = pure_tate_sum(0, 1);
        in.i_prime_star = Mat{{1}};
        in.tr_p = Mat{{1}};
        in.tr_p_y = Mat{{1}};
        in.i_star = Mat{{1}};
        in.p_y_star = Mat{{1}};
        break;
    case 1:
        in.x_prime = MixedHodgeStructure::zero();
        in.x = MixedHodgeStructure::zero();
        in.y_prime = pure_tate_sum(0, 1);
        in.i_prime_star = Mat(1, 0);
        in.tr_p = Mat(0, 0);
        in.tr_p_y = Mat{{1}};
        in.i_star = Mat(1, 0);
        in.p_y_star = Mat{{1}};
        break;
    case 2:
        // X' = Bl_2 P^2 with basis (H, E1, E2); Y' components (L', C', E1, E2).
        in.x_prime = pure_tate_sum(-1, 3);
        in.x = pure_tate_sum(-1, 1);
        in.y_prime = pure_tate_sum(-1, 4);
        in.i_prime_star = Mat{{1, 1, 1}, {2, 1, 1}, {0, -1, 0}, {0, 0, -1}};
        in.tr_p = Mat{{1, 0, 0}};
        in.tr_p_y = Mat{{1, 0, 1, 1}, {0, 1, 1, 1}};
        in.i_star = Mat{{1}, {2}};
        in.p_y_star = Mat{{1, 0}, {0, 1}, {0, 0}, {0, 0}};
        break;
    default:
        throw InvalidInput("the line-and-conic example has cohomology in degrees 0, 1 and 2 only");
    }
    return in;
}

}  // namespace hodgekit::geometry
