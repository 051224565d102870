#include "hodgekit/hodge.hpp"

#include "hodgekit/errors.hpp"

#include <string>

namespace hodgekit::hodge {

HodgeStructure::HodgeStructure(int weight, Filtration f) : weight_(weight), f_(std::move(f)) {
    if (!f_.decreasing()) throw InvalidInput("Hodge filtration must be decreasing");
}

HodgeStructure HodgeStructure::zero(int weight) {
    return HodgeStructure(weight, Filtration(filt::Direction::Decreasing, 0, {}));
}

HodgeStructure HodgeStructure::tate(int m) {
    return HodgeStructure(-2 * m, Filtration::trivial(filt::Direction::Decreasing, 1, -m));
}

HodgeStructure HodgeStructure::from_bigrading(int weight, std::size_t dim, const std::map<int, Subspace>& pieces) {
    if (dim == 0) return zero(weight);
    std::vector<std::pair<int, Subspace>> steps;
    Subspace acc = Subspace::zero(dim);
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        acc = sum(acc, it->second);
        steps.emplace_back(it->first, acc);
    }
    if (steps.empty()) throw InvalidInput("bigrading has no pieces");
    return HodgeStructure(weight, Filtration::decreasing(dim, std::move(steps)));
}

std::size_t Bigrading::h(int p) const {
    auto it = pieces.find(p);
    return it == pieces.end() ? 0 : it->second.dim();
}

namespace {

std::string bidegree_json(int p, int q) {
    return "{\"p\":" + std::to_string(p) + ",\"q\":" + std::to_string(q) + "}";
}

}  // namespace

Bigrading validate_hs(const HodgeStructure& h) {
    Bigrading out;
    out.weight = h.weight();
    if (h.dim() == 0) return out;
    const filt::OppositenessReport rep = filt::check_n_opposite(h.F(), h.F().conj(), h.weight());
    if (!rep.opposite) {
        const auto [p, q] = *rep.offending;
        throw InvalidInput("F is not " + std::to_string(h.weight()) + "-opposite to its conjugate: Gr^" +
                               std::to_string(p) + "_F Gr^" + std::to_string(q) + "_conj(F) is nonzero",
                           bidegree_json(p, q));
    }
    for (const auto& [pq, piece] : rep.pieces) out.pieces.emplace(pq.first, piece);
    for (const auto& [p, piece] : out.pieces) {
        auto it = out.pieces.find(h.weight() - p);
        if (it == out.pieces.end() || !(it->second == piece.conj()))
            throw Inconsistent("conj(H^{p,q}) differs from H^{q,p}", bidegree_json(p, h.weight() - p));
    }
    return out;
}

bool is_valid(const HodgeStructure& h) {
    try {
        validate_hs(h);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

HodgeNumbers hodge_numbers(const HodgeStructure& h) {
    HodgeNumbers out;
    const Bigrading b = validate_hs(h);
    for (const auto& [p, piece] : b.pieces) out[{p, b.weight - p}] = piece.dim();
    return out;
}

Mat weil_operator(const HodgeStructure& h) {
    const Bigrading b = validate_hs(h);
    const std::size_t d = h.dim();
    Mat basis(d, d);
    Vec eigen;
    std::size_t col = 0;
    for (const auto& [p, piece] : b.pieces) {
        basis.set_block(0, col, piece.basis_columns());
        col += piece.dim();
        for (std::size_t k = 0; k < piece.dim(); ++k) eigen.push_back(Scalar::i_pow(2 * p - b.weight));
    }
    const Mat c = basis * Mat::diagonal(eigen) * inverse(basis);
    if (!c.is_real()) throw Inconsistent("Weil operator is not real");
    return c;
}

HodgeStructure hs_direct_sum(const HodgeStructure& a, const HodgeStructure& b) {
    if (a.weight() != b.weight()) throw InvalidInput("direct sum of Hodge structures of different weights");
    return HodgeStructure(a.weight(), filt::direct_sum(a.F(), b.F()));
}

HodgeStructure hs_tensor(const HodgeStructure& a, const HodgeStructure& b) {
    return HodgeStructure(a.weight() + b.weight(), filt::tensor(a.F(), b.F()));
}

HodgeStructure hs_dual(const HodgeStructure& h) { return HodgeStructure(-h.weight(), filt::dual(h.F())); }

HodgeStructure hs_hom(const HodgeStructure& a, const HodgeStructure& b) { return hs_tensor(b, hs_dual(a)); }

HodgeStructure tate_twist(const HodgeStructure& h, int m) {
    return HodgeStructure(h.weight() - 2 * m, h.F().shift(m));
}

Vec flatten_hom(const Mat& f) {
    Vec out;
    out.reserve(f.rows() * f.cols());
    for (std::size_t k = 0; k < f.rows(); ++k)
        for (std::size_t i = 0; i < f.cols(); ++i) out.push_back(f(k, i));
    return out;
}

PolarizationReport check_polarization(const HodgeStructure& h, const Polarization& pol) {
    const Mat& q = pol.q;
    const std::size_t d = h.dim();
    if (q.rows() != d || q.cols() != d) throw InvalidInput("polarization: Q has the wrong shape");
    if (!q.is_real()) throw InvalidInput("polarization: Q must be rational");
    const bool odd = h.weight() % 2 != 0;
    const Mat qt = q.transpose();
    if (!(qt == (odd ? -q : q)))
        throw InvalidInput(odd ? "polarization: Q must be alternating for odd weight"
                               : "polarization: Q must be symmetric for even weight");
    if (d > 0 && determinant(q).is_zero()) throw InvalidInput("polarization: Q is degenerate");

    PolarizationReport rep;
    rep.parity_ok = true;
    rep.nondegenerate = true;
    const Bigrading b = validate_hs(h);

    rep.orthogonal = true;
    for (const auto& [p, u] : b.pieces)
        for (const auto& [p2, v] : b.pieces) {
            if (p == p2) continue;
            if (!(v.basis().conj() * q * u.basis_columns()).is_zero()) {
                rep.orthogonal = false;
                if (!rep.failing) rep.failing = Bidegree{p, b.weight - p};
            }
        }

    rep.positive = true;
    for (const auto& [p, u] : b.pieces) {
        const Mat g = Scalar::i_pow(2 * p - b.weight) * (u.basis().conj() * q * u.basis_columns());
        if (!hermitian_posdef(g)) {
            rep.positive = false;
            if (!rep.failing) rep.failing = Bidegree{p, b.weight - p};
        }
    }

    if (!odd) {
        rep.signature = inertia(q);
        Inertia expected;
        for (const auto& [p, u] : b.pieces) {
            const int half = (2 * p - b.weight) / 2;
            (half % 2 == 0 ? expected.positive : expected.negative) += u.dim();
        }
        rep.expected_signature = expected;
    }
    return rep;
}

namespace {

std::size_t degree_dim(const LefschetzPackage& pkg, int k) {
    if (k < 0 || k > 2 * pkg.n_dim) return 0;
    return pkg.h[static_cast<std::size_t>(k)].dim();
}

/// L^r: H^k -> H^{k+2r}, zero when the target degree is out of range.
Mat l_power(const LefschetzPackage& pkg, int k, int r) {
    Mat acc = Mat::identity(degree_dim(pkg, k));
    for (int s = 0; s < r; ++s) {
        const int from = k + 2 * s;
        if (from + 2 > 2 * pkg.n_dim) return Mat(0, degree_dim(pkg, k));
        acc = pkg.l[static_cast<std::size_t>(from)] * acc;
    }
    return acc;
}

}  // namespace

LefschetzReport lefschetz_decompose(const LefschetzPackage& pkg) {
    const int n = pkg.n_dim;
    if (n < 0 || pkg.h.size() != static_cast<std::size_t>(2 * n + 1))
        throw InvalidInput("Lefschetz package needs H^0..H^{2n}");
    const std::size_t n_maps = n >= 1 ? static_cast<std::size_t>(2 * n - 1) : 0;
    if (pkg.l.size() != n_maps) throw InvalidInput("Lefschetz package needs L_k for k = 0..2n-2");
    for (std::size_t k = 0; k < n_maps; ++k) {
        const Mat& l = pkg.l[k];
        if (l.cols() != pkg.h[k].dim() || l.rows() != pkg.h[k + 2].dim())
            throw InvalidInput("L_" + std::to_string(k) + " has the wrong shape");
        if (!l.is_real()) throw InvalidInput("L_" + std::to_string(k) + " must be rational");
    }

    LefschetzReport rep;
    for (std::size_t k = 0; k < n_maps; ++k)
        if (!filt::is_compatible(pkg.l[k], pkg.h[k].F(), pkg.h[k + 2].F().shift(1))) rep.l_type_ok = false;

    for (int i = 1; i <= n; ++i) {
        const Mat li = l_power(pkg, n - i, i);
        if (!li.is_square() || rank(li) != li.rows()) {
            rep.hard_lefschetz = false;
            rep.failing_i = i;
            break;
        }
    }

    for (int q = 0; q <= n; ++q) rep.primitive[q] = kernel_space(l_power(pkg, q, n - q + 1));

    for (int q = 0; q <= 2 * n; ++q) {
        Subspace span = Subspace::zero(degree_dim(pkg, q));
        std::size_t total = 0;
        for (int r = std::max(0, q - n); q - 2 * r >= 0; ++r) {
            const Subspace piece = image(l_power(pkg, q - 2 * r, r), rep.primitive.at(q - 2 * r));
            total += piece.dim();
            span = sum(span, piece);
        }
        if (total != degree_dim(pkg, q) || !span.is_full()) rep.decomposition_ok = false;
    }

    if (pkg.lambda) {
        const auto& lam = *pkg.lambda;
        if (lam.size() != n_maps) throw InvalidInput("Lambda needs the same degrees as L");
        bool ok = true;
        for (int k = 0; k <= 2 * n; ++k) {
            const std::size_t d = degree_dim(pkg, k);
            Mat comm(d, d);
            if (k + 2 <= 2 * n) comm += lam[static_cast<std::size_t>(k)] * pkg.l[static_cast<std::size_t>(k)];
            if (k >= 2) comm -= pkg.l[static_cast<std::size_t>(k - 2)] * lam[static_cast<std::size_t>(k - 2)];
            if (!(comm == Scalar(static_cast<long>(n - k)) * Mat::identity(d))) ok = false;
        }
        rep.sl2_ok = ok;
    }
    return rep;
}

RiemannReport riemann_relations(const Mat& m1, const Mat& m2) {
    if (!m1.is_square() || !m2.is_square() || m1.rows() != m2.rows())
        throw InvalidInput("period matrices must be square of the same size");
    RiemannReport rep;
    rep.first = (m1.transpose() * m2 - m2.transpose() * m1).is_zero();
    const Mat g = Scalar::i() * (m1.adjoint() * m2 - m2.adjoint() * m1);
    rep.second = g == g.adjoint() && hermitian_posdef(g);
    return rep;
}

}  // namespace hodgekit::hodge
