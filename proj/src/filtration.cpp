#include "hodgekit/filtration.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <string>

namespace hodgekit::filt {

Filtration::Filtration(Direction dir, std::size_t ambient, std::vector<std::pair<int, Subspace>> values)
    : dir_(dir), ambient_(ambient) {
    if (ambient == 0) return;
    for (const auto& [idx, space] : values)
        if (space.ambient_dim() != ambient)
            throw InvalidInput("filtration step " + std::to_string(idx) + " has ambient dimension " +
                               std::to_string(space.ambient_dim()) + ", expected " + std::to_string(ambient));
    std::stable_sort(values.begin(), values.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k].first == values[k - 1].first && !(values[k].second == values[k - 1].second))
            throw InvalidInput("filtration step " + std::to_string(values[k].first) + " given twice");
    values.erase(std::unique(values.begin(), values.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 values.end());
    if (values.empty()) throw InvalidInput("filtration needs at least one step");

    const Subspace full = Subspace::full(ambient);
    const Subspace zero = Subspace::zero(ambient);
    const Subspace& start = decreasing() ? full : zero;
    const Subspace& end = decreasing() ? zero : full;
    if (!(values.front().second == start)) values.insert(values.begin(), {values.front().first - 1, start});
    if (!(values.back().second == end)) values.emplace_back(values.back().first + 1, end);

    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const Subspace& lower = decreasing() ? values[k + 1].second : values[k].second;
        const Subspace& upper = decreasing() ? values[k].second : values[k + 1].second;
        if (!upper.contains(lower))
            throw InvalidInput("filtration is not nested between indices " + std::to_string(values[k].first) +
                               " and " + std::to_string(values[k + 1].first));
    }

    // One step per run of equal values, at the run's first index; the leading
    // run sits just before the first change.
    for (std::size_t k = 0; k < values.size(); ++k)
        if (k == 0 || !(values[k].second == values[k - 1].second)) steps_.push_back(values[k]);
    steps_.front().first = steps_[1].first - 1;
}

Filtration Filtration::trivial(Direction dir, std::size_t ambient, int index) {
    if (dir == Direction::Decreasing)
        return Filtration(dir, ambient, {{index, Subspace::full(ambient)}, {index + 1, Subspace::zero(ambient)}});
    return Filtration(dir, ambient, {{index - 1, Subspace::zero(ambient)}, {index, Subspace::full(ambient)}});
}

Subspace Filtration::at(int index) const {
    if (steps_.empty()) return Subspace::full(ambient_);
    auto it = std::upper_bound(steps_.begin(), steps_.end(), index,
                               [](int i, const auto& step) { return i < step.first; });
    if (it == steps_.begin()) return decreasing() ? Subspace::full(ambient_) : Subspace::zero(ambient_);
    return std::prev(it)->second;
}

std::pair<Subspace, Subspace> Filtration::gr_bounds(int index) const {
    return {at(index), at(decreasing() ? index + 1 : index - 1)};
}

Subquotient Filtration::gr(int index) const {
    auto [top, bottom] = gr_bounds(index);
    return Subquotient(std::move(top), std::move(bottom));
}

std::vector<int> Filtration::jumps() const {
    std::vector<int> out;
    for (std::size_t k = 1; k < steps_.size(); ++k)
        out.push_back(decreasing() ? steps_[k].first - 1 : steps_[k].first);
    return out;
}

std::pair<int, int> Filtration::index_range() const {
    if (steps_.empty()) return {0, 0};
    return {steps_.front().first - 1, steps_.back().first + 1};
}

Filtration Filtration::shift(int n) const {
    Filtration out(*this);
    for (auto& step : out.steps_) step.first += decreasing() ? -n : n;
    return out;
}

Filtration Filtration::conj() const {
    Filtration out(*this);
    for (auto& step : out.steps_) step.second = step.second.conj();
    return out;
}

Filtration Filtration::flipped() const {
    const Direction other = decreasing() ? Direction::Increasing : Direction::Decreasing;
    if (ambient_ == 0) return Filtration(other, 0, {});
    auto [lo, hi] = index_range();
    return tabulate(other, ambient_, -hi, -lo, [&](int i) { return at(-i); });
}

bool Filtration::is_real() const {
    return std::all_of(steps_.begin(), steps_.end(), [](const auto& s) { return s.second.is_real(); });
}

Filtration Filtration::image_under(const Mat& f) const {
    if (f.cols() != ambient_) throw InvalidInput("image filtration: map does not start at the filtered space");
    if (f.rows() == 0 || ambient_ == 0) return Filtration(dir_, f.rows(), {});
    auto [lo, hi] = index_range();
    return tabulate(dir_, f.rows(), lo, hi, [&](int k) { return image(f, at(k)); });
}

Filtration Filtration::restricted_to(const Subspace& b) const {
    if (b.ambient_dim() != ambient_) throw InvalidInput("restriction: subspace lives in another ambient");
    if (b.dim() == 0 || ambient_ == 0) return Filtration(dir_, b.dim(), {});
    auto [lo, hi] = index_range();
    return tabulate(dir_, b.dim(), lo, hi, [&](int k) {
        const Subspace s = intersect(at(k), b);
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(b.coords(s.basis().row(r)));
        return Subspace::span(rows, b.dim());
    });
}

Filtration Filtration::on_subquotient(const Subquotient& sq) const {
    if (sq.ambient_dim() != ambient_) throw InvalidInput("subquotient lives in another ambient");
    if (sq.dim() == 0 || ambient_ == 0) return Filtration(dir_, sq.dim(), {});
    auto [lo, hi] = index_range();
    return tabulate(dir_, sq.dim(), lo, hi,
                    [&](int k) { return sq.coords(sum(intersect(at(k), sq.num()), sq.den())); });
}

namespace {

std::pair<int, int> joint_range(const Filtration& a, const Filtration& b) {
    auto [alo, ahi] = a.index_range();
    auto [blo, bhi] = b.index_range();
    return {std::min(alo, blo), std::max(ahi, bhi)};
}

}  // namespace

bool is_compatible(const Mat& f, const Filtration& source, const Filtration& target) {
    if (f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim())
        throw InvalidInput("filtered map: matrix shape does not match the filtered spaces");
    auto [lo, hi] = joint_range(source, target);
    for (int k = lo; k <= hi; ++k)
        if (!target.at(k).contains(image(f, source.at(k)))) return false;
    return true;
}

FilteredMap::FilteredMap(Mat map, Filtration source, Filtration target)
    : map_(std::move(map)), source_(std::move(source)), target_(std::move(target)) {
    if (source_.direction() != target_.direction())
        throw InvalidInput("filtered map: source and target filtrations point in different directions");
    if (!is_compatible(map_, source_, target_)) throw InvalidInput("map is not compatible with the filtrations");
}

InducedFiltrations induced(const Filtration& f, const Subspace& b) {
    if (b.ambient_dim() != f.ambient_dim()) throw InvalidInput("induced: subspace is not in the filtered space");
    Subquotient q(Subspace::full(f.ambient_dim()), b);
    Filtration quotient_filtration = f.on_subquotient(q);
    return {f.restricted_to(b), std::move(quotient_filtration), std::move(q)};
}

std::vector<GrPiece> gr(const Filtration& f) {
    std::vector<GrPiece> out;
    for (int j : f.jumps()) out.push_back({j, f.gr(j)});
    return out;
}

StrictnessReport is_strict(const Mat& f, const Filtration& source, const Filtration& target) {
    if (!is_compatible(f, source, target)) throw InvalidInput("strictness: map is not filtered");
    const Subspace im = image(f);
    auto [lo, hi] = joint_range(source, target);
    for (int k = lo; k <= hi; ++k) {
        const Subspace reached = image(f, source.at(k));
        const Subspace allowed = intersect(im, target.at(k));
        if (reached == allowed) continue;
        StrictnessReport report{false, k, {}};
        for (std::size_t r = 0; r < allowed.dim(); ++r)
            if (!reached.contains(allowed.basis().row(r))) {
                report.witness = allowed.basis().row(r);
                break;
            }
        return report;
    }
    return {};
}

StrictnessReport is_strict(const FilteredMap& f) { return is_strict(f.map(), f.source(), f.target()); }

TwoFiltrationTable two_filtration_gr(const Filtration& f, const Filtration& g) {
    if (f.ambient_dim() != g.ambient_dim()) throw InvalidInput("two filtrations on different spaces");
    TwoFiltrationTable t;
    for (int m : f.jumps()) {
        const Filtration induced_g = g.on_subquotient(f.gr(m));
        for (int n : induced_g.jumps()) t.g_of_f[{m, n}] = induced_g.gr(n).dim();
    }
    for (int n : g.jumps()) {
        const Filtration induced_f = f.on_subquotient(g.gr(n));
        for (int m : induced_f.jumps()) t.f_of_g[{m, n}] = induced_f.gr(m).dim();
    }
    if (t.g_of_f != t.f_of_g) throw Inconsistent("Zassenhaus: Gr_G Gr_F and Gr_F Gr_G dimension tables differ");
    return t;
}

OppositenessReport check_n_opposite(const Filtration& f, const Filtration& g, int n) {
    if (!f.decreasing() || !g.decreasing()) throw InvalidInput("opposedness needs two decreasing filtrations");
    const TwoFiltrationTable t = two_filtration_gr(f, g);
    OppositenessReport report;
    for (const auto& [pq, d] : t.g_of_f)
        if (d != 0 && pq.first + pq.second != n) {
            report.offending = pq;
            return report;
        }
    std::size_t total = 0;
    Subspace span = Subspace::zero(f.ambient_dim());
    for (const auto& [pq, d] : t.g_of_f) {
        Subspace piece = intersect(f.at(pq.first), g.at(pq.second));
        total += piece.dim();
        span = sum(span, piece);
        report.pieces.emplace(pq, std::move(piece));
    }
    if (total != f.ambient_dim() || !span.is_full())
        throw Inconsistent("opposed filtrations but F^p ∩ G^q do not split the space");
    report.opposite = true;
    return report;
}

}  // namespace hodgekit::filt

namespace hodgekit::filt {

Filtration tensor(const Filtration& f, const Filtration& g) {
    if (f.direction() != g.direction()) throw InvalidInput("tensor: filtrations point in different directions");
    const std::size_t n = f.ambient_dim() * g.ambient_dim();
    if (n == 0) return Filtration(f.direction(), 0, {});
    auto [flo, fhi] = f.index_range();
    auto [glo, ghi] = g.index_range();
    return tabulate(f.direction(), n, flo + glo, fhi + ghi, [&](int p) {
        Subspace acc = Subspace::zero(n);
        for (int a = flo; a <= fhi; ++a) acc = sum(acc, hodgekit::tensor(f.at(a), g.at(p - a)));
        return acc;
    });
}

Filtration dual(const Filtration& f) {
    const std::size_t n = f.ambient_dim();
    if (n == 0) return f;
    auto [lo, hi] = f.index_range();
    if (f.decreasing())
        return tabulate(Direction::Decreasing, n, 1 - hi, 1 - lo, [&](int p) { return annihilator(f.at(1 - p)); });
    return tabulate(Direction::Increasing, n, -hi - 1, -lo - 1, [&](int a) { return annihilator(f.at(-a - 1)); });
}

Subspace embed(const Subspace& s, std::size_t offset, std::size_t ambient) {
    if (offset + s.ambient_dim() > ambient) throw InvalidInput("embed: target too small");
    Mat m(s.dim(), ambient);
    m.set_block(0, offset, s.basis());
    return Subspace(m);
}

Filtration direct_sum(const Filtration& f, const Filtration& g) {
    if (f.direction() != g.direction()) throw InvalidInput("direct sum: filtrations point in different directions");
    const std::size_t n = f.ambient_dim() + g.ambient_dim();
    if (n == 0) return Filtration(f.direction(), 0, {});
    auto [flo, fhi] = f.index_range();
    auto [glo, ghi] = g.index_range();
    return tabulate(f.direction(), n, std::min(flo, glo), std::max(fhi, ghi), [&](int k) {
        return sum(embed(f.at(k), 0, n), embed(g.at(k), f.ambient_dim(), n));
    });
}

}  // namespace hodgekit::filt
