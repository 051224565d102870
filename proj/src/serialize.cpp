#include "hodgekit/serialize.hpp"

#include "hodgekit/errors.hpp"

#include <limits>

namespace hodgekit::io {

using filt::Direction;
using filt::Filtration;
using hodge::HodgeStructure;
using mhs::MixedHodgeStructure;
using ss::Complex;

namespace {

constexpr std::size_t kAny = std::numeric_limits<std::size_t>::max();

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidInput(what + " at " + (path.empty() ? "/" : path), "{\"path\":" + Json(path.empty() ? "/" : path).dump() + "}");
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

int int_from(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::size_t size_from(const Json& j, const std::string& path) {
    const int v = int_from(j, path);
    if (v < 0) fail(path, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

int degree_key(const std::string& key, const std::string& path) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        fail(path, "expected an integer key, got '" + key + "'");
    }
}

void check_type(const Json& j, const std::string& expected, const std::string& path) {
    if (const Json* t = optional_field(j, "type", path)) {
        if (!t->is_string() || t->get<std::string>() != expected)
            fail(sub(path, "type"), "expected type '" + expected + "'");
    }
}

/// Optional "dim" must agree with the filtrations.
void check_dim(const Json& j, std::size_t dim, const std::string& path) {
    if (const Json* d = optional_field(j, "dim", path))
        if (size_from(*d, sub(path, "dim")) != dim) fail(sub(path, "dim"), "dim does not match the filtrations");
}

mpq_class rational_from(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational \"p/q\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

Json subspace_json(const Subspace& s) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Json row = Json::array();
        for (const Scalar& x : s.basis().row(r)) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Subspace subspace_from(const Json& j, std::size_t ambient, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of basis vectors");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string p = sub(path, r);
        if (!j[r].is_array() || j[r].size() != ambient)
            fail(p, "expected a vector of length " + std::to_string(ambient));
        Vec v;
        for (std::size_t c = 0; c < ambient; ++c) v.push_back(scalar_from(j[r][c], sub(p, c)));
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, ambient);
}

std::vector<Filtration> degree_filtrations(const Json& j, const Complex& k, Direction dir, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object keyed by degree");
    std::vector<Filtration> out;
    for (int n = k.lo(); n <= k.hi() && !k.empty(); ++n) {
        const std::string key = std::to_string(n);
        const Filtration f = filtration_from(field(j, key, path), sub(path, key));
        if (f.direction() != dir)
            fail(sub(path, key), std::string("expected an ") + (dir == Direction::Increasing ? "increasing" : "decreasing") +
                                     " filtration");
        if (f.ambient_dim() != k.dim(n)) fail(sub(path, key), "filtration dimension does not match the complex");
        out.push_back(f);
    }
    for (const auto& [key, v] : j.items()) {
        const int n = degree_key(key, path);
        if (k.empty() || n < k.lo() || n > k.hi()) fail(sub(path, key), "degree outside the complex range");
    }
    return out;
}

Json filtrations_json(const std::vector<Filtration>& f, int lo) {
    Json out = Json::object();
    for (std::size_t k = 0; k < f.size(); ++k) out[std::to_string(lo + static_cast<int>(k))] = to_json(f[k]);
    return out;
}

/// Wraps library validation errors raised while assembling an object so the
/// message names the document location.
template <class Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (what.find(" at /") != std::string::npos) throw;
        throw InvalidInput(what + " at " + (path.empty() ? "/" : path), e.witness());
    } catch (const Inconsistent&) {
        throw;
    } catch (const Error& e) {
        throw InvalidInput(std::string(e.what()) + " at " + (path.empty() ? "/" : path), e.witness());
    }
}

Json homotopies_json(const mhc::ConeHomotopies& h) {
    return Json{{"h1", maps_json(h.h1)}, {"h2", maps_json(h.h2)}};
}

mhc::ConeHomotopies homotopies_from(const Json& j, const mhc::MHCMorphism& u, const std::string& path) {
    mhc::ConeHomotopies h;
    if (const Json* h1 = optional_field(j, "h1", path))
        h.h1 = maps_from(*h1, u.source.rational, u.target.rational, -1, sub(path, "h1"));
    if (const Json* h2 = optional_field(j, "h2", path))
        h.h2 = maps_from(*h2, u.source.rational, u.target.hodge.complex(), -1, sub(path, "h2"));
    return h;
}

Json stratum_json(const geometry::Stratum& s) {
    Json coh = Json::array();
    for (const auto& h : s.cohomology) coh.push_back(to_json(h));
    Json maps = Json::array();
    for (const auto& m : s.maps) maps.push_back(maps_json(m));
    return Json{{"name", s.name}, {"cohomology", coh}, {"faces", s.faces}, {"maps", maps}};
}

/// Shape of maps[j][k]: NCD restrictions H^k(face) -> H^k(stratum), open
/// Gysin maps H^k(stratum) -> H^{k+2}(face).
std::vector<std::vector<geometry::Stratum>> levels_from(const Json& j, bool gysin, const std::string& path) {
    const Json& levels = field(j, "levels", path);
    const std::string lp = sub(path, "levels");
    if (!levels.is_array()) fail(lp, "expected a list of levels");
    auto hdim = [](const geometry::Stratum& s, int k) -> std::size_t {
        return k >= 0 && k < static_cast<int>(s.cohomology.size()) ? s.cohomology[static_cast<std::size_t>(k)].dim() : 0;
    };
    std::vector<std::vector<geometry::Stratum>> out;
    for (std::size_t p = 0; p < levels.size(); ++p) {
        const std::string pp = sub(lp, p);
        if (!levels[p].is_array()) fail(pp, "expected a list of strata");
        std::vector<geometry::Stratum> level;
        for (std::size_t s = 0; s < levels[p].size(); ++s) {
            const std::string sp = sub(pp, s);
            const Json& js = levels[p][s];
            geometry::Stratum st;
            if (const Json* name = optional_field(js, "name", sp)) {
                if (!name->is_string()) fail(sub(sp, "name"), "expected a string");
                st.name = name->get<std::string>();
            }
            const Json& coh = field(js, "cohomology", sp);
            if (!coh.is_array()) fail(sub(sp, "cohomology"), "expected a list of Hodge structures");
            for (std::size_t k = 0; k < coh.size(); ++k)
                st.cohomology.push_back(hs_from(coh[k], sub(sub(sp, "cohomology"), k)));
            if (const Json* faces = optional_field(js, "faces", sp)) {
                if (!faces->is_array()) fail(sub(sp, "faces"), "expected a list of indices");
                for (std::size_t f = 0; f < faces->size(); ++f) {
                    const std::size_t idx = size_from((*faces)[f], sub(sub(sp, "faces"), f));
                    if (p == 0 || idx >= out[p - 1].size()) fail(sub(sub(sp, "faces"), f), "face index out of range");
                    st.faces.push_back(idx);
                }
            }
            if (const Json* maps = optional_field(js, "maps", sp)) {
                if (!maps->is_array() || maps->size() != st.faces.size())
                    fail(sub(sp, "maps"), "expected one map table per face");
                for (std::size_t f = 0; f < maps->size(); ++f) {
                    const std::string mp = sub(sub(sp, "maps"), f);
                    if (!(*maps)[f].is_object()) fail(mp, "expected an object keyed by degree");
                    const geometry::Stratum& face = out[p - 1][st.faces[f]];
                    std::map<int, Mat> table;
                    for (const auto& [key, m] : (*maps)[f].items()) {
                        const int k = degree_key(key, mp);
                        const std::size_t rows = gysin ? hdim(face, k + 2) : hdim(st, k);
                        const std::size_t cols = gysin ? hdim(st, k) : hdim(face, k);
                        table[k] = mat_from(m, rows, cols, sub(mp, key));
                    }
                    st.maps.push_back(std::move(table));
                }
            } else if (!st.faces.empty()) {
                fail(sp, "missing field 'maps'");
            }
            level.push_back(std::move(st));
        }
        out.push_back(std::move(level));
    }
    return out;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON",
                           "{\"line\":" + std::to_string(line) + ",\"column\":" + std::to_string(col) + "}");
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Scalar& s) {
    if (s.is_real()) return rational_to_string(s.re());
    return Json{{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Scalar scalar_from(const Json& j, const std::string& path) {
    if (j.is_object()) {
        const mpq_class re = rational_from(field(j, "re", path), sub(path, "re"));
        const mpq_class im = rational_from(field(j, "im", path), sub(path, "im"));
        return Scalar(re, im);
    }
    return Scalar(rational_from(j, path));
}

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    if (j.is_number_integer() && j.get<long>() == 0 && rows != kAny && cols != kAny) return Mat(rows, cols);
    if (!j.is_array()) fail(path, "expected a matrix (list of rows)");
    if (j.empty()) {
        if (rows != 0 && rows != kAny) fail(path, "expected " + std::to_string(rows) + " rows");
        return Mat(0, cols == kAny ? 0 : cols);
    }
    if (rows != kAny && j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    std::size_t width = cols;
    Mat m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string rp = sub(path, r);
        if (!j[r].is_array()) fail(rp, "expected a row");
        if (width == kAny) width = j[r].size();
        if (j[r].size() != width) fail(rp, "expected a row of length " + std::to_string(width));
        if (r == 0) m = Mat(j.size(), width);
        for (std::size_t c = 0; c < width; ++c) m(r, c) = scalar_from(j[r][c], sub(rp, c));
    }
    return m;
}

Json to_json(const Filtration& f) {
    Json steps = Json::array();
    for (const auto& [index, s] : f.steps()) steps.push_back(Json{{"idx", index}, {"basis", subspace_json(s)}});
    return Json{{"direction", f.decreasing() ? "dec" : "inc"}, {"dim", f.ambient_dim()}, {"steps", steps}};
}

Filtration filtration_from(const Json& j, const std::string& path) {
    const Json& dir = field(j, "direction", path);
    if (!dir.is_string() || (dir != "inc" && dir != "dec")) fail(sub(path, "direction"), "expected \"inc\" or \"dec\"");
    const std::size_t dim = size_from(field(j, "dim", path), sub(path, "dim"));
    const Json& steps = field(j, "steps", path);
    if (!steps.is_array()) fail(sub(path, "steps"), "expected a list of steps");
    std::vector<std::pair<int, Subspace>> values;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const std::string sp = sub(sub(path, "steps"), k);
        values.emplace_back(int_from(field(steps[k], "idx", sp), sub(sp, "idx")),
                            subspace_from(field(steps[k], "basis", sp), dim, sub(sp, "basis")));
    }
    const Direction d = dir == "inc" ? Direction::Increasing : Direction::Decreasing;
    return at_path(path, [&] { return Filtration(d, dim, values); });
}

Json to_json(const HodgeStructure& h) {
    return Json{{"type", "hs"}, {"weight", h.weight()}, {"dim", h.dim()}, {"F", to_json(h.F())}};
}

HodgeStructure hs_from(const Json& j, const std::string& path) {
    check_type(j, "hs", path);
    const int w = int_from(field(j, "weight", path), sub(path, "weight"));
    const Filtration f = filtration_from(field(j, "F", path), sub(path, "F"));
    if (f.direction() != Direction::Decreasing) fail(sub(path, "F"), "F must be decreasing");
    check_dim(j, f.ambient_dim(), path);
    return HodgeStructure(w, f);
}

Json to_json(const MixedHodgeStructure& h) {
    return Json{{"type", "mhs"}, {"dim", h.dim()}, {"W", to_json(h.W())}, {"F", to_json(h.F())}};
}

MixedHodgeStructure mhs_from(const Json& j, const std::string& path) {
    check_type(j, "mhs", path);
    const Filtration w = filtration_from(field(j, "W", path), sub(path, "W"));
    const Filtration f = filtration_from(field(j, "F", path), sub(path, "F"));
    check_dim(j, w.ambient_dim(), path);
    return at_path(path, [&] { return MixedHodgeStructure(w, f); });
}

Json hodge_numbers_json(const hodge::HodgeNumbers& h) {
    Json out = Json::object();
    for (const auto& [pq, d] : h) out[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    return out;
}

Json weight_dims_json(const std::map<int, std::size_t>& d) {
    Json out = Json::object();
    for (const auto& [n, k] : d) out[std::to_string(n)] = k;
    return out;
}

Json to_json(const Complex& k) {
    Json dims = Json::object(), d = Json::object();
    for (int n = k.lo(); n <= k.hi() && !k.empty(); ++n) {
        dims[std::to_string(n)] = k.dim(n);
        if (n < k.hi()) d[std::to_string(n)] = to_json(k.d(n));
    }
    return Json{{"range", k.empty() ? Json::array({0, -1}) : Json::array({k.lo(), k.hi()})}, {"dims", dims}, {"d", d}};
}

Complex complex_from(const Json& j, const std::string& path) {
    const Json& range = field(j, "range", path);
    if (!range.is_array() || range.size() != 2) fail(sub(path, "range"), "expected [lo, hi]");
    const int lo = int_from(range[0], sub(path, "range")), hi = int_from(range[1], sub(path, "range"));
    if (hi < lo - 1) fail(sub(path, "range"), "expected hi >= lo - 1");
    const Json& dims = field(j, "dims", path);
    if (!dims.is_object()) fail(sub(path, "dims"), "expected an object keyed by degree");
    std::vector<std::size_t> dv;
    for (int n = lo; n <= hi; ++n)
        dv.push_back(size_from(field(dims, std::to_string(n), sub(path, "dims")), sub(sub(path, "dims"), std::to_string(n))));
    if (dims.size() != dv.size()) fail(sub(path, "dims"), "degrees outside the range");
    std::vector<Mat> d;
    const Json* dj = optional_field(j, "d", path);
    if (dj && !dj->is_object()) fail(sub(path, "d"), "expected an object keyed by degree");
    for (int n = lo; n < hi; ++n) {
        const std::string key = std::to_string(n);
        const std::size_t rows = dv[static_cast<std::size_t>(n + 1 - lo)], cols = dv[static_cast<std::size_t>(n - lo)];
        if (dj && dj->contains(key))
            d.push_back(mat_from((*dj)[key], rows, cols, sub(sub(path, "d"), key)));
        else
            d.push_back(Mat(rows, cols));
    }
    if (dj)
        for (const auto& [key, v] : dj->items()) {
            const int n = degree_key(key, sub(path, "d"));
            if (n < lo || n >= hi) fail(sub(sub(path, "d"), key), "differential outside the range");
        }
    if (hi < lo) return Complex();
    return at_path(path, [&] { return Complex(lo, dv, d); });
}

Json to_json(const ss::FilteredComplex& k) {
    Json out = to_json(k.complex());
    out[k.direction() == Direction::Increasing ? "W" : "F"] = filtrations_json(k.filtrations(), k.complex().lo());
    return out;
}

ss::FilteredComplex filtered_complex_from(const Json& j, const std::string& path) {
    const Complex k = complex_from(j, path);
    const bool has_w = j.contains("W"), has_f = j.contains("F");
    if (has_w == has_f) fail(path, "expected exactly one of 'W' and 'F'");
    const std::string key = has_w ? "W" : "F";
    auto f = degree_filtrations(j[key], k, has_w ? Direction::Increasing : Direction::Decreasing, sub(path, key));
    return at_path(path, [&] { return ss::FilteredComplex(k, f); });
}

Json to_json(const ss::BiFilteredComplex& k) {
    Json out = to_json(k.complex());
    out["W"] = filtrations_json(k.w_filtrations(), k.complex().lo());
    out["F"] = filtrations_json(k.f_filtrations(), k.complex().lo());
    return out;
}

ss::BiFilteredComplex bifiltered_complex_from(const Json& j, const std::string& path) {
    const Complex k = complex_from(j, path);
    auto w = degree_filtrations(field(j, "W", path), k, Direction::Increasing, sub(path, "W"));
    auto f = degree_filtrations(field(j, "F", path), k, Direction::Decreasing, sub(path, "F"));
    return at_path(path, [&] { return ss::BiFilteredComplex(k, w, f); });
}

Json maps_json(const std::map<int, Mat>& maps) {
    Json out = Json::object();
    for (const auto& [n, m] : maps) out[std::to_string(n)] = to_json(m);
    return out;
}

std::map<int, Mat> maps_from(const Json& j, const Complex& source, const Complex& target, int degree_shift,
                             const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object keyed by degree");
    std::map<int, Mat> out;
    for (const auto& [key, m] : j.items()) {
        const int n = degree_key(key, path);
        out[n] = mat_from(m, target.dim(n + degree_shift), source.dim(n), sub(path, key));
    }
    return out;
}

Json to_json(const mhc::HodgeComplexData& k) {
    return Json{{"type", "hc"},
                {"weight", k.weight},
                {"rational", to_json(k.rational)},
                {"hodge", to_json(k.hodge)},
                {"comparison", maps_json(k.comparison.maps())}};
}

mhc::HodgeComplexData hc_from(const Json& j, const std::string& path) {
    check_type(j, "hc", path);
    mhc::HodgeComplexData k;
    k.weight = int_from(field(j, "weight", path), sub(path, "weight"));
    k.rational = complex_from(field(j, "rational", path), sub(path, "rational"));
    const Json& hj = field(j, "hodge", path);
    if (hj.contains("range")) {
        k.hodge = filtered_complex_from(hj, sub(path, "hodge"));
    } else {
        auto f = degree_filtrations(field(hj, "F", sub(path, "hodge")), k.rational, Direction::Decreasing,
                                    sub(sub(path, "hodge"), "F"));
        k.hodge = at_path(sub(path, "hodge"), [&] { return ss::FilteredComplex(k.rational, f); });
    }
    if (k.hodge.direction() != Direction::Decreasing) fail(sub(path, "hodge"), "expected a decreasing F");
    const Complex& kc = k.hodge.complex();
    if (const Json* c = optional_field(j, "comparison", path)) {
        auto maps = maps_from(*c, k.rational, kc, 0, sub(path, "comparison"));
        k.comparison = at_path(sub(path, "comparison"), [&] { return ss::ChainMap(k.rational, kc, maps); });
    } else {
        k.comparison = at_path(path, [&] { return ss::ChainMap::identity(k.rational); });
        if (!(k.rational == kc)) fail(path, "missing field 'comparison'");
    }
    return k;
}

Json to_json(const mhc::MixedHodgeComplexData& m) {
    Json rational = to_json(m.rational);
    rational["W"] = filtrations_json(m.rational_w, m.rational.lo());
    return Json{{"type", "mhc"},
                {"rational", rational},
                {"hodge", to_json(m.hodge)},
                {"comparison", maps_json(m.comparison.maps())}};
}

mhc::MixedHodgeComplexData mhc_from(const Json& j, const std::string& path) {
    check_type(j, "mhc", path);
    mhc::MixedHodgeComplexData m;
    const std::string rp = sub(path, "rational"), hp = sub(path, "hodge");
    const Json& rj = field(j, "rational", path);
    m.rational = complex_from(rj, rp);
    m.rational_w = degree_filtrations(field(rj, "W", rp), m.rational, Direction::Increasing, sub(rp, "W"));
    at_path(rp, [&] { return ss::FilteredComplex(m.rational, m.rational_w); });

    const Json& hj = field(j, "hodge", path);
    const Complex kc = hj.contains("range") ? complex_from(hj, hp) : m.rational;
    std::map<int, Mat> beta;
    if (const Json* c = optional_field(j, "comparison", path)) {
        beta = maps_from(*c, m.rational, kc, 0, sub(path, "comparison"));
    } else {
        if (!(kc == m.rational)) fail(path, "missing field 'comparison'");
        for (int n = kc.lo(); n <= kc.hi() && !kc.empty(); ++n) beta[n] = Mat::identity(kc.dim(n));
    }
    m.comparison = at_path(sub(path, "comparison"), [&] { return ss::ChainMap(m.rational, kc, beta); });
    std::vector<Filtration> w;
    if (hj.contains("W")) {
        w = degree_filtrations(hj["W"], kc, Direction::Increasing, sub(hp, "W"));
    } else {
        for (int n = kc.lo(); n <= kc.hi() && !kc.empty(); ++n)
            w.push_back(at_path(hp, [&] {
                return m.rational_w[static_cast<std::size_t>(n - kc.lo())].image_under(m.comparison.at(n));
            }));
    }
    auto f = degree_filtrations(field(hj, "F", hp), kc, Direction::Decreasing, sub(hp, "F"));
    m.hodge = at_path(hp, [&] { return ss::BiFilteredComplex(kc, w, f); });
    return m;
}

Json to_json(const ConeInput& c) {
    Json out{{"type", "cone"},
             {"source", to_json(c.morphism.source)},
             {"target", to_json(c.morphism.target)},
             {"rational", maps_json(c.morphism.rational.maps())},
             {"hodge", maps_json(c.morphism.hodge.maps())},
             {"homotopies", homotopies_json(c.homotopies)}};
    if (c.alternative) out["alternative"] = homotopies_json(*c.alternative);
    return out;
}

ConeInput cone_from(const Json& j, const std::string& path) {
    check_type(j, "cone", path);
    ConeInput c;
    auto& u = c.morphism;
    u.source = mhc_from(field(j, "source", path), sub(path, "source"));
    u.target = mhc_from(field(j, "target", path), sub(path, "target"));
    const auto rational = maps_from(field(j, "rational", path), u.source.rational, u.target.rational, 0, sub(path, "rational"));
    u.rational = at_path(sub(path, "rational"), [&] { return ss::ChainMap(u.source.rational, u.target.rational, rational); });
    const Json* hj = optional_field(j, "hodge", path);
    const auto hodge = hj ? maps_from(*hj, u.source.hodge.complex(), u.target.hodge.complex(), 0, sub(path, "hodge")) : rational;
    u.hodge = at_path(sub(path, "hodge"),
                      [&] { return ss::ChainMap(u.source.hodge.complex(), u.target.hodge.complex(), hodge); });
    if (const Json* h = optional_field(j, "homotopies", path)) c.homotopies = homotopies_from(*h, u, sub(path, "homotopies"));
    if (const Json* h = optional_field(j, "alternative", path)) c.alternative = homotopies_from(*h, u, sub(path, "alternative"));
    return c;
}

Json to_json(const mhs::MHSMorphism& f) {
    return Json{{"type", "morphism"}, {"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", to_json(f.map())}};
}

mhs::MHSMorphism morphism_from(const Json& j, const std::string& path) {
    check_type(j, "morphism", path);
    const MixedHodgeStructure s = mhs_from(field(j, "source", path), sub(path, "source"));
    const MixedHodgeStructure t = mhs_from(field(j, "target", path), sub(path, "target"));
    const Mat m = mat_from(field(j, "map", path), t.dim(), s.dim(), sub(path, "map"));
    return at_path(path, [&] { return mhs::MHSMorphism(m, s, t); });
}

Json to_json(const geometry::NCDInput& in) {
    Json levels = Json::array();
    for (const auto& level : in.levels) {
        Json l = Json::array();
        for (const auto& s : level) l.push_back(stratum_json(s));
        levels.push_back(std::move(l));
    }
    return Json{{"type", "ncd"}, {"levels", levels}};
}

geometry::NCDInput ncd_from(const Json& j, const std::string& path) {
    check_type(j, "ncd", path);
    return geometry::NCDInput{levels_from(j, false, path)};
}

Json to_json(const geometry::OpenSmoothInput& in) {
    Json out = to_json(geometry::NCDInput{in.levels});
    out["type"] = "open";
    return out;
}

geometry::OpenSmoothInput open_from(const Json& j, const std::string& path) {
    check_type(j, "open", path);
    return geometry::OpenSmoothInput{levels_from(j, true, path)};
}

Json bundle_json(const std::map<int, MixedHodgeStructure>& b) {
    Json degrees = Json::object();
    for (const auto& [n, h] : b) degrees[std::to_string(n)] = to_json(h);
    return Json{{"type", "mhs_bundle"}, {"degrees", degrees}};
}

std::map<int, MixedHodgeStructure> bundle_from(const Json& j, const std::string& path) {
    check_type(j, "mhs_bundle", path);
    const Json& degrees = field(j, "degrees", path);
    if (!degrees.is_object()) fail(sub(path, "degrees"), "expected an object keyed by degree");
    std::map<int, MixedHodgeStructure> out;
    for (const auto& [key, h] : degrees.items())
        out[degree_key(key, sub(path, "degrees"))] = mhs_from(h, sub(sub(path, "degrees"), key));
    return out;
}

}  // namespace hodgekit::io
