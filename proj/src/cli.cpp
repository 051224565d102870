#include "hodgekit/cli.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/fixtures.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace hodgekit::cli {

using io::Json;

namespace {

std::string pq_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

Json pq_dims_json(const std::map<ss::PQ, std::size_t>& d) {
    Json out = Json::object();
    for (const auto& [pq, n] : d) out[pq_key(pq.first, pq.second)] = n;
    return out;
}

Json witness_json(const std::string& w) {
    if (w.empty()) return nullptr;
    try {
        return Json::parse(w);
    } catch (const Json::parse_error&) {
        return w;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read input file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// A saved report stands for the object in its payload.
Json unwrap(const Json& doc) {
    if (doc.is_object() && doc.contains("command") && doc.contains("payload")) {
        const Json& p = doc["payload"];
        if (!p.is_object() || !p.contains("object")) throw InvalidInput("report has no payload object to load");
        return p["object"];
    }
    return doc;
}

std::string type_of(const Json& j) {
    if (j.is_object() && j.contains("type") && j["type"].is_string()) return j["type"].get<std::string>();
    return {};
}

Json hs_summary(const hodge::HodgeStructure& h) {
    hodge::validate_hs(h);
    return Json{{"object", io::to_json(h)}, {"weight", h.weight()}, {"hodge_numbers", io::hodge_numbers_json(hodge::hodge_numbers(h))}};
}

Json mhs_summary(const mhs::MixedHodgeStructure& h) {
    mhs::validate_mhs(h);
    return Json{{"object", io::to_json(h)},
                {"weight_dims", io::weight_dims_json(mhs::weight_dims(h))},
                {"hodge_numbers", io::hodge_numbers_json(mhs::hodge_numbers(h))}};
}

Json bundle_summary(const std::map<int, mhs::MixedHodgeStructure>& b) {
    Json degrees = Json::object();
    for (const auto& [n, h] : b) {
        Json s = mhs_summary(h);
        s.erase("object");
        degrees[std::to_string(n)] = s;
    }
    return Json{{"object", io::bundle_json(b)}, {"degrees", degrees}};
}

Json validate(const std::string& kind, const Json& doc) {
    if (kind == "hs") return hs_summary(io::hs_from(doc, ""));
    if (kind == "mhs") {
        if (type_of(doc) == "mhs_bundle") return bundle_summary(io::bundle_from(doc, ""));
        return mhs_summary(io::mhs_from(doc, ""));
    }
    if (kind == "hc") {
        const auto rep = mhc::validate_hc(io::hc_from(doc, ""));
        Json coh = Json::object();
        for (const auto& [n, h] : rep.cohomology) coh[std::to_string(n)] = hs_summary(h);
        return Json{{"cohomology", coh},
                    {"degeneration", Json{{"rank", rep.degeneration.rank}, {"strict", rep.degeneration.strict}}}};
    }
    if (kind == "mhc") {
        const auto m = io::mhc_from(doc, "");
        const auto t = mhc::degeneration_theorems(m);
        Json coh = Json::object();
        for (const auto& [n, h] : t.cohomology) coh[std::to_string(n)] = mhs_summary(h);
        return Json{{"cohomology", coh},
                    {"theorems", Json{{"w_degenerates_at_e2", t.w_degenerates_at_e2},
                                      {"f_rank", t.f_rank},
                                      {"d1_strict", t.d1_strict},
                                      {"three_filtrations_agree", t.three_filtrations_agree},
                                      {"weight_graded_matches_e2", t.weight_graded_matches_e2}}}};
    }
    throw InvalidInput("validate expects one of hs, mhs, hc, mhc, got '" + kind + "'");
}

Json split(const Json& doc) {
    const auto h = io::mhs_from(doc, "");
    const auto pieces = mhs::deligne_splitting(h);
    Json out = Json::object(), conj = Json::object();
    bool all = true;
    for (const auto& [pq, s] : pieces) {
        out[pq_key(pq.first, pq.second)] = Json{{"dim", s.dim()}, {"basis", io::to_json(s.basis())}};
        auto it = pieces.find({pq.second, pq.first});
        const bool sym = it != pieces.end() && it->second == s.conj();
        conj[pq_key(pq.first, pq.second)] = sym;
        all = all && sym;
    }
    return Json{{"pieces", out},
                {"hodge_numbers", io::hodge_numbers_json(mhs::hodge_numbers(h))},
                {"conjugate_symmetric", conj},
                {"split_over_r", all}};
}

std::pair<int, std::optional<int>> parse_pages(const std::string& s) {
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument(s);
        const int r0 = std::stoi(s.substr(0, colon));
        const std::string hi = s.substr(colon + 1);
        std::optional<int> r1;
        if (hi != "inf") r1 = std::stoi(hi);
        if (r0 < 0 || (r1 && (*r1 < r0 || *r1 > r0 + 64))) throw std::invalid_argument(s);
        return {r0, r1};
    } catch (const std::exception&) {
        throw InvalidInput("--pages expects r0:r1 with 0 <= r0 <= r1 (r1 may be inf), got '" + s + "'");
    }
}

Json page_json(const ss::SSPage& pg) {
    Json d = Json::object();
    for (const auto& [pq, m] : pg.d)
        if (!m.is_zero()) d[pq_key(pq.first, pq.second)] = io::to_json(m);
    return Json{{"r", pg.r ? Json(*pg.r) : Json("inf")}, {"terms", pq_dims_json(pg.dims())}, {"d", d}};
}

Json spectral(const Options& opt, const Json& doc) {
    if (opt.filtration != "F" && opt.filtration != "W") throw InvalidInput("--filtration expects F or W");
    const bool w = opt.filtration == "W";
    ss::FilteredComplex k;
    if (type_of(doc) == "mhc") {
        const auto m = io::mhc_from(doc, "");
        k = w ? ss::FilteredComplex(m.rational, m.rational_w) : m.hodge.by_f();
    } else if (doc.is_object() && doc.contains("W") && doc.contains("F")) {
        const auto b = io::bifiltered_complex_from(doc, "");
        k = w ? b.by_w() : b.by_f();
    } else {
        k = io::filtered_complex_from(doc, "");
        if ((k.direction() == filt::Direction::Increasing) != w)
            throw InvalidInput("the complex carries no " + opt.filtration + " filtration");
    }
    const auto [r0, r1] = parse_pages(opt.pages);
    const int last = r1 ? *r1 : std::max(r0, ss::support_bound(k) + 1);
    Json pages = Json::array();
    std::optional<std::map<ss::PQ, std::size_t>> prev;
    for (int r = r0; r <= last + (r1 ? 0 : 1); ++r) {
        const bool inf = !r1 && r == last + 1;
        const ss::SSPage pg = inf ? ss::page(k, ss::kInfinity) : (w && r >= 1 ? ss::increasing_page(k, r) : ss::page(k, r));
        Json pj = page_json(pg);
        if (prev) pj["same_as_previous"] = *prev == pg.dims();
        prev = pg.dims();
        pages.push_back(std::move(pj));
    }
    const auto deg = ss::degeneration_rank(k);
    Json dj{{"rank", deg.rank}, {"strict", deg.strict}};
    if (deg.nonstrict_degree) dj["nonstrict_degree"] = *deg.nonstrict_degree;
    return Json{{"filtration", opt.filtration}, {"pages", pages}, {"degeneration", dj}};
}

Json comparison_json(const mhs::Comparison& c) {
    return Json{{"same_weight_dims", c.same_weight_dims},
                {"same_hodge_numbers", c.same_hodge_numbers},
                {"identical", c.identical},
                {"unipotent_isomorphic", c.unipotent_isomorphic}};
}

Json cone(const Json& doc) {
    const io::ConeInput in = io::cone_from(doc, "");
    const auto c = mhc::mixed_cone(in.morphism, in.homotopies);
    const auto t = mhc::degeneration_theorems(c);
    const auto les = mhc::cone_long_exact_sequence(in.morphism, in.homotopies);
    Json terms = Json::array();
    for (const auto& term : les.terms)
        terms.push_back(Json{{"label", term.label},
                             {"degree", term.degree},
                             {"weight_dims", io::weight_dims_json(mhs::weight_dims(term.mhs))},
                             {"hodge_numbers", io::hodge_numbers_json(mhs::hodge_numbers(term.mhs))}});
    Json out{{"cone", io::to_json(c)},
             {"object", io::bundle_json(t.cohomology)},
             {"les", Json{{"terms", terms}, {"exact", les.exact}, {"morphisms", les.morphisms}, {"strict", les.strict}}}};
    Json degrees = bundle_summary(t.cohomology)["degrees"];
    out["degrees"] = degrees;
    if (in.alternative) {
        Json cmp = Json::object();
        for (const auto& [n, r] : mhc::compare_cones(in.morphism, in.homotopies, *in.alternative))
            cmp[std::to_string(n)] = comparison_json(r);
        out["alternative"] = cmp;
    }
    return out;
}

Json graded_json(const geometry::WeightGradedCohomology& g) {
    std::map<int, mhs::MixedHodgeStructure> bundle;
    Json graded = Json::object();
    for (const auto& [i, pieces] : g.graded) {
        Json w = Json::object();
        for (const auto& [q, h] : pieces) {
            Json s = hs_summary(h);
            s.erase("object");
            s["dim"] = h.dim();
            w[std::to_string(q)] = s;
        }
        graded[std::to_string(i)] = Json{{"weight_dims", io::weight_dims_json(g.weight_dims(i))}, {"weights", w}};
        if (g.total_dim(i) > 0) bundle[i] = geometry::split_mhs(pieces);
    }
    return Json{{"e1", pq_dims_json(g.e1)}, {"e2", pq_dims_json(g.e2)}, {"cohomology", graded}, {"object", io::bundle_json(bundle)}};
}

Json generate(const Options& opt) {
    fixtures::Random rng(opt.seed);
    Json obj;
    if (opt.kind == "hs") {
        obj = io::to_json(fixtures::random_hs(rng, rng.uniform(0, 3), 6));
    } else if (opt.kind == "mhs") {
        obj = io::to_json(fixtures::random_mhs(rng));
    } else if (opt.kind == "morphism") {
        obj = io::to_json(fixtures::random_morphism(rng).morphism);
    } else if (opt.kind == "filtered_complex") {
        obj = io::to_json(fixtures::random_filtered_complex(rng));
    } else if (opt.kind == "bifiltered_complex") {
        obj = io::to_json(fixtures::random_bifiltered_complex(rng));
    } else if (opt.kind == "adversarial") {
        obj = io::to_json(fixtures::random_adversarial(rng).complex);
    } else if (opt.kind == "mhc") {
        obj = io::to_json(fixtures::random_mhc(rng));
    } else if (opt.kind == "cone") {
        obj = io::to_json(io::ConeInput{fixtures::random_cone_morphism(rng), {}, std::nullopt});
    } else {
        throw InvalidInput("unknown generator kind '" + opt.kind +
                           "' (hs, mhs, morphism, filtered_complex, bifiltered_complex, adversarial, mhc, cone)");
    }
    return Json{{"kind", opt.kind}, {"seed", opt.seed}, {"object", obj}};
}

std::string command_echo(const Options& opt) {
    std::string s = opt.command;
    if (opt.command == "validate") s += " " + opt.kind;
    if (opt.command == "ss") s += " --filtration " + opt.filtration + " --pages " + opt.pages;
    if (opt.command == "standard" || opt.command == "generate") s += " --kind " + opt.kind;
    if (opt.command == "standard") {
        s += " --params ";
        for (std::size_t k = 0; k < opt.params.size(); ++k) s += (k ? "," : "") + std::to_string(opt.params[k]);
    }
    if (opt.command == "generate") s += " --seed " + std::to_string(opt.seed);
    return s;
}

bool needs_input(const std::string& command) { return command != "standard" && command != "generate"; }

Json dispatch(const Options& opt, const std::string& text) {
    const Json doc = needs_input(opt.command) ? unwrap(io::parse_text(text, opt.input)) : Json();
    if (opt.command == "validate") return validate(opt.kind, doc);
    if (opt.command == "split") return split(doc);
    if (opt.command == "ss") return spectral(opt, doc);
    if (opt.command == "cone") return cone(doc);
    if (opt.command == "ncd") return graded_json(geometry::ncd_weight_cohomology(io::ncd_from(doc, "")));
    if (opt.command == "open-variety") return graded_json(geometry::open_weight_cohomology(io::open_from(doc, "")));
    if (opt.command == "standard") return bundle_summary(geometry::standard_space(opt.kind, opt.params));
    if (opt.command == "generate") return generate(opt);
    throw InvalidInput("unknown command '" + opt.command + "'");
}

// Text rendering.

bool is_pq_table(const Json& j) {
    if (!j.is_object() || j.empty()) return false;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number_integer()) return false;
        const auto c = k.find(',');
        if (c == std::string::npos) return false;
        try {
            std::stoi(k.substr(0, c));
            std::stoi(k.substr(c + 1));
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

/// Rows q descending, columns p ascending; zeros shown as '.'.
void render_table(std::ostream& os, const Json& j, const std::string& indent) {
    std::map<std::pair<int, int>, long> cells;
    int plo = 0, phi = 0, qlo = 0, qhi = 0;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        const auto c = k.find(',');
        const int p = std::stoi(k.substr(0, c)), q = std::stoi(k.substr(c + 1));
        cells[{p, q}] = v.get<long>();
        if (first) {
            plo = phi = p;
            qlo = qhi = q;
            first = false;
        }
        plo = std::min(plo, p), phi = std::max(phi, p), qlo = std::min(qlo, q), qhi = std::max(qhi, q);
    }
    std::size_t w = 3;
    for (int p = plo; p <= phi; ++p) w = std::max(w, std::to_string(p).size() + 1);
    for (const auto& [pq, v] : cells) w = std::max(w, std::to_string(v).size() + 1);
    std::size_t lw = 4;
    for (int q = qlo; q <= qhi; ++q) lw = std::max(lw, std::to_string(q).size() + 2);
    for (int q = qhi; q >= qlo; --q) {
        os << indent << pad("q=" + std::to_string(q), lw) << " |";
        for (int p = plo; p <= phi; ++p) {
            auto it = cells.find({p, q});
            os << pad(it == cells.end() || it->second == 0 ? "." : std::to_string(it->second), w);
        }
        os << "\n";
    }
    os << indent << std::string(lw, ' ') << " +" << std::string(w * static_cast<std::size_t>(phi - plo + 1), '-') << "\n";
    os << indent << pad("p", lw) << "  ";
    for (int p = plo; p <= phi; ++p) os << pad(std::to_string(p), w);
    os << "\n";
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_matrix(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& r : j)
        if (!r.is_array()) return false;
    return true;
}

void render_value(std::ostream& os, const std::string& key, const Json& j, const std::string& indent) {
    if (key == "object" || key == "cone") {
        os << indent << key << ": " << (type_of(j).empty() ? "document" : type_of(j)) << " (full form in --format json)\n";
    } else if (is_pq_table(j)) {
        os << indent << key << " (p,q):\n";
        render_table(os, j, indent + "  ");
    } else if (j.is_object()) {
        os << indent << key << ":" << (j.empty() ? " {}" : "") << "\n";
        for (const auto& [k, v] : j.items()) render_value(os, k, v, indent + "  ");
    } else if (is_matrix(j)) {
        os << indent << key << ":\n";
        for (const auto& row : j) {
            os << indent << "  [";
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << scalar_text(row[c]);
            os << "]\n";
        }
    } else if (j.is_array() && !j.empty() && j[0].is_object()) {
        os << indent << key << ":\n";
        for (std::size_t k = 0; k < j.size(); ++k) render_value(os, "[" + std::to_string(k) + "]", j[k], indent + "  ");
    } else if (j.is_object() || j.is_array()) {
        os << indent << key << ": " << j.dump() << "\n";
    } else {
        os << indent << key << ": " << scalar_text(j) << "\n";
    }
}

}  // namespace

Json to_json(const Report& r) {
    return Json{{"command", r.command}, {"status", r.status}, {"payload", r.payload}, {"witness", r.witness}, {"message", r.message}};
}

Report report_from(const Json& j) {
    Report r;
    auto str = [&](const char* key) -> std::string {
        if (!j.is_object() || !j.contains(key) || !j[key].is_string())
            throw InvalidInput(std::string("report is missing string field '") + key + "'");
        return j[key].get<std::string>();
    };
    r.command = str("command");
    r.status = str("status");
    if (r.status != "ok" && r.status != "invalid" && r.status != "inconsistent")
        throw InvalidInput("report status must be ok, invalid or inconsistent");
    r.message = str("message");
    if (!j.contains("payload") || !j["payload"].is_object()) throw InvalidInput("report is missing its payload");
    r.payload = j["payload"];
    r.witness = j.contains("witness") ? j["witness"] : Json();
    return r;
}

Report run(const Options& opt) {
    if (opt.command == "report" || needs_input(opt.command)) {
        try {
            return run(opt, read_input(opt.input));
        } catch (const InvalidInput& e) {
            Report r;
            r.command = command_echo(opt);
            r.status = "invalid";
            r.message = e.what();
            return r;
        }
    }
    return run(opt, std::string());
}

Report run(const Options& opt, const std::string& text) {
    Report r;
    r.command = command_echo(opt);
    try {
        if (opt.command == "report") return report_from(io::parse_text(text, opt.input));
        r.payload = dispatch(opt, text);
    } catch (const InvalidInput& e) {
        r.status = "invalid";
        r.message = e.what();
        r.witness = witness_json(e.witness());
        r.payload = Json::object();
    } catch (const Inconsistent& e) {
        r.status = "inconsistent";
        r.message = e.what();
        r.witness = witness_json(e.witness());
        r.payload = Json::object();
    } catch (const std::exception& e) {
        r.status = "inconsistent";
        r.message = std::string("internal error: ") + e.what();
        r.payload = Json::object();
    }
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "status: " << r.status << "\n";
    if (!r.message.empty()) os << "message: " << r.message << "\n";
    if (!r.witness.is_null()) os << "witness: " << r.witness.dump() << "\n";
    for (const auto& [k, v] : r.payload.items()) render_value(os, k, v, "");
    return os.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return io::dump(to_json(r));
    return render_text(r);
}

}  // namespace hodgekit::cli
