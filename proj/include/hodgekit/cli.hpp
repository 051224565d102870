#pragma once

#include "hodgekit/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

/// Batch front end: each command loads one document, runs a computation and
/// returns a Report. The executable in tools/ only parses flags and prints.
namespace hodgekit::cli {

struct Options {
    std::string command;        ///< validate, split, ss, cone, ncd, open-variety, standard, report, generate
    std::string kind;           ///< validate target, standard space kind or generator kind
    std::string input = "-";    ///< path, "-" for standard input
    std::string filtration = "F";
    std::string pages = "0:2";  ///< r0:r1, r1 may be "inf"
    std::vector<int> params;
    std::uint64_t seed = 0;
};

struct Report {
    std::string command;
    std::string status = "ok";  ///< ok, invalid or inconsistent
    io::Json payload = io::Json::object();
    io::Json witness;           ///< null unless a check failed
    std::string message;

    int exit_code() const { return status == "ok" ? 0 : status == "invalid" ? 1 : 2; }
};

io::Json to_json(const Report& r);
Report report_from(const io::Json& j);

/// Never throws for bad input: errors become invalid or inconsistent reports.
Report run(const Options& opt);
/// Reads `opt.input` only for commands that take a document.
Report run(const Options& opt, const std::string& text);

/// Human-readable rendering with Hodge tables on explicit (p,q) axes.
std::string render_text(const Report& r);
std::string render(const Report& r, const std::string& format);

}  // namespace hodgekit::cli
