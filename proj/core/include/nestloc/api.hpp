#pragma once

#include <optional>
#include <string>

#include "nestloc/chain.hpp"
#include "nestloc/rational.hpp"

namespace nestloc::api {

/* One invocation of the engine: everything the CLI parses, in one place, so
 * results are reproducible functions of this record. */
struct JobSpec {
    std::string command;     // enumerate | tangent | chi-vir | ...
    int rank = 1;
    std::string profile;     // "n0,n1,..."
    std::optional<std::string> mu0; // comma parts, e.g. "2,1"
    std::string flavor = "euler";
    std::optional<std::string> y_at; // rational, e.g. "1", "-1", "1/2"
    int qmax = 3;
    int nmax = 4;
    int levels = 1;
    std::string surface = "p2";
    std::string cache_dir;   // empty = no cache
    int jobs = 1;
    std::string format = "json"; // json | text

    std::string canonical_key() const; // cache key (includes semantics version)
};

struct RunResult {
    int exit_code = 0; // 0 ok, 1 usage/internal, 2 conjecture failed, 3 discrepancy logged
    std::string output;
};

// dispatch on spec.command; throws std::invalid_argument for usage errors
RunResult run(const JobSpec& spec);

/* Canonical serialization of the exact types; byte-stable and round-trip
 * exact.  The JSON shape is {"vars": [...], "den_scale": [...],
 * "terms": [{"e": [...], "c": "<decimal>"}]} and {"num": ..., "den": ...}. */
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& payload);
std::string rational_to_json(const RationalFn& f);
RationalFn rational_from_json(const std::string& payload);

extern const char* kSemanticsVersion;

} // namespace nestloc::api
