#include "nestloc/api.hpp"

#include <sstream>

#include <json.hpp>

#include "nestloc/cache.hpp"
#include "nestloc/invariants.hpp"
#include "nestloc/qseries.hpp"
#include "nestloc/symfunc.hpp"
#include "nestloc/tangent.hpp"
#include "nestloc/toric.hpp"

namespace nestloc::api {

using json = nlohmann::ordered_json;

const char* kSemanticsVersion = "1";

namespace {

json poly_json(const LaurentPoly& p) {
    json j;
    j["vars"] = p.varset()->names();
    j["den_scale"] = p.varset()->dens();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["e"] = e;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_parse(const json& j) {
    auto vs = VarSet::make(j.at("vars").get<std::vector<std::string>>(),
                           j.at("den_scale").get<std::vector<int>>());
    LaurentPoly p(vs);
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("e").get<ExpVec>();
        Int c(t.at("c").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

json rational_json(const RationalFn& f) {
    json j;
    j["num"] = poly_json(f.num());
    j["den"] = poly_json(f.den());
    return j;
}

RationalFn rational_parse(const json& j) {
    return RationalFn(poly_parse(j.at("num")), poly_parse(j.at("den")));
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_parse_csv(const std::string& csv) {
    if (csv.empty() || csv == "0" || csv == "()")
        return Partition::empty();
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        parts.push_back(std::stoi(tok));
    return Partition(parts);
}

json chain_json(const NestedChain& c) {
    json j;
    j["mu0"] = partition_json(c.mu0);
    json inner = json::array();
    for (const auto& m : c.inner)
        inner.push_back(partition_json(m));
    j["inner"] = std::move(inner);
    return j;
}

json colored_chain_json(const ColoredNestedChain& c) {
    json colors = json::array();
    for (const auto& ch : c.colors)
        colors.push_back(chain_json(ch));
    json j;
    j["colors"] = std::move(colors);
    return j;
}

json profile_json(const Profile& p) {
    json j = json::array();
    j.push_back(p.n0);
    for (int v : p.inner)
        j.push_back(v);
    return j;
}

Flavor parse_flavor(const std::string& s) {
    if (s == "euler")
        return Flavor::Euler;
    if (s == "chi_y" || s == "chi-y")
        return Flavor::ChiY;
    throw std::invalid_argument("unknown flavor: " + s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// ---------------------------------------------------------------- commands

json run_enumerate(const JobSpec& spec) {
    Profile p = Profile::parse(spec.profile);
    json j;
    j["command"] = "enumerate";
    j["rank"] = spec.rank;
    j["profile"] = profile_json(p);
    auto st = p.status();
    if (st == Profile::Status::Invalid)
        throw std::invalid_argument("invalid profile " + p.to_string());
    j["status"] = st == Profile::Status::Infeasible ? "infeasible" : "ok";
    json chains = json::array();
    Int count = 0;
    if (st == Profile::Status::Ok) {
        if (spec.rank == 1) {
            for_each_chain(p, [&](const NestedChain& c) {
                chains.push_back(chain_json(c));
                ++count;
            });
        } else {
            for_each_colored_chain(spec.rank, p, [&](const ColoredNestedChain& c) {
                chains.push_back(colored_chain_json(c));
                ++count;
            });
        }
    }
    j["count"] = count.str();
    j["chains"] = std::move(chains);
    return j;
}

json run_tangent(const JobSpec& spec) {
    Profile p = Profile::parse(spec.profile);
    json j;
    j["command"] = "tangent";
    j["rank"] = spec.rank;
    j["profile"] = profile_json(p);
    json entries = json::array();
    bool all_match = true;
    for_each_colored_chain(spec.rank, p, [&](const ColoredNestedChain& c) {
        LaurentPoly closed = tangent_character_chain(c, spec.rank);
        LaurentPoly oracle = tangent_character_oracle(c, spec.rank);
        LaurentPoly corrected = tangent_character_chain(c, spec.rank, true);
        json e;
        e["chain"] = spec.rank == 1 ? chain_json(c.colors[0]) : colored_chain_json(c);
        e["character"] = poly_json(closed);
        e["vd"] = virtual_dimension(closed).str();
        bool m = closed == oracle;
        all_match = all_match && m;
        e["oracle_match"] = m;
        e["overcount_correction_matches"] = corrected == oracle;
        if (spec.rank == 1 && c.levels() == 1) {
            LaurentPoly gsy = tangent_character_two_step(c.colors[0]);
            e["two_step_match"] = gsy == oracle;
        }
        entries.push_back(std::move(e));
    });
    j["all_oracle_match"] = all_match;
    j["entries"] = std::move(entries);
    return j;
}

json run_chi(const JobSpec& spec) {
    Profile p = Profile::parse(spec.profile);
    const bool chi_y_cmd = spec.command == "chi-y";
    json j;
    j["command"] = spec.command;
    j["rank"] = spec.rank;
    j["profile"] = profile_json(p);
    ChiOptions opts;
    opts.flavor = chi_y_cmd ? Flavor::ChiY : parse_flavor(spec.flavor);
    opts.jobs = spec.jobs;
    std::optional<Rat> general_y;
    if (spec.y_at) {
        if (opts.flavor != Flavor::ChiY)
            throw std::invalid_argument("--y-at requires the chi_-y flavor");
        Rat v = parse_rat(*spec.y_at);
        if (v == 0 || v == 1 || v == -1)
            opts.y_unit = static_cast<int>(v.convert_to<long long>());
        else
            general_y = v;
    }
    auto res = chi_vir(spec.rank, p, opts);
    RationalFn value = res.value;
    if (general_y)
        value = value.substitute_const("y", *general_y);
    j["infeasible"] = res.infeasible;
    j["fixed_points"] = res.fixed_points.str();
    if (spec.y_at)
        j["y_at"] = *spec.y_at;
    j["value"] = rational_json(value);
    return j;
}

json run_elliptic(const JobSpec& spec) {
    Profile p = Profile::parse(spec.profile);
    json j;
    j["command"] = "elliptic";
    j["rank"] = spec.rank;
    j["profile"] = profile_json(p);
    j["qmax"] = spec.qmax;
    auto res = elliptic_genus(spec.rank, p, spec.qmax, {}, spec.jobs);
    j["infeasible"] = res.infeasible;
    j["fixed_points"] = res.fixed_points.str();
    j["vd"] = profile_virtual_dimension(spec.rank, p).str();
    json orders = json::array();
    for (int k = 0; k <= res.series.qmax(); ++k) {
        json o;
        o["q_order"] = k;
        o["coeff"] = rational_json(res.series.coeff(k));
        orders.push_back(std::move(o));
    }
    j["orders"] = std::move(orders);
    return j;
}

json conjecture1_json(const Conjecture1Result& r) {
    json e;
    e["mu0"] = partition_json(r.mu0);
    e["profile"] = profile_json(r.profile);
    e["is_polynomial"] = r.is_poly;
    e["pole_order"] = r.pole_order;
    if (r.is_poly) {
        if (r.witness.term_count() <= 200)
            e["witness"] = poly_json(r.witness);
        else
            e["witness_terms"] = r.witness.term_count();
    }
    if (r.q_quotient)
        e["q_quotient"] = poly_json(*r.q_quotient);
    return e;
}

json run_extract_p(const JobSpec& spec) {
    if (spec.rank != 1)
        throw std::invalid_argument("extract-p is a rank-1 operation");
    Profile p = Profile::parse(spec.profile);
    json j;
    j["command"] = "extract-p";
    j["profile"] = profile_json(p);
    std::vector<Partition> mu0s;
    if (spec.mu0)
        mu0s.push_back(partition_parse_csv(*spec.mu0));
    else
        mu0s = enumerate_partitions(p.n0);
    json entries = json::array();
    for (const auto& mu0 : mu0s) {
        json e;
        e["mu0"] = partition_json(mu0);
        e["P"] = rational_json(extract_P(mu0, p));
        e["conjecture1"] = conjecture1_json(conjecture1_check(mu0, p));
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

json run_conjecture_poly(const JobSpec& spec, int* exit_code) {
    json j;
    j["command"] = "conjecture poly";
    j["nmax"] = spec.nmax;
    j["levels"] = spec.levels;
    json entries = json::array();
    long checked = 0;
    bool all_poly = true;
    for (int n0 = 0; n0 <= spec.nmax; ++n0) {
        for (const auto& mu0 : enumerate_partitions(n0)) {
            for (int N = 0; N <= spec.levels; ++N) {
                // weakly increasing inner sizes s_1 <= ... <= s_N <= n0
                std::vector<int> s(static_cast<std::size_t>(N), 0);
                std::function<void(int, int)> rec = [&](int k, int lo) {
                    if (k == N) {
                        Profile p;
                        p.n0 = n0;
                        for (int i = 0; i < N; ++i)
                            p.inner.push_back(n0 - s[static_cast<std::size_t>(i)]);
                        auto r = conjecture1_check(mu0, p);
                        ++checked;
                        all_poly = all_poly && r.is_poly;
                        entries.push_back(conjecture1_json(r));
                        return;
                    }
                    for (int v = lo; v <= n0; ++v) {
                        s[static_cast<std::size_t>(k)] = v;
                        rec(k + 1, v);
                    }
                };
                rec(0, 0);
            }
        }
    }
    j["checked"] = checked;
    j["all_polynomial"] = all_poly;
    j["entries"] = std::move(entries);
    if (!all_poly)
        *exit_code = 2;
    return j;
}

json run_conjecture_macdonald(const JobSpec& spec, int* exit_code) {
    json j;
    j["command"] = "conjecture macdonald";
    j["nmax"] = spec.nmax;
    j["convention"] = detected_convention().to_string();
    json entries = json::array();
    bool all_equal = true;
    for (int n = 1; n <= spec.nmax; ++n) {
        for (const auto& mu0 : enumerate_partitions(n)) {
            auto r = conjecture2_check(mu0);
            all_equal = all_equal && r.equal;
            json e;
            e["mu0"] = partition_json(r.mu0);
            e["profile"] = profile_json(r.profile);
            e["q_localization"] = rational_json(r.q_localization);
            e["division_exact"] = r.division_exact;
            e["q_macdonald"] = poly_json(r.q_macdonald);
            e["equal"] = r.equal;
            e["q_hall_pairing"] = rational_json(r.q_hall);
            e["hall_pairing_matches"] = r.hall_matches;
            json ks = json::array();
            for (std::size_t v = 0; v < r.ksum_by_vars.size(); ++v) {
                json kv;
                kv["n_vars"] = static_cast<int>(v + 1);
                kv["kostka_sum"] = poly_json(r.ksum_by_vars[v]);
                ks.push_back(std::move(kv));
            }
            e["kostka_sums_by_vars"] = std::move(ks);
            entries.push_back(std::move(e));
        }
    }
    j["all_equal"] = all_equal;
    j["entries"] = std::move(entries);
    if (!all_equal)
        *exit_code = 2;
    return j;
}

json run_toric(const JobSpec& spec, int* exit_code) {
    Surface s = spec.surface == "p1xp1" ? Surface::P1xP1 : Surface::P2;
    json j;
    j["command"] = "toric";
    j["surface"] = surface_name(s);
    j["levels"] = spec.levels;
    j["n_total_max"] = spec.nmax;
    auto series = surface_chi_y_series(s, spec.nmax, spec.levels);
    json factors = json::array();
    for (int ell = 0; ell < patch_count(s); ++ell) {
        json f = json::array();
        for (const auto& [key, poly] : series.patch_factors[static_cast<std::size_t>(ell)]) {
            json e;
            e["profile"] = key;
            e["coeff"] = poly_json(poly);
            f.push_back(std::move(e));
        }
        factors.push_back(std::move(f));
    }
    j["patch_factors"] = std::move(factors);
    json assembled = json::array();
    for (const auto& [key, poly] : series.assembled) {
        json e;
        e["profile"] = key;
        e["coeff"] = poly_json(poly);
        assembled.push_back(std::move(e));
    }
    j["assembled"] = std::move(assembled);
    j["discrepancies"] = series.discrepancies;
    json report = json::array();
    for (const auto& row : series.report) {
        json e;
        e["patch"] = row.patch;
        e["chain"] = chain_json(row.chain);
        e["predicted_exponents"] = {{"inv_n", row.predicted.inv_n_exp},
                                    {"t", row.predicted.t_exp},
                                    {"w", row.predicted.w_exp}};
        e["oracle_inv_n"] = poly_json(row.oracle_inv_n);
        e["oracle_t"] = poly_json(row.oracle_t);
        e["oracle_w"] = poly_json(row.oracle_w);
        e["oracle_full"] = poly_json(row.oracle_full);
        e["match_components"] = row.match_components;
        e["match_total"] = row.match_total;
        e["match_assembled_form"] = row.match_assembled;
        report.push_back(std::move(e));
    }
    j["report"] = std::move(report);
    if (series.discrepancies > 0)
        *exit_code = 3;
    return j;
}

json run_macmahon(const JobSpec& spec, int* exit_code) {
    auto r = macmahon_check(spec.nmax);
    json j;
    j["command"] = "macmahon";
    j["nmax"] = spec.nmax;
    auto arr = [](const std::vector<Int>& v) {
        json a = json::array();
        for (const auto& x : v)
            a.push_back(x.str());
        return a;
    };
    j["chain_counts"] = arr(r.chain_counts);
    j["plane_partitions"] = arr(r.plane_partitions);
    j["profile_grading"] = arr(r.profile_grading);
    j["match"] = r.match;
    j["sign_convention"] = r.sign_convention;
    if (!r.match)
        *exit_code = 2;
    return j;
}

json run_smooth_nested(const JobSpec& spec, int* exit_code) {
    auto r = smooth_nested_check(spec.nmax, spec.rank);
    json j;
    j["command"] = "smooth-nested";
    j["rank"] = spec.rank;
    j["nmax"] = spec.nmax;
    auto arr = [](const std::vector<Int>& v) {
        json a = json::array();
        for (const auto& x : v)
            a.push_back(x.str());
        return a;
    };
    j["values"] = arr(r.values);
    j["expected"] = arr(r.expected);
    j["one_box_family"] = arr(r.one_box_family);
    j["match"] = r.match;
    if (!r.match)
        *exit_code = 2;
    return j;
}

// ------------------------------------------------------------- text render

void render_text(const json& j, std::ostream& os, int indent);

bool looks_like_poly(const json& j) {
    return j.is_object() && j.contains("vars") && j.contains("terms");
}

std::string poly_text(const json& j) {
    return poly_parse(j).to_string();
}

void render_text(const json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (looks_like_poly(j)) {
        os << poly_text(j) << "\n";
        return;
    }
    if (j.is_object() && j.contains("num") && j.contains("den") &&
        looks_like_poly(j["num"])) {
        os << "(" << poly_text(j["num"]) << ") / (" << poly_text(j["den"]) << ")\n";
        return;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive()) {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            } else {
                os << pad << k << ":";
                if (looks_like_poly(v) ||
                    (v.is_object() && v.contains("num") && v.contains("den"))) {
                    os << " ";
                    render_text(v, os, 0);
                } else {
                    os << "\n";
                    render_text(v, os, indent + 1);
                }
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive()) {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            } else {
                os << pad << "-\n";
                render_text(v, os, indent + 1);
            }
        }
        return;
    }
    os << pad << j.dump() << "\n";
}

} // namespace

std::string JobSpec::canonical_key() const {
    std::ostringstream os;
    os << "v" << kSemanticsVersion << "|" << command << "|rank=" << rank
       << "|profile=" << profile;
    if (mu0)
        os << "|mu0=" << *mu0;
    os << "|flavor=" << flavor;
    if (y_at)
        os << "|y=" << *y_at;
    os << "|qmax=" << qmax << "|nmax=" << nmax << "|levels=" << levels
       << "|surface=" << surface;
    return os.str();
}

std::string poly_to_json(const LaurentPoly& p) { return poly_json(p).dump(); }

LaurentPoly poly_from_json(const std::string& payload) {
    return poly_parse(json::parse(payload));
}

std::string rational_to_json(const RationalFn& f) { return rational_json(f).dump(); }

RationalFn rational_from_json(const std::string& payload) {
    return rational_parse(json::parse(payload));
}

RunResult run(const JobSpec& spec) {
    RunResult out;
    auto compute = [&]() -> std::string {
        int code = 0;
        json j;
        if (spec.command == "enumerate")
            j = run_enumerate(spec);
        else if (spec.command == "tangent")
            j = run_tangent(spec);
        else if (spec.command == "chi-vir" || spec.command == "chi-y")
            j = run_chi(spec);
        else if (spec.command == "elliptic")
            j = run_elliptic(spec);
        else if (spec.command == "extract-p")
            j = run_extract_p(spec);
        else if (spec.command == "conjecture poly")
            j = run_conjecture_poly(spec, &code);
        else if (spec.command == "conjecture macdonald")
            j = run_conjecture_macdonald(spec, &code);
        else if (spec.command == "toric")
            j = run_toric(spec, &code);
        else if (spec.command == "macmahon")
            j = run_macmahon(spec, &code);
        else if (spec.command == "smooth-nested")
            j = run_smooth_nested(spec, &code);
        else
            throw std::invalid_argument("unknown command: " + spec.command);
        j["exit_code"] = code;
        return j.dump();
    };

    std::string payload;
    const bool cacheable = spec.command != "enumerate" && spec.command != "tangent";
    if (!spec.cache_dir.empty() && cacheable) {
        ResultCache cache(spec.cache_dir);
        payload = cache.get_or_compute(spec.canonical_key(), compute,
                                       [](const std::string& s) {
                                           return json::accept(s);
                                       });
    } else {
        payload = compute();
    }

    json j = json::parse(payload);
    out.exit_code = j.value("exit_code", 0);
    if (spec.format == "text") {
        std::ostringstream os;
        render_text(j, os, 0);
        out.output = os.str();
    } else {
        out.output = j.dump() + "\n";
    }
    return out;
}

} // namespace nestloc::api
