// Command-line front end: parses class expressions, runs the library, and
// emits deterministic text/JSON/CSV reports.
//
// Exit codes: 0 success, 1 fixture or property failure, 2 usage/parse error,
// 3 internal invariant violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cremona/classify.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/fixtures.hpp"
#include "cremona/lattice.hpp"
#include "cremona/orbit.hpp"
#include "cremona/speciality.hpp"
#include "cremona/typeexpr.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cremona;

struct CommonOpts {
    bool as_json{false};
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.as_json, "emit a JSON document instead of text");
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
}

int emit(const std::string& content, const CommonOpts& opts) {
    if (opts.out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
        return 2;
    }
    file << content;
    return 0;
}

json make_doc(const std::string& command, json input, json result,
              json notes = json::array()) {
    json doc;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    doc["notes"] = std::move(notes);
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json step_json(const CremonaStep& s) {
    json j;
    j["base"] = {s.base[0] + 1, s.base[1] + 1, s.base[2] + 1, s.base[3] + 1};
    j["increment"] = s.increment;
    return j;
}

std::string step_text(const CremonaStep& s) {
    std::ostringstream os;
    os << "base {" << s.base[0] + 1 << ',' << s.base[1] + 1 << ',' << s.base[2] + 1 << ','
       << s.base[3] + 1 << "} increment " << s.increment;
    return os.str();
}

json steps_json(const std::vector<CremonaStep>& steps) {
    json arr = json::array();
    for (const CremonaStep& s : steps) arr.push_back(step_json(s));
    return arr;
}

std::string degrees_text(const std::vector<Int>& degrees) {
    std::string out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += " > ";
        out += std::to_string(degrees[i]);
    }
    return out;
}

json classification_json(const Classification& r) {
    json j;
    j["verdict"] = to_string(r.verdict);
    if (r.halt) j["halt"] = to_string(*r.halt);
    if (r.failed) j["failed"] = to_string(*r.failed);
    if (r.verdict != Verdict::not_numerical) j["degrees"] = r.degrees;
    if (r.verdict == Verdict::elementary) j["certificate"] = steps_json(r.certificate);
    if (r.halt_state) j["halt_state"] = render(*r.halt_state);
    return j;
}

std::string classification_detail(const Classification& r) {
    switch (r.verdict) {
        case Verdict::elementary:
            return "steps=" + std::to_string(r.certificate.size());
        case Verdict::numerical_only:
            return r.halt ? to_string(*r.halt) : "";
        case Verdict::not_numerical:
            return r.failed ? to_string(*r.failed) : "";
    }
    return "";
}

BaseQuad parse_base(const std::string& text) {
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
            idx.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad base index '" + part + "'");
        }
    }
    if (idx.size() != 4) throw ParseError("--base needs exactly four comma-separated indices");
    for (int v : idx)
        if (v < 1) throw ParseError("base indices are 1-based and must be >= 1");
    return {idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1};
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& expr, const CommonOpts& opts) {
    const CurveClass input = parse_curve(expr);
    const Classification r = classify(input);

    if (opts.as_json) {
        const json doc = make_doc("classify", {{"type", expr}}, classification_json(r));
        return emit(dump(doc), opts);
    }

    std::ostringstream os;
    os << "type:    " << render(normalize(input)) << '\n';
    os << "verdict: " << to_string(r.verdict);
    if (r.halt) os << " (" << to_string(*r.halt) << ')';
    if (r.failed) os << " (" << to_string(*r.failed) << ')';
    os << '\n';
    if (r.verdict != Verdict::not_numerical)
        os << "degrees: " << degrees_text(r.degrees) << '\n';
    if (r.halt_state) os << "halt:    " << render(*r.halt_state) << '\n';
    if (r.verdict == Verdict::elementary) {
        os << "certificate (forward from the line at points 1,2):\n";
        for (std::size_t i = 0; i < r.certificate.size(); ++i)
            os << "  step " << i + 1 << ": " << step_text(r.certificate[i]) << '\n';
    }
    return emit(os.str(), opts);
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(Int max_degree, std::optional<int> max_points, bool with_census,
                  bool as_csv, const CommonOpts& opts) {
    if (as_csv || with_census) {
        // CSV always carries the classification, one row per type
        const std::vector<CensusRow> rows = census(max_degree);
        if (as_csv) {
            // type expressions contain commas, so that field is quoted
            std::ostringstream os;
            os << "degree,type,verdict,detail\n";
            for (const CensusRow& row : rows)
                for (const auto& [t, cls] : row.types)
                    os << row.degree << ",\"" << render(t) << "\"," << to_string(cls.verdict)
                       << ',' << classification_detail(cls) << '\n';
            return emit(os.str(), opts);
        }
        if (opts.as_json) {
            json result = json::array();
            for (const CensusRow& row : rows) {
                json r;
                r["degree"] = row.degree;
                r["numerical"] = row.numerical;
                r["elementary"] = row.elementary;
                r["numerical_only"] = row.numerical_only;
                json types = json::array();
                for (const auto& [t, cls] : row.types) {
                    json entry;
                    entry["type"] = render(t);
                    entry["classification"] = classification_json(cls);
                    types.push_back(std::move(entry));
                }
                r["types"] = std::move(types);
                result.push_back(std::move(r));
            }
            const json doc =
                make_doc("enumerate", {{"max_degree", max_degree}, {"census", true}}, result);
            return emit(dump(doc), opts);
        }
        std::ostringstream os;
        os << "degree  numerical  elementary  numerical-only\n";
        for (const CensusRow& row : rows) {
            os << std::setw(6) << row.degree << "  " << std::setw(9) << row.numerical << "  "
               << std::setw(10) << row.elementary << "  " << std::setw(14)
               << row.numerical_only << '\n';
        }
        for (const CensusRow& row : rows)
            for (const auto& [t, cls] : row.types)
                os << "  " << render(t) << "  " << to_string(cls.verdict)
                   << (classification_detail(cls).empty()
                           ? ""
                           : " (" + classification_detail(cls) + ")")
                   << '\n';
        return emit(os.str(), opts);
    }

    const std::vector<CurveClass> types = numerical_types(max_degree, max_points);
    if (opts.as_json) {
        json result = json::array();
        for (const CurveClass& t : types) result.push_back(render(t));
        json input{{"max_degree", max_degree}};
        if (max_points) input["max_points"] = *max_points;
        return emit(dump(make_doc("enumerate", input, result)), opts);
    }
    std::ostringstream os;
    for (const CurveClass& t : types) os << render(t) << '\n';
    return emit(os.str(), opts);
}

// ---------------------------------------------------------------- orbit

int run_orbit(Int max_degree, int max_points, bool do_cross_validate,
              const CommonOpts& opts) {
    if (do_cross_validate) {
        const CrossValidation r = cross_validate(max_degree, max_points);
        if (opts.as_json) {
            json per = json::array();
            for (const auto& row : r.per_degree)
                per.push_back({{"degree", row.degree},
                               {"orbit", row.orbit_count},
                               {"elementary", row.elementary_count}});
            json result;
            result["equal"] = r.equal;
            result["per_degree"] = std::move(per);
            json only_orbit = json::array(), only_enum = json::array();
            for (const CurveClass& c : r.only_in_orbit) only_orbit.push_back(render(c));
            for (const CurveClass& c : r.only_in_enumeration) only_enum.push_back(render(c));
            result["only_in_orbit"] = std::move(only_orbit);
            result["only_in_enumeration"] = std::move(only_enum);
            const int rc = emit(
                dump(make_doc("orbit", {{"max_degree", max_degree}, {"cross_validate", true}},
                              result)),
                opts);
            return rc != 0 ? rc : (r.equal ? 0 : 1);
        }
        std::ostringstream os;
        os << "degree  orbit  elementary\n";
        for (const auto& row : r.per_degree)
            os << std::setw(6) << row.degree << "  " << std::setw(5) << row.orbit_count
               << "  " << std::setw(10) << row.elementary_count << '\n';
        os << "cross-validation: " << (r.equal ? "EQUAL" : "DISCREPANCY") << '\n';
        for (const CurveClass& c : r.only_in_orbit)
            os << "  only in orbit: " << render(c) << '\n';
        for (const CurveClass& c : r.only_in_enumeration)
            os << "  only in enumeration: " << render(c) << '\n';
        const int rc = emit(os.str(), opts);
        return rc != 0 ? rc : (r.equal ? 0 : 1);
    }

    const std::vector<OrbitEntry> entries = generate_orbit(max_degree, max_points);
    if (opts.as_json) {
        json result = json::array();
        for (const OrbitEntry& e : entries) {
            json entry;
            entry["type"] = render(e.cls);
            entry["depth"] = e.depth;
            entry["witness"] = steps_json(e.witness);
            result.push_back(std::move(entry));
        }
        return emit(dump(make_doc("orbit", {{"max_degree", max_degree}}, result)), opts);
    }
    std::ostringstream os;
    for (const OrbitEntry& e : entries) {
        os << render(e.cls) << "  depth " << e.depth;
        if (!e.witness.empty()) {
            os << "  [";
            for (std::size_t i = 0; i < e.witness.size(); ++i)
                os << (i ? "; " : "") << step_text(e.witness[i]);
            os << ']';
        }
        os << '\n';
    }
    return emit(os.str(), opts);
}

// ---------------------------------------------------------------- scan

int run_scan(Int max_degree, const CommonOpts& opts) {
    const std::vector<ScanEntry> entries = conjecture_scan(max_degree);
    if (opts.as_json) {
        json result = json::array();
        for (const ScanEntry& e : entries) {
            json entry;
            entry["type"] = render(e.cls);
            entry["boundary"] = e.boundary;
            if (e.planar_vdim) entry["planar_vdim"] = *e.planar_vdim;
            if (e.tail_sum) entry["tail_sum"] = *e.tail_sum;
            if (e.tail_square_sum) entry["tail_square_sum"] = *e.tail_square_sum;
            if (e.boundary) entry["identities_hold"] = e.identities_hold;
            result.push_back(std::move(entry));
        }
        return emit(dump(make_doc("conjecture-scan", {{"max_degree", max_degree}}, result)),
                    opts);
    }
    std::ostringstream os;
    if (entries.empty()) os << "no candidates through degree " << max_degree << '\n';
    for (const ScanEntry& e : entries) {
        os << render(e.cls);
        if (e.boundary) {
            os << "  planar-vdim " << *e.planar_vdim << "  tail-sum " << *e.tail_sum
               << "  tail-square-sum " << *e.tail_square_sum << "  identities "
               << (e.identities_hold ? "hold" : "FAIL");
        } else {
            os << "  (below the boundary stratum)";
        }
        os << '\n';
    }
    return emit(os.str(), opts);
}

// ---------------------------------------------------------------- speciality

int run_speciality(const std::string& expr, std::optional<Int> max_curve_degree,
                   const CommonOpts& opts) {
    const SystemClass input = parse_system(expr);
    const SpecialityReport report = line_speciality_report(input);

    std::optional<TheoremMtReport> mt;
    if (max_curve_degree && !report.standard_form.empty)
        mt = theorem_mt_check(input, *max_curve_degree);

    const bool violated = mt && !mt->violations.empty();

    if (opts.as_json) {
        json sf;
        sf["reduced"] = render(report.standard_form.reduced);
        sf["empty"] = report.standard_form.empty;
        sf["steps"] = steps_json(report.standard_form.steps);
        json pairs = json::array();
        for (const NegativePair& p : report.negative_lines)
            pairs.push_back({{"i", p.i + 1},
                             {"j", p.j + 1},
                             {"excess", p.excess},
                             {"speciality_inducing", p.speciality_inducing}});
        json result;
        result["standard_form"] = std::move(sf);
        result["negative_lines"] = std::move(pairs);
        if (mt) {
            json m;
            m["max_curve_degree"] = mt->max_curve_degree;
            m["curves_checked"] = mt->curves_checked;
            m["min_nonline_value"] = mt->min_nonline_value;
            m["line_min_value"] = mt->line_min_value;
            json v = json::array();
            for (const MtViolation& violation : mt->violations)
                v.push_back({{"type", render(violation.curve)}, {"value", violation.value}});
            m["violations"] = std::move(v);
            result["theorem_check"] = std::move(m);
        }
        json notes = json::array();
        for (const std::string& n : report.notes) notes.push_back(n);
        const int rc =
            emit(dump(make_doc("speciality", {{"system", expr}}, result, notes)), opts);
        return rc != 0 ? rc : (violated ? 1 : 0);
    }

    std::ostringstream os;
    os << "system:   " << render(normalize(input)) << '\n';
    os << "standard: " << render(report.standard_form.reduced)
       << (report.standard_form.empty ? "  (EMPTY)" : "") << '\n';
    for (const CremonaStep& s : report.standard_form.steps)
        os << "  reduction " << step_text(s) << '\n';
    if (report.negative_lines.empty()) {
        if (!report.standard_form.empty) os << "no negative line pairs\n";
    } else {
        os << "negative line pairs:\n";
        for (const NegativePair& p : report.negative_lines)
            os << "  points (" << p.i + 1 << ',' << p.j + 1 << "): value " << -p.excess
               << ", excess " << p.excess
               << (p.speciality_inducing ? "  [speciality-inducing]" : "") << '\n';
    }
    if (mt) {
        os << "theorem check through degree " << mt->max_curve_degree << ": "
           << mt->curves_checked << " classes, " << mt->violations.size() << " violations\n";
        os << "  min over non-line classes: " << mt->min_nonline_value << '\n';
        os << "  line minimum: " << mt->line_min_value << '\n';
        for (const MtViolation& v : mt->violations)
            os << "  VIOLATION " << render(v.curve) << " value " << v.value << '\n';
    }
    for (const std::string& n : report.notes) os << "note: " << n << '\n';
    const int rc = emit(os.str(), opts);
    return rc != 0 ? rc : (violated ? 1 : 0);
}

// ---------------------------------------------------------------- pair

int run_pair(const std::string& a, const std::string& b, const CommonOpts& opts) {
    const CurveClass ca = parse_curve(a);
    const CurveClass cb = parse_curve(b);
    const Int value = pairing(ca, cb);
    if (opts.as_json)
        return emit(dump(make_doc("pair", {{"a", a}, {"b", b}}, value)), opts);
    return emit(std::to_string(value) + "\n", opts);
}

// ---------------------------------------------------------------- cremona

int run_cremona(const std::string& type_expr, const std::string& system_expr,
                const std::string& base_expr, const CommonOpts& opts) {
    const BaseQuad base = parse_base(base_expr);
    json input;
    json result;
    std::ostringstream os;
    if (!type_expr.empty()) {
        const auto [image, step] = cremona_curve(parse_curve(type_expr), base);
        input = {{"type", type_expr}, {"base", base_expr}};
        result["image"] = render(image);
        result["step"] = step_json(step);
        os << render(image) << "  gamma " << step.increment << '\n';
    } else {
        const auto [image, step] = cremona_system(parse_system(system_expr), base);
        input = {{"system", system_expr}, {"base", base_expr}};
        result["image"] = render(image);
        result["step"] = step_json(step);
        os << render(image) << "  k " << step.increment << '\n';
    }
    if (opts.as_json) return emit(dump(make_doc("cremona", input, result)), opts);
    return emit(os.str(), opts);
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& fixtures_path, const CommonOpts& opts) {
    std::map<std::string, std::string> overrides;
    if (!fixtures_path.empty()) {
        std::ifstream file(fixtures_path);
        if (!file) throw ParseError("cannot open fixtures file '" + fixtures_path + "'");
        json doc;
        try {
            file >> doc;
        } catch (const json::exception& e) {
            throw ParseError("bad fixtures file: " + std::string(e.what()));
        }
        if (!doc.is_object()) throw ParseError("fixtures file must be a JSON object");
        std::map<std::string, bool> known;
        for (const Fixture& f : paper_fixtures()) known[f.name] = true;
        for (const auto& [key, value] : doc.items()) {
            if (!known.count(key)) throw ParseError("unknown fixture '" + key + "'");
            if (!value.is_string()) throw ParseError("fixture '" + key + "' must map to a string");
            overrides[key] = value.get<std::string>();
        }
    }

    const std::vector<FixtureOutcome> outcomes = run_fixtures(overrides);
    std::size_t passed = 0;
    for (const FixtureOutcome& o : outcomes) passed += o.pass;
    const bool all_pass = passed == outcomes.size();

    if (opts.as_json) {
        json result = json::array();
        for (const FixtureOutcome& o : outcomes) {
            json entry;
            entry["name"] = o.fixture->name;
            entry["pass"] = o.pass;
            entry["expected"] = o.expected;
            entry["actual"] = o.actual;
            if (!o.fixture->annotation.empty()) entry["annotation"] = o.fixture->annotation;
            result.push_back(std::move(entry));
        }
        json notes = json::array();
        notes.push_back(std::to_string(passed) + "/" + std::to_string(outcomes.size()) +
                        " fixtures pass");
        const int rc = emit(
            dump(make_doc("verify-paper", {{"fixtures", fixtures_path}}, result, notes)),
            opts);
        return rc != 0 ? rc : (all_pass ? 0 : 1);
    }

    std::ostringstream os;
    for (const FixtureOutcome& o : outcomes) {
        if (o.pass)
            os << "PASS " << o.fixture->name << " — " << o.fixture->summary << '\n';
        else
            os << "FAIL " << o.fixture->name << ": expected '" << o.expected << "', got '"
               << o.actual << "'\n";
        if (!o.fixture->annotation.empty())
            os << "  note: " << o.fixture->annotation << '\n';
    }
    os << passed << '/' << outcomes.size() << " fixtures pass\n";
    const int rc = emit(os.str(), opts);
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for curve and linear-system classes of blown-up projective "
        "3-space under cubo-cubic Cremona transformations"};
    app.require_subcommand(1);

    // classify
    std::string classify_expr;
    CommonOpts classify_opts;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "classify a curve type by the degree-decreasing reduction");
    cmd_classify->add_option("--type", classify_expr, "curve type, e.g. \"13;6,4^2,3,1^9\"")
        ->required();
    add_common(cmd_classify, classify_opts);

    // enumerate
    Int enum_max_degree = 0;
    int enum_max_points = -1;
    bool enum_census = false, enum_csv = false;
    CommonOpts enum_opts;
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "enumerate numerical (-1) types by degree");
    cmd_enumerate->add_option("--max-degree", enum_max_degree, "largest degree to enumerate")
        ->required();
    cmd_enumerate->add_option("--max-points", enum_max_points, "cap on the number of points");
    cmd_enumerate->add_flag("--census", enum_census, "classify every type and tabulate");
    CLI::Option* opt_csv =
        cmd_enumerate->add_flag("--csv", enum_csv, "emit CSV (one classified row per type)");
    add_common(cmd_enumerate, enum_opts);
    opt_csv->excludes(cmd_enumerate->get_option("--json"));

    // orbit
    Int orbit_max_degree = 0;
    int orbit_max_points = -1;
    bool orbit_cv = false;
    CommonOpts orbit_opts;
    CLI::App* cmd_orbit =
        app.add_subcommand("orbit", "generate the degree-increasing orbit of the line");
    cmd_orbit->add_option("--max-degree", orbit_max_degree, "largest degree to generate")
        ->required();
    cmd_orbit->add_option("--max-points", orbit_max_points,
                          "number of points available (default 2*max-degree)");
    cmd_orbit->add_flag("--cross-validate", orbit_cv,
                        "compare the orbit against enumerate+classify");
    add_common(cmd_orbit, orbit_opts);

    // conjecture-scan
    Int scan_max_degree = 0;
    CommonOpts scan_opts;
    CLI::App* cmd_scan = app.add_subcommand(
        "conjecture-scan", "list numerical types with degree < 2*mu1 other than the line");
    cmd_scan->add_option("--max-degree", scan_max_degree, "largest degree to scan")->required();
    add_common(cmd_scan, scan_opts);

    // speciality
    std::string spec_expr;
    Int spec_curve_degree = -1;
    CommonOpts spec_opts;
    CLI::App* cmd_spec = app.add_subcommand(
        "speciality", "standard form and line-speciality analysis of a linear system");
    cmd_spec->add_option("--system", spec_expr, "system class, e.g. \"4;3,3,1^4\"")->required();
    cmd_spec->add_option("--max-curve-degree", spec_curve_degree,
                         "also verify nonnegativity against all elementary classes up to "
                         "this degree");
    add_common(cmd_spec, spec_opts);

    // pair
    std::string pair_a, pair_b;
    CommonOpts pair_opts;
    CLI::App* cmd_pair = app.add_subcommand("pair", "pairing of two curve types");
    cmd_pair->add_option("--a", pair_a, "first curve type")->required();
    cmd_pair->add_option("--b", pair_b, "second curve type")->required();
    add_common(cmd_pair, pair_opts);

    // cremona
    std::string cremona_type, cremona_system_expr, cremona_base;
    CommonOpts cremona_opts;
    CLI::App* cmd_cremona =
        app.add_subcommand("cremona", "apply one cubo-cubic transformation");
    CLI::Option* opt_type = cmd_cremona->add_option("--type", cremona_type, "curve type");
    CLI::Option* opt_system =
        cmd_cremona->add_option("--system", cremona_system_expr, "system class");
    cmd_cremona->add_option("--base", cremona_base, "four 1-based point indices, e.g. 3,4,5,6")
        ->required();
    opt_type->excludes(opt_system);
    add_common(cmd_cremona, cremona_opts);

    // verify-paper
    std::string verify_fixtures;
    CommonOpts verify_opts;
    CLI::App* cmd_verify =
        app.add_subcommand("verify-paper", "run the embedded fixture suite of worked examples");
    cmd_verify->add_option("--fixtures", verify_fixtures,
                           "JSON file overriding expected fixture values");
    add_common(cmd_verify, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // --out writes the structured report: JSON, unless CSV was asked for
    for (CommonOpts* opts : {&classify_opts, &enum_opts, &orbit_opts, &scan_opts, &spec_opts,
                             &pair_opts, &cremona_opts, &verify_opts}) {
        if (!opts->out_path.empty() && !(opts == &enum_opts && enum_csv))
            opts->as_json = true;
    }

    try {
        if (app.got_subcommand(cmd_classify)) return run_classify(classify_expr, classify_opts);
        if (app.got_subcommand(cmd_enumerate))
            return run_enumerate(enum_max_degree,
                                 enum_max_points < 0 ? std::nullopt
                                                     : std::optional<int>(enum_max_points),
                                 enum_census, enum_csv, enum_opts);
        if (app.got_subcommand(cmd_orbit))
            return run_orbit(orbit_max_degree, orbit_max_points, orbit_cv, orbit_opts);
        if (app.got_subcommand(cmd_scan)) return run_scan(scan_max_degree, scan_opts);
        if (app.got_subcommand(cmd_spec))
            return run_speciality(spec_expr,
                                  spec_curve_degree < 0 ? std::nullopt
                                                        : std::optional<Int>(spec_curve_degree),
                                  spec_opts);
        if (app.got_subcommand(cmd_pair)) return run_pair(pair_a, pair_b, pair_opts);
        if (app.got_subcommand(cmd_cremona)) {
            if (cremona_type.empty() && cremona_system_expr.empty()) {
                std::cerr << "error: cremona needs --type or --system\n";
                return 2;
            }
            return run_cremona(cremona_type, cremona_system_expr, cremona_base, cremona_opts);
        }
        if (app.got_subcommand(cmd_verify)) return run_verify(verify_fixtures, verify_opts);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const CertificateError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
