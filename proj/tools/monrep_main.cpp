// Command-line front end: parse an input file, run the requested check and
// print a text or JSON report on stdout.  Diagnostics go to stderr.
//
// Exit codes: 0 success / property holds, 1 property fails (not monic,
// not Gorenstein-projective, suite failures), 2 unusable input,
// 3 undecided (check-gp only).

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monrep/category_lab.hpp"
#include "monrep/monic.hpp"
#include "monrep/input_format.hpp"

using nlohmann::json;
using namespace monrep;

namespace {

struct Globals {
    std::string report = "text";
    std::int64_t field_p = 0; // 0: keep the field declared in the file
    int jobs = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Replace the argument of the first field declaration.
std::string override_field(const std::string& text, std::int64_t p) {
    std::regex re(R"((^|\n)[ \t]*field[ \t]+([A-Za-z0-9_]+))");
    std::smatch m;
    if (!std::regex_search(text, m, re)) return text;
    std::string out = text;
    out.replace(m.position(2), m.length(2), std::to_string(p));
    return out;
}

InputData load(const std::string& path, const Globals& g) {
    std::string text = slurp(path);
    if (g.field_p > 0) text = override_field(text, g.field_p);
    return parse_input(text);
}

const char* gp_name(GP v) {
    switch (v) {
        case GP::gp: return "gp";
        case GP::not_gp: return "not-gp";
        default: return "unknown";
    }
}

json base_report(const std::string& command) {
    return json{{"schema_version", 1},
                {"command", command},
                {"verdict", nullptr},
                {"per_vertex", nullptr},
                {"per_arrow", nullptr},
                {"witnesses", json::array()},
                {"seed", nullptr},
                {"depth", nullptr},
                {"elapsed_ms", nullptr}};
}

json witness_json(const LambdaContext& c, const MonicWitness& w) {
    return json{{"condition", w.condition},
                {"outer_vertex", w.outer_vertex},
                {"arrow", w.arrow_id >= 0 ? json(c.quiver().arrow(w.arrow_id).name)
                                          : json(nullptr)},
                {"inner_vertex", c.base().vertex_name(w.inner_vertex)},
                {"detail", w.detail}};
}

void render_text(const json& j, std::ostream& out) {
    out << j["command"].get<std::string>() << ": " << j["verdict"].get<std::string>()
        << "\n";
    if (j.contains("reason") && j["reason"].is_string())
        out << "  " << j["reason"].get<std::string>() << "\n";
    if (j["per_vertex"].is_array())
        for (const json& v : j["per_vertex"]) {
            out << "vertex " << v["vertex"].get<int>() << ": ";
            if (v.contains("ok"))
                out << (v["ok"].get<bool>() ? "ok" : "FAIL");
            else
                out << "branch " << v["branch"].get<std::string>() << ", quotient "
                    << v["quotient"].get<std::string>() << " (dim "
                    << v["quotient_dim"].get<int>() << ")";
            out << "\n";
        }
    if (j["per_arrow"].is_array())
        for (const json& a : j["per_arrow"])
            out << "arrow " << a["arrow"].get<std::string>() << ": "
                << (a["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    for (const json& w : j["witnesses"])
        out << "  [" << w["condition"].get<std::string>() << "] outer vertex "
            << w["outer_vertex"].get<int>()
            << (w["arrow"].is_string() ? ", arrow " + w["arrow"].get<std::string>() : "")
            << ", coefficient vertex " << w["inner_vertex"].get<std::string>() << ": "
            << w["detail"].get<std::string>() << "\n";
    if (j.contains("cross_check"))
        out << "cross-check: direct " << j["cross_check"]["direct"].get<std::string>()
            << ", inductive " << j["cross_check"]["inductive"].get<std::string>()
            << ", homological " << j["cross_check"]["homological"].get<std::string>()
            << "\n";
    if (j.contains("instances"))
        out << "instances: " << j["instances"].get<int>() << ", failures "
            << j["failures"].get<int>() << ", skipped " << j["skipped"].get<int>()
            << "\n";
    if (j.contains("notes"))
        for (const json& n : j["notes"]) out << "  note: " << n.get<std::string>() << "\n";
    if (j.contains("output"))
        out << "wrote: " << j["output"].get<std::string>() << "\n";
    if (j["elapsed_ms"].is_number())
        out << "elapsed: " << j["elapsed_ms"].get<std::int64_t>() << " ms\n";
}

void emit(json& j, const Globals& g, std::int64_t elapsed_ms) {
    j["elapsed_ms"] = elapsed_ms;
    if (g.report == "json")
        std::cout << j.dump(2) << "\n";
    else
        render_text(j, std::cout);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run_validate(const std::string& file, const Globals& g) {
    Timer t;
    InputData s = load(file, g);
    json j = base_report("validate");
    j["verdict"] = "valid";
    j["algebra"] = s.algebra_name;
    j["quiver"] = s.quiver_name;
    j["modules"] = int(s.modules.size());
    j["reps"] = int(s.reps.size());
    emit(j, g, t.ms());
    return 0;
}

int run_check_monic(const std::string& file, const std::string& rep, const Globals& g) {
    Timer t;
    InputData s = load(file, g);
    const LambdaRep& x = s.rep_by_name(rep);
    MonicReport r = check_monic(s.context, x);
    json j = base_report("check-monic");
    j["verdict"] = r.monic() ? "monic" : "not-monic";
    j["rep"] = rep;
    json pv = json::array();
    for (std::size_t v = 0; v < r.vertex_ok.size(); ++v)
        pv.push_back({{"vertex", int(v) + 1}, {"ok", bool(r.vertex_ok[v])}});
    j["per_vertex"] = pv;
    json pa = json::array();
    for (std::size_t a = 0; a < r.arrow_ok.size(); ++a)
        pa.push_back({{"arrow", s.context.quiver().arrow(int(a)).name},
                      {"ok", bool(r.arrow_ok[a])}});
    j["per_arrow"] = pa;
    for (const MonicWitness& w : r.witnesses)
        j["witnesses"].push_back(witness_json(s.context, w));
    emit(j, g, t.ms());
    return r.monic() ? 0 : 1;
}

GPMode mode_from_name(const std::string& m) {
    if (m == "semisimple") return GPMode::semisimple;
    if (m == "selfinjective") return GPMode::selfinjective;
    if (m == "bounded") return GPMode::bounded;
    return GPMode::automatic;
}

int run_check_gp(const std::string& file, const std::string& rep, const std::string& mode,
                 int depth, std::uint64_t seed, const Globals& g) {
    Timer t;
    InputData s = load(file, g);
    const LambdaRep& x = s.rep_by_name(rep);
    GPConfig cfg;
    cfg.mode = mode_from_name(mode);
    cfg.depth = depth;
    cfg.seed = seed;
    CrossCheck cc = cross_validate_gp(s.context, x, cfg);
    json j = base_report("check-gp");
    j["verdict"] = gp_name(cc.consensus);
    j["rep"] = rep;
    j["seed"] = seed;
    j["depth"] = depth;
    j["reason"] = cc.direct.reason;
    j["cross_check"] = {{"direct", gp_name(cc.direct.verdict)},
                        {"inductive", gp_name(cc.inductive.verdict)},
                        {"homological", gp_name(cc.homological.verdict)}};
    for (const MonicWitness& w : cc.direct.monic.witnesses)
        j["witnesses"].push_back(witness_json(s.context, w));
    if (cc.direct.branches) {
        const BranchGPReport& b = *cc.direct.branches;
        json pv = json::array();
        for (std::size_t v = 0; v < b.branch.size(); ++v)
            pv.push_back({{"vertex", int(v) + 1},
                          {"branch", gp_name(b.branch[v].verdict)},
                          {"quotient", gp_name(b.quotient[v].verdict)},
                          {"quotient_dim", b.quotient_dims[v]}});
        j["per_vertex"] = pv;
    }
    emit(j, g, t.ms());
    switch (cc.consensus) {
        case GP::gp: return 0;
        case GP::not_gp: return 1;
        default: return 3;
    }
}

int run_construct_tensor(const std::string& file, const std::string& module_name,
                         int vertex, const std::string& out_path, std::string as_name,
                         const Globals& g) {
    Timer t;
    InputData s = load(file, g);
    const AModule& m = s.module_by_name(module_name);
    if (vertex < 1 || vertex > s.context.vertex_count())
        throw ValidationError("vertex " + std::to_string(vertex) + " is outside 1.." +
                              std::to_string(s.context.vertex_count()));
    TensorRep tr = tensor_pv(s.context, m, vertex);
    if (as_name.empty()) as_name = module_name + "_at_" + std::to_string(vertex);
    s.reps.push_back({as_name, std::move(tr.rep)});
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write output file '" + out_path + "'");
    out << print_input(s);
    json j = base_report("construct");
    j["verdict"] = "written";
    j["rep"] = as_name;
    j["output"] = out_path;
    json dims = json::array();
    for (int v = 1; v <= s.context.vertex_count(); ++v)
        dims.push_back(s.reps.back().rep.at(v).total_dim());
    j["branch_dims"] = dims;
    emit(j, g, t.ms());
    return 0;
}

int run_suite(const std::string& file, const std::string& kind, int samples,
              std::uint64_t seed, const Globals& g) {
    Timer t;
    InputData s = load(file, g);
    SuiteReport r = run_suite_kind(s.context, kind, samples, seed, g.jobs);
    json j = base_report("suite");
    j["verdict"] = r.failures == 0 ? "ok" : "failed";
    j["kind"] = r.kind;
    j["seed"] = r.seed;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    j["skipped"] = r.skipped;
    j["notes"] = r.notes;
    emit(j, g, t.ms());
    return r.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for quiver representations with monomial coefficient "
                 "algebras: monic conditions, Gorenstein-projectivity, constructions "
                 "and randomized property suites"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--report", g.report, "report format on stdout")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--field", g.field_p,
                   "override the input's field declaration with the prime P");
    app.add_option("--jobs", g.jobs, "worker threads for suites (0 = all cores)")
        ->capture_default_str();

    std::string file, rep_name, module_name, out_path, as_name;
    std::string mode = "auto", kind;
    int depth = 12, vertex = 1, samples = 100;
    std::uint64_t seed = 1;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate an input file");
    validate->add_option("file", file, "input file")->required();

    CLI::App* monic = app.add_subcommand("check-monic", "decide the monic conditions");
    monic->add_option("file", file, "input file")->required();
    monic->add_option("--rep", rep_name, "rep section to check")->required();

    CLI::App* gp = app.add_subcommand(
        "check-gp", "decide Gorenstein-projectivity (three independent deciders)");
    gp->add_option("file", file, "input file")->required();
    gp->add_option("--rep", rep_name, "rep section to check")->required();
    gp->add_option("--mode", mode, "coefficient-algebra strategy")
        ->check(CLI::IsMember({"auto", "semisimple", "selfinjective", "bounded"}))
        ->capture_default_str();
    gp->add_option("--depth", depth, "resolution depth for the bounded strategy")
        ->capture_default_str();
    gp->add_option("--seed", seed, "seed for randomized isomorphism probes")
        ->capture_default_str();

    CLI::App* construct = app.add_subcommand("construct", "build new representations");
    construct->require_subcommand(1);
    CLI::App* tensor = construct->add_subcommand(
        "tensor", "coefficient module tensored with the projective at a vertex");
    tensor->add_option("file", file, "input file")->required();
    tensor->add_option("--module", module_name, "amodule section to tensor")->required();
    tensor->add_option("--vertex", vertex, "quiver vertex")->required();
    tensor->add_option("-o,--output", out_path, "output file")->required();
    tensor->add_option("--as", as_name, "name for the new rep section");

    CLI::App* suite = app.add_subcommand("suite", "randomized property suites");
    suite->add_option("file", file, "input file giving the context")->required();
    suite->add_option("--kind", kind, "which suite to run")
        ->check(CLI::IsMember({"closure", "corollary", "kernels", "adjunction"}))
        ->required();
    suite->add_option("--samples", samples, "number of samples")->capture_default_str();
    suite->add_option("--seed", seed, "master seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(file, g);
        if (monic->parsed()) return run_check_monic(file, rep_name, g);
        if (gp->parsed()) return run_check_gp(file, rep_name, mode, depth, seed, g);
        if (construct->parsed() && tensor->parsed())
            return run_construct_tensor(file, module_name, vertex, out_path, as_name, g);
        if (suite->parsed()) return run_suite(file, kind, samples, seed, g);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
                  << e.column << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
