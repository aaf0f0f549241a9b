// petal-kit: petal presentations of torus knots, grid diagrams, and
// polynomial invariants, over a line-oriented JSON interface.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "petalkit/braid.hpp"
#include "petalkit/grid.hpp"
#include "petalkit/invariants.hpp"
#include "petalkit/json_io.hpp"
#include "petalkit/petal.hpp"
#include "petalkit/svg.hpp"

namespace {

using petalkit::io::json;

struct Options {
    std::string in_path;
    std::string out_path;
    bool report = false;  // --json: wrap the payload in a RunReport
    int max_crossings = 24;
};

// A check is (name, pass/fail, detail).
json check_entry(const std::string& name, bool pass, const std::string& detail) {
    return json::array({name, pass ? "pass" : "fail", detail});
}

struct CommandResult {
    json inputs = json::object();
    json outputs = json::object();
    json checks = json::array();
    bool all_pass() const {
        for (const auto& c : checks)
            if (c[1] != "pass") return false;
        return true;
    }
};

std::string read_input(const Options& opt) {
    if (!opt.in_path.empty()) {
        std::ifstream f(opt.in_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open input file: " + opt.in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

json parse_input(const Options& opt) {
    try {
        return json::parse(read_input(opt));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

int odd_r_to_n(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("--r must be an odd integer >= 3");
    return (r - 1) / 2;
}

// ---- subcommand bodies -------------------------------------------------

CommandResult run_petal_gen(int r) {
    CommandResult res;
    res.inputs = {{"r", r}};
    res.outputs = petalkit::io::to_json(petalkit::petal::torus_petal_permutation(odd_r_to_n(r)));
    return res;
}

CommandResult run_verify_lemma(int n) {
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    CommandResult res;
    res.inputs = {{"n", n}};
    bool all = true;
    for (const auto& c : petalkit::braid::verify_lemma_checks(n)) {
        res.checks.push_back(check_entry(c.name, c.pass, "braid word equality in B_" +
                                                             std::to_string(2 * n + 1)));
        all = all && c.pass;
    }
    res.outputs = {{"n", n}, {"ok", all}};
    return res;
}

CommandResult run_theorem(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("--r must be an odd integer >= 3");
    CommandResult res;
    res.inputs = {{"r", r}};
    auto tr = petalkit::petal::theorem_check(r);
    res.outputs = {{"lower", tr.lower}, {"upper", tr.upper}, {"verified", tr.verified}};
    res.checks.push_back(check_entry(
        "petal_number", tr.verified,
        "lower bound meets the constructed presentation at 2r+3 = " + std::to_string(2 * r + 3)));
    return res;
}

petalkit::grid::GridDiagram grid_from_source(const std::string& source, const json& in) {
    if (source == "grid") return petalkit::io::grid_from_json(in);
    if (source == "petal")
        return petalkit::petal::petal_to_grid(petalkit::io::petal_from_json(in));
    throw std::invalid_argument("source must be grid or petal for this operation");
}

CommandResult run_alexander(const std::string& source, const Options& opt) {
    CommandResult res;
    json in = parse_input(opt);
    res.inputs = in;
    petalkit::invariants::LaurentPoly alex;
    if (source == "braid") {
        alex = petalkit::braid::alexander_from_braid(petalkit::io::braid_from_json(in));
    } else {
        alex = petalkit::grid::alexander_from_grid(grid_from_source(source, in));
    }
    res.outputs = petalkit::io::to_json(alex, "t");
    return res;
}

CommandResult run_jones(const std::string& source, const Options& opt) {
    CommandResult res;
    json in = parse_input(opt);
    res.inputs = in;
    petalkit::grid::PDCode pd;
    if (source == "braid") {
        pd = petalkit::braid::closure_pd(petalkit::io::braid_from_json(in));
    } else {
        pd = petalkit::grid::grid_to_pd(grid_from_source(source, in));
    }
    res.outputs = petalkit::io::to_json(petalkit::invariants::jones(pd, opt.max_crossings), "A");
    return res;
}

CommandResult run_render(const std::string& source, const Options& opt) {
    if (opt.out_path.empty())
        throw std::invalid_argument("render requires --out <file.svg>");
    CommandResult res;
    json in = parse_input(opt);
    res.inputs = in;
    std::string svg;
    if (source == "grid") {
        svg = petalkit::render::grid_svg(petalkit::io::grid_from_json(in));
    } else if (source == "petal") {
        svg = petalkit::render::petal_svg(petalkit::io::petal_from_json(in));
    } else {
        throw std::invalid_argument("render supports sources grid and petal");
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    f << svg;
    res.outputs = {{"out", opt.out_path}, {"bytes", svg.size()}};
    return res;
}

CommandResult run_lower_bound(int alpha, int r, int s) {
    CommandResult res;
    if (alpha > 0) {
        if (r > 0 || s > 0)
            throw std::invalid_argument("give either --alpha or --r/--s, not both");
        res.inputs = {{"alpha", alpha}};
    } else {
        if (r <= 0) throw std::invalid_argument("give --alpha or --r");
        if (s <= 0) s = r + 2;
        alpha = petalkit::petal::arc_index_torus(r, s);
        res.inputs = {{"r", r}, {"s", s}};
    }
    res.outputs = {{"alpha", alpha}, {"lower", petalkit::petal::petal_lower_bound(alpha)}};
    return res;
}

// ---- output plumbing ---------------------------------------------------

void emit(const std::string& command, const CommandResult& res, const Options& opt) {
    json doc;
    if (opt.report) {
        doc = {{"command", command},
               {"inputs", res.inputs},
               {"outputs", res.outputs},
               {"checks", res.checks}};
    } else {
        doc = res.outputs;
    }
    std::string line = doc.dump();
    // --out holds the SVG for render; every other command may redirect its
    // payload there instead of stdout.
    if (!opt.out_path.empty() && command != "render") {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.out_path);
        f << line << "\n";
    } else {
        std::cout << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"petal presentations of torus knots, grid diagrams, and invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--in", opt.in_path, "read the JSON input from a file instead of stdin");
    app.add_option("--out", opt.out_path, "write the output (SVG for render) to a file");
    app.add_flag("--json", opt.report, "wrap the payload in a full run report");
    app.add_option("--max-crossings", opt.max_crossings,
                   "largest diagram the Kauffman bracket will attempt")
        ->capture_default_str();

    int r = 0, n = 0, alpha = 0, s = 0;
    std::string source;

    auto* c_gen = app.add_subcommand("petal-gen", "petal permutation of the torus knot T(r,r+2)");
    c_gen->add_option("--r", r, "odd torus parameter r >= 3")->required();

    auto* c_lemma = app.add_subcommand("verify-lemma", "mechanized conjugation lemma in B_{2n+1}");
    c_lemma->add_option("--n", n, "half the braid index minus one")->required();

    auto* c_thm = app.add_subcommand("theorem", "petal number of T(r,r+2): bound meets construction");
    c_thm->add_option("--r", r, "odd torus parameter r >= 3")->required();

    auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial from braid, grid, or petal");
    c_alex->add_option("--source", source, "braid | grid | petal")->required();

    auto* c_jones = app.add_subcommand("jones", "Jones polynomial (bracket variable A)");
    c_jones->add_option("--source", source, "braid | grid | petal")->required();

    auto* c_render = app.add_subcommand("render", "SVG picture of a grid or petal diagram");
    c_render->add_option("--source", source, "grid | petal")->required();

    auto* c_bound = app.add_subcommand("lower-bound", "petal number lower bound from arc index");
    c_bound->add_option("--alpha", alpha, "arc index");
    c_bound->add_option("--r", r, "torus parameter r");
    c_bound->add_option("--s", s, "torus parameter s (default r+2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        CommandResult res;
        std::string command;
        if (app.got_subcommand(c_gen)) {
            command = "petal-gen";
            res = run_petal_gen(r);
        } else if (app.got_subcommand(c_lemma)) {
            command = "verify-lemma";
            res = run_verify_lemma(n);
        } else if (app.got_subcommand(c_thm)) {
            command = "theorem";
            res = run_theorem(r);
        } else if (app.got_subcommand(c_alex)) {
            command = "alexander";
            res = run_alexander(source, opt);
        } else if (app.got_subcommand(c_jones)) {
            command = "jones";
            res = run_jones(source, opt);
        } else if (app.got_subcommand(c_render)) {
            command = "render";
            res = run_render(source, opt);
        } else {
            command = "lower-bound";
            res = run_lower_bound(alpha, r, s);
        }
        emit(command, res, opt);
        return res.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
