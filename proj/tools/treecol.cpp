#include "treecol/coloring.hpp"
#include "treecol/errors.hpp"
#include "treecol/extremal.hpp"
#include "treecol/labeling.hpp"
#include "treecol/survey.hpp"
#include "treecol/tree.hpp"
#include "treecol/walk.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;

treecol::Tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw treecol::ParseError("cannot open tree file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return treecol::parse_tree(buffer.str());
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw treecol::Error("cannot open output file: " + path);
    out << content;
}

int default_jobs() {
    if (const char* env = std::getenv("TREECOL_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int cmd_distance(const std::string& tree_file, const std::string& f_str,
                 const std::string& g_str, const std::string& method) {
    treecol::Tree t = load_tree(tree_file);
    treecol::Coloring f = treecol::Coloring::from_string(f_str);
    treecol::Coloring g = treecol::Coloring::from_string(g_str);
    std::optional<long long> by_labeling, by_bfs;
    if (method == "labeling" || method == "both") {
        by_labeling = treecol::labeling_distance(t, f, g);
        std::cout << "method=labeling distance=" << *by_labeling << "\n";
    }
    if (method == "bfs" || method == "both") {
        by_bfs = treecol::bfs_distance(t, f, g);
        std::cout << "method=bfs distance=" << *by_bfs << "\n";
    }
    if (by_labeling && by_bfs && *by_labeling != *by_bfs) {
        std::cerr << "error: methods disagree (" << *by_labeling << " vs " << *by_bfs << ")\n";
        return kExitAssertion;
    }
    return kExitOk;
}

int cmd_diameter(const std::string& tree_file, const std::string& method, int jobs) {
    treecol::Tree t = load_tree(tree_file);
    treecol::DiameterResult result;
    if (method == "search") {
        result = treecol::max_balanced_labeling(t);
    } else if (method == "bfs") {
        treecol::OracleDiameter od = treecol::oracle_diameter(t, jobs);
        result.method = treecol::DiameterMethod::oracle;
        result.value = od.value;
        result.witness = treecol::balance(treecol::lift(t, od.from, od.to));
        result.witness_pair = std::pair(od.from, od.to);
    } else { // formula
        result.method = treecol::DiameterMethod::formula;
        int n = t.n();
        if (treecol::is_star(t)) {
            result.value = treecol::min_diameter_formula(n);
            result.witness = treecol::two_level_labeling(t);
        } else if (treecol::is_path(t) && n >= 4) {
            result.value = treecol::path_diameter_formula(n);
            result.witness = treecol::sequential_path_labeling(n);
        } else if (treecol::is_nearly_symmetric_double_star(t)) {
            result.value = treecol::min_diameter_formula(n);
            result.witness = treecol::two_level_labeling(t);
        } else {
            throw treecol::InvalidParameter(
                "no closed form for this tree; use --method search or bfs");
        }
        result.witness_pair = treecol::realize(t, result.witness);
    }
    std::cout << "diameter " << result.value << "\n";
    std::cout << "method " << treecol::to_string(result.method) << "\n";
    std::cout << "witness " << result.witness.to_string() << "\n";
    if (result.witness_pair) {
        std::cout << "pair " << result.witness_pair->first.to_string() << " "
                  << result.witness_pair->second.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_walk(const std::string& tree_file, const std::string& f_str, const std::string& g_str,
             const std::string& out_path) {
    treecol::Tree t = load_tree(tree_file);
    treecol::Coloring f = treecol::Coloring::from_string(f_str);
    treecol::Coloring g = treecol::Coloring::from_string(g_str);
    treecol::Labeling h = treecol::balance(treecol::lift(t, f, g));
    treecol::Walk walk = treecol::build_walk(t, f, h);
    treecol::WalkReport report = treecol::validate_walk(t, walk);
    if (!report.valid || !(report.end == g)) {
        std::cerr << "error: constructed walk failed validation\n";
        return kExitValidation;
    }
    write_output(out_path, walk.serialize());
    std::cerr << "walk of length " << walk.length() << "\n";
    return kExitOk;
}

int cmd_survey(int n, int jobs, const std::string& format, bool assert_extremal,
               const std::string& out_path) {
    treecol::SurveyOptions options;
    options.jobs = jobs;
    auto records = treecol::run_survey(n, options);
    std::string content =
        format == "json" ? treecol::records_to_json(records) : treecol::records_to_csv(records);
    write_output(out_path, content);
    if (assert_extremal) {
        treecol::ExtremalClassification c;
        c.n = n;
        c.max_value = records.front().diameter;
        c.min_value = records.front().diameter;
        for (const auto& r : records) {
            c.max_value = std::max(c.max_value, r.diameter);
            c.min_value = std::min(c.min_value, r.diameter);
        }
        for (const auto& r : records) {
            if (r.is_max) c.max_trees.insert(treecol::CanonicalCode{r.code});
            if (r.is_min) c.min_trees.insert(treecol::CanonicalCode{r.code});
        }
        if (auto problem = treecol::check_extremal_claim(c)) {
            std::cerr << "extremal assertion failed: " << *problem << "\n";
            return kExitAssertion;
        }
        std::cerr << "extremal assertion holds for n=" << n << "\n";
    }
    return kExitOk;
}

int cmd_golden(const std::string& file, const std::string& method, bool write, int jobs) {
    auto records = treecol::golden_survey(method == "bfs", jobs);
    std::string actual = treecol::records_to_csv(records);
    if (write) {
        write_output(file, actual);
        std::cerr << "wrote " << records.size() << " golden rows to " << file << "\n";
        return kExitOk;
    }
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open golden file " << file << "\n";
        return kExitValidation;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto diffs = treecol::diff_lines(buffer.str(), actual);
    if (!diffs.empty()) {
        for (const auto& d : diffs) std::cerr << d << "\n";
        std::cerr << "golden mismatch: " << diffs.size() << " line(s)\n";
        return kExitValidation;
    }
    std::cout << "golden ok: " << records.size() << " rows match\n";
    return kExitOk;
}

int cmd_gen(const std::string& family, const std::vector<int>& args, const std::string& out_path) {
    treecol::Tree t = [&] {
        if (family == "path" && args.size() == 1) return treecol::path(args[0]);
        if (family == "star" && args.size() == 1) return treecol::star(args[0]);
        if (family == "double-star" && args.size() == 2) {
            return treecol::double_star(args[0], args[1]);
        }
        throw treecol::InvalidParameter(
            "expected: gen path N | gen star N | gen double-star A B");
    }();
    write_output(out_path, t.to_edge_list());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 3-coloring reconfiguration on trees"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --jobs after the subcommand name
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (default: TREECOL_JOBS or hardware)");

    std::string tree_file, f_str, g_str, out_path;
    std::string method;

    auto* distance = app.add_subcommand("distance", "distance between two colorings");
    distance->add_option("tree", tree_file, "edge-list file")->required();
    distance->add_option("-f", f_str, "start coloring, e.g. 010")->required();
    distance->add_option("-g", g_str, "end coloring")->required();
    std::string dist_method = "both";
    distance->add_option("--method", dist_method, "labeling|bfs|both")
        ->check(CLI::IsMember({"labeling", "bfs", "both"}));

    auto* diameter = app.add_subcommand("diameter", "recoloring diameter of a tree");
    diameter->add_option("tree", tree_file, "edge-list file")->required();
    std::string diam_method = "search";
    diameter->add_option("--method", diam_method, "search|bfs|formula")
        ->check(CLI::IsMember({"search", "bfs", "formula"}));

    auto* walk = app.add_subcommand("walk", "emit a shortest recoloring walk");
    walk->add_option("tree", tree_file, "edge-list file")->required();
    walk->add_option("-f", f_str, "start coloring")->required();
    walk->add_option("-g", g_str, "end coloring")->required();
    walk->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* survey = app.add_subcommand("survey", "diameters of all trees on n vertices");
    int survey_n = 0;
    survey->add_option("-n", survey_n, "vertex count")->required();
    std::string format = "csv";
    survey->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    bool assert_extremal = false;
    survey->add_flag("--assert-theorem1", assert_extremal,
                     "fail unless path is the unique max and star/double stars the min (n >= 7)");
    survey->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* golden = app.add_subcommand("golden", "check the small-tree reference table");
    std::string golden_file = "data/golden/appendix_a.csv";
    golden->add_option("--file", golden_file, "golden csv path");
    std::string golden_method = "search";
    golden->add_option("--method", golden_method, "search|bfs (bfs re-derives every diameter)")
        ->check(CLI::IsMember({"search", "bfs"}));
    bool golden_write = false;
    golden->add_flag("--write", golden_write, "rewrite the golden file instead of checking");

    auto* gen = app.add_subcommand("gen", "emit an edge-list file for a named family");
    std::string family;
    std::vector<int> family_args;
    gen->add_option("family", family, "path|star|double-star")->required();
    gen->add_option("args", family_args, "family parameters");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(distance)) {
            return cmd_distance(tree_file, f_str, g_str, dist_method);
        }
        if (app.got_subcommand(diameter)) {
            return cmd_diameter(tree_file, diam_method, jobs);
        }
        if (app.got_subcommand(walk)) {
            return cmd_walk(tree_file, f_str, g_str, out_path);
        }
        if (app.got_subcommand(survey)) {
            if (assert_extremal && survey_n < 7) {
                std::cerr << "error: --assert-theorem1 needs n >= 7\n";
                return kExitUsage;
            }
            return cmd_survey(survey_n, jobs, format, assert_extremal, out_path);
        }
        if (app.got_subcommand(golden)) {
            return cmd_golden(golden_file, golden_method, golden_write, jobs);
        }
        if (app.got_subcommand(gen)) {
            return cmd_gen(family, family_args, out_path);
        }
    } catch (const treecol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
