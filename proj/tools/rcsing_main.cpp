// rcsing command line: singularity analysis of rational planar curves.
// Thin shell over the C API in rcsing.h.

#include <rcsing.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int map_status(rcsing_status st)
{
    switch (st) {
        case RCSING_OK: return 0;
        case RCSING_ERR_PARSE:
        case RCSING_ERR_DEGENERATE:
        case RCSING_ERR_NULLARG:
        case RCSING_ERR_BADCOMMAND: return 1;
        case RCSING_ERR_VERIFY: return 2;
        case RCSING_ERR_INCOMPLETE: return 3;
        default: return 10;
    }
}

std::string load_input(const std::string& input)
{
    std::error_code ec;
    if (std::filesystem::exists(input, ec)) {
        std::ifstream in(input);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return input; // inline curve spec
}

struct BatchRow {
    std::string file;
    std::string status;
    int degree = 0, mu = 0;
    std::string orders;
    std::string budget;
    std::string error;
};

int run_batch(const std::string& dir, const rcsing_options& opts, const std::string& format)
{
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    }
    if (ec) {
        std::cerr << "cannot read corpus directory: " << dir << "\n";
        return 1;
    }
    std::sort(files.begin(), files.end());

    std::vector<BatchRow> rows;
    nlohmann::ordered_json jreports = nlohmann::ordered_json::array();
    for (const auto& f : files) {
        BatchRow row;
        row.file = f.filename().string();
        std::ifstream in(f);
        std::ostringstream buf;
        buf << in.rdbuf();
        rcsing_analysis* a = nullptr;
        char* err = nullptr;
        rcsing_status st = rcsing_analyze(buf.str().c_str(), &opts, &a, &err);
        if (a) {
            row.status = st == RCSING_OK ? "ok" : "incomplete";
            row.degree = rcsing_curve_degree(a);
            row.mu = rcsing_mu(a);
            row.orders = rcsing_orders(a);
            row.budget = rcsing_budget_ok(a) ? "ok" : "mismatch";
            if (format == "json") {
                nlohmann::ordered_json one;
                one["file"] = row.file;
                one["report"] = nlohmann::ordered_json::parse(rcsing_report_json(a));
                jreports.push_back(one);
            } else {
                std::cout << "== " << row.file << "\n" << rcsing_report_text(a);
            }
            rcsing_analysis_free(a);
        } else {
            row.status = "failed";
            row.error = err ? err : "unknown error";
            if (format == "json") {
                nlohmann::ordered_json one;
                one["file"] = row.file;
                one["error"] = row.error;
                jreports.push_back(one);
            } else {
                std::cout << "== " << row.file << "\nerror: " << row.error << "\n";
            }
        }
        if (err) rcsing_string_free(err);
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json jr;
            jr["file"] = r.file;
            jr["status"] = r.status;
            if (r.status != "failed") {
                jr["degree"] = r.degree;
                jr["mu"] = r.mu;
                jr["orders"] = r.orders;
                jr["budget"] = r.budget;
            } else {
                jr["error"] = r.error;
            }
            table.push_back(jr);
        }
        nlohmann::ordered_json out;
        out["curves"] = jreports;
        out["table"] = table;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "\nfile\tstatus\tdegree\tmu\torders\tbudget\n";
        for (const auto& r : rows) {
            std::cout << r.file << "\t" << r.status;
            if (r.status != "failed")
                std::cout << "\t" << r.degree << "\t" << r.mu << "\t"
                          << (r.orders.empty() ? "-" : r.orders) << "\t" << r.budget;
            else
                std::cout << "\t-\t-\t-\t-\t(" << r.error << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rcsing: exact singularities of rational planar curves"};
    std::string input, command = "singularities", format = "text", corpus;
    int max_depth = 0, coord_bound = 0;
    bool isolate = false;

    app.add_option("--input", input,
                   "curve file or inline spec (JSON {degree,a,b,c} or \"a; b; c\")");
    app.add_option("--command", command, "one of: mubasis, implicit, smith, singularities, tree, verify, compare-matrices")
        ->check(CLI::IsMember({"mubasis", "implicit", "smith", "singularities", "tree",
                               "verify", "compare-matrices"}));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-depth", max_depth, "blow-up recursion cap (default 8)");
    app.add_option("--coord-bound", coord_bound, "coordinate search bound (default 20)");
    app.add_flag("--isolate-roots", isolate, "report real isolating intervals");
    app.add_option("--corpus", corpus, "directory of curve JSON files (batch mode)");

    CLI11_PARSE(app, argc, argv);

    rcsing_options opts{};
    opts.max_depth = max_depth;
    opts.coord_bound = coord_bound;
    opts.isolate_roots = isolate ? 1 : 0;

    if (!corpus.empty()) return run_batch(corpus, opts, format);

    if (input.empty()) {
        std::cerr << "error: --input (or --corpus) is required\n";
        return 1;
    }

    std::string spec = load_input(input);
    char* out = nullptr;
    char* err = nullptr;
    rcsing_status st =
        rcsing_run(command.c_str(), spec.c_str(), &opts, format.c_str(), &out, &err);
    if (out) {
        std::cout << out;
        rcsing_string_free(out);
    }
    if (err) {
        std::cerr << "error: " << err << "\n";
        rcsing_string_free(err);
    }
    return map_status(st);
}
