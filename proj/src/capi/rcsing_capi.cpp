#include "rcsing.h"

#include "core/report.hpp"
#include "core/textio.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

using namespace rcs;

struct rcsing_analysis {
    AnalysisReport report;
    AnalysisOptions opts;
    bool verified = false;
    // Cached render buffers so const char* accessors stay valid.
    std::string json_buf, text_buf, orders_buf;
};

namespace {

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg)
{
    if (err) *err = dup_string(msg);
}

AnalysisOptions convert(const rcsing_options* o)
{
    AnalysisOptions opts;
    if (o) {
        if (o->max_depth > 0) opts.max_depth = o->max_depth;
        if (o->coord_bound > 0) opts.coord_bound = o->coord_bound;
        opts.isolate_roots = o->isolate_roots != 0;
    }
    return opts;
}

rcsing_status run_guarded(char** err, const std::function<rcsing_status()>& fn)
{
    try {
        return fn();
    } catch (const ParseError& e) {
        set_err(err, e.what());
        return RCSING_ERR_PARSE;
    } catch (const IncompleteError& e) {
        set_err(err, e.what());
        return RCSING_ERR_INCOMPLETE;
    } catch (const MathError& e) {
        set_err(err, e.what());
        return RCSING_ERR_DEGENERATE;
    } catch (const std::exception& e) {
        set_err(err, std::string("internal error: ") + e.what());
        return RCSING_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* rcsing_version(void) { return "0.1.0"; }

rcsing_status rcsing_analyze(const char* curve_spec, const rcsing_options* opts,
                             rcsing_analysis** out, char** err)
{
    if (!curve_spec || !out) {
        set_err(err, "null argument");
        return RCSING_ERR_NULLARG;
    }
    *out = nullptr;
    return run_guarded(err, [&]() -> rcsing_status {
        auto* handle = new rcsing_analysis;
        handle->opts = convert(opts);
        try {
            CurveSpec curve = parse_curve(curve_spec);
            handle->report = analyze(curve, handle->opts);
        } catch (...) {
            delete handle;
            throw;
        }
        *out = handle;
        return handle->report.incomplete ? RCSING_ERR_INCOMPLETE : RCSING_OK;
    });
}

rcsing_status rcsing_run(const char* command, const char* curve_spec,
                         const rcsing_options* opts, const char* format, char** out,
                         char** err)
{
    if (!command || !curve_spec || !out) {
        set_err(err, "null argument");
        return RCSING_ERR_NULLARG;
    }
    *out = nullptr;
    std::string cmd = command;
    std::string fmt = format ? format : "text";
    if (fmt != "json" && fmt != "text") {
        set_err(err, "format must be json or text");
        return RCSING_ERR_BADCOMMAND;
    }
    bool json = fmt == "json";
    static const char* known[] = {"mubasis",       "implicit", "smith",
                                  "singularities", "tree",     "verify",
                                  "compare-matrices"};
    bool ok_cmd = false;
    for (const char* k : known) ok_cmd = ok_cmd || cmd == k;
    if (!ok_cmd) {
        set_err(err, "unknown command: " + cmd);
        return RCSING_ERR_BADCOMMAND;
    }

    return run_guarded(err, [&]() -> rcsing_status {
        AnalysisOptions aopts = convert(opts);
        CurveSpec curve = parse_curve(curve_spec);

        if (cmd == "mubasis") {
            MuBasis basis = compute_mubasis(curve);
            *out = dup_string(json ? mubasis_to_json(curve, basis)
                                   : mubasis_to_text(curve, basis));
            return RCSING_OK;
        }
        if (cmd == "compare-matrices") {
            MuBasis basis = compute_mubasis(curve);
            FGPair fg = build_FG(curve, basis);
            MainSmith ms = main_smith(curve, basis, fg);
            CheckReport rep = compare_four_matrices(curve, basis, ms);
            *out = dup_string(json ? compare_to_json(rep) : compare_to_text(rep));
            return rep.ok ? RCSING_OK : RCSING_ERR_VERIFY;
        }

        AnalysisReport report = analyze(curve, aopts);
        if (cmd == "implicit")
            *out = dup_string(json ? implicit_to_json(report) : implicit_to_text(report));
        else if (cmd == "smith")
            *out = dup_string(json ? smith_to_json(report) : smith_to_text(report));
        else if (cmd == "singularities")
            *out = dup_string(json ? report_to_json(report) : report_to_text(report));
        else if (cmd == "tree")
            *out = dup_string(json ? report_to_json(report) : tree_to_text(report));
        else if (cmd == "verify") {
            run_all_verifications(report, aopts);
            bool all = true;
            for (const auto& v : report.verifications) all = all && v.ok;
            *out = dup_string(json ? verifications_to_json(report)
                                   : verifications_to_text(report));
            if (!all) return RCSING_ERR_VERIFY;
        }
        return report.incomplete ? RCSING_ERR_INCOMPLETE : RCSING_OK;
    });
}

const char* rcsing_report_json(rcsing_analysis* a)
{
    if (!a) return nullptr;
    a->json_buf = report_to_json(a->report);
    return a->json_buf.c_str();
}

const char* rcsing_report_text(rcsing_analysis* a)
{
    if (!a) return nullptr;
    a->text_buf = report_to_text(a->report);
    return a->text_buf.c_str();
}

int rcsing_curve_degree(const rcsing_analysis* a) { return a ? a->report.curve.n : -1; }
int rcsing_mu(const rcsing_analysis* a) { return a ? a->report.basis.mu : -1; }

int rcsing_singularity_count(const rcsing_analysis* a)
{
    return a ? static_cast<int>(a->report.tree.size()) : -1;
}

const char* rcsing_orders(rcsing_analysis* a)
{
    if (!a) return nullptr;
    a->orders_buf.clear();
    for (const auto& n : a->report.tree) {
        if (!a->orders_buf.empty()) a->orders_buf += ",";
        a->orders_buf += std::to_string(n.order);
    }
    return a->orders_buf.c_str();
}

int rcsing_budget_ok(const rcsing_analysis* a)
{
    return a ? (a->report.budget_ok ? 1 : 0) : 0;
}

int rcsing_is_incomplete(const rcsing_analysis* a)
{
    return a ? (a->report.incomplete ? 1 : 0) : 0;
}

rcsing_status rcsing_verify(rcsing_analysis* a)
{
    if (!a) return RCSING_ERR_NULLARG;
    return run_guarded(nullptr, [&]() -> rcsing_status {
        run_all_verifications(a->report, a->opts);
        a->verified = true;
        for (const auto& v : a->report.verifications)
            if (!v.ok) return RCSING_ERR_VERIFY;
        return RCSING_OK;
    });
}

void rcsing_analysis_free(rcsing_analysis* a) { delete a; }

void rcsing_string_free(char* s) { std::free(s); }

} // extern "C"
