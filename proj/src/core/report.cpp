#include "core/report.hpp"

#include <json.hpp>

#include <sstream>

namespace rcs {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string param_poly(const HPoly& f) { return f.to_string("t", "v"); }
std::string smith_poly(const HPoly& f)
{
    return f.is_zero() ? "0" : f.to_string("s", "u");
}

OrderedJson point_json(const std::array<Rational, 3>& p)
{
    return OrderedJson::array({rat_to_string(p[0]), rat_to_string(p[1]), rat_to_string(p[2])});
}

OrderedJson node_json(const SingularityNode& n)
{
    OrderedJson j;
    j["level"] = n.level;
    j["order"] = n.order;
    j["formula"] = param_poly(n.formula);
    if (n.has_point) j["point"] = point_json(n.point);
    if (!n.has_point) j["atomic_class"] = true;
    j["ancestor_order"] = n.ancestor_order;
    j["attributed_by_blowup"] = n.attributed_by_blowup;
    if (!n.intervals.empty() || n.parameter_at_infinity) {
        OrderedJson iv = OrderedJson::array();
        for (const Interval& i : n.intervals)
            iv.push_back(OrderedJson::array({rat_to_string(i.lo), rat_to_string(i.hi)}));
        j["intervals"] = iv;
        j["parameter_at_infinity"] = n.parameter_at_infinity;
    }
    OrderedJson ch = OrderedJson::array();
    for (const auto& c : n.children) ch.push_back(node_json(c));
    j["children"] = ch;
    return j;
}

OrderedJson curve_json(const CurveSpec& c)
{
    OrderedJson j;
    j["degree"] = c.n;
    j["a"] = param_poly(c.a);
    j["b"] = param_poly(c.b);
    j["c"] = param_poly(c.c);
    return j;
}

OrderedJson report_json_object(const AnalysisReport& r)
{
    OrderedJson j;
    j["curve"] = curve_json(r.curve);
    j["mu"] = r.basis.mu;
    OrderedJson smith = OrderedJson::array();
    for (const HPoly& f : r.ms.smith.factors) smith.push_back(smith_poly(f));
    j["smith"] = smith;
    OrderedJson dchain = OrderedJson::array();
    for (size_t k = 2; k < r.ms.d_by_k.size(); ++k)
        dchain.push_back(smith_poly(r.ms.d_by_k[k]));
    j["d_chain"] = dchain;
    OrderedJson sing = OrderedJson::array();
    for (const auto& n : r.tree) sing.push_back(node_json(n));
    j["singularities"] = sing;
    j["budget"] = OrderedJson{{"lhs", r.budget_lhs}, {"rhs", r.budget_rhs}, {"ok", r.budget_ok}};
    OrderedJson ver = OrderedJson::array();
    for (const auto& v : r.verifications)
        ver.push_back(OrderedJson{{"name", v.name},
                                  {"status", v.ok ? "pass" : "fail"},
                                  {"detail", v.detail}});
    j["verifications"] = ver;
    j["incomplete"] = r.incomplete;
    OrderedJson notes = OrderedJson::array();
    for (const auto& s : r.incompleteness) notes.push_back(s);
    j["notes"] = notes;
    return j;
}

void node_text(std::ostringstream& os, const SingularityNode& n, int indent)
{
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    os << pad << (n.level == 0 ? "singularity" : "infinitely near") << " (level " << n.level
       << "): order " << n.order << ", formula " << param_poly(n.formula);
    if (n.has_point)
        os << ", point (" << rat_to_string(n.point[0]) << ", " << rat_to_string(n.point[1])
           << ", " << rat_to_string(n.point[2]) << ")";
    if (!n.has_point && n.level == 0) os << ", irrational class";
    if (!n.attributed_by_blowup) os << " [snf-only]";
    os << "\n";
    if (!n.intervals.empty() || n.parameter_at_infinity) {
        os << pad << "  real parameters: ";
        bool first = true;
        for (const Interval& iv : n.intervals) {
            if (!first) os << ", ";
            first = false;
            if (iv.lo == iv.hi)
                os << rat_to_string(iv.lo);
            else
                os << "(" << rat_to_string(iv.lo) << ", " << rat_to_string(iv.hi) << "]";
        }
        if (n.parameter_at_infinity) os << (first ? "" : ", ") << "(1:0)";
        os << "\n";
    }
    for (const auto& c : n.children) node_text(os, c, indent + 1);
}

} // namespace

std::string report_to_json(const AnalysisReport& report)
{
    return report_json_object(report).dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    const CurveSpec& c = report.curve;
    os << "curve: degree " << c.n << "\n  a = " << param_poly(c.a)
       << "\n  b = " << param_poly(c.b) << "\n  c = " << param_poly(c.c) << "\n";
    os << "mu = " << report.basis.mu << "\n";
    os << "smith normal form of B(F,G): diag(";
    for (size_t i = 0; i < report.ms.smith.factors.size(); ++i) {
        if (i) os << ", ";
        os << smith_poly(report.ms.smith.factors[i]);
    }
    os << ")\n";
    os << "d-chain:";
    bool nontrivial = false;
    for (size_t k = 2; k < report.ms.d_by_k.size(); ++k) {
        os << " d_" << k << " = " << smith_poly(report.ms.d_by_k[k]);
        if (!report.ms.d_by_k[k].is_constant()) nontrivial = true;
    }
    if (report.ms.d_by_k.size() <= 2) os << " (none)";
    os << "\n";
    if (report.tree.empty())
        os << "singularities: none" << (nontrivial ? " (unexpected)" : "") << "\n";
    else {
        os << "singularities:\n";
        for (const auto& n : report.tree) node_text(os, n, 1);
    }
    os << "budget: sum (k-1) deg d_k = " << report.budget_lhs << ", (n-1)(n-2) = "
       << report.budget_rhs << " [" << (report.budget_ok ? "ok" : "MISMATCH") << "]\n";
    for (const auto& v : report.verifications)
        os << "verify " << v.name << ": " << (v.ok ? "pass" : "FAIL")
           << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    if (report.incomplete) {
        os << "analysis INCOMPLETE:\n";
        for (const auto& s : report.incompleteness) os << "  - " << s << "\n";
    } else {
        for (const auto& s : report.incompleteness) os << "note: " << s << "\n";
    }
    return os.str();
}

std::string mubasis_to_json(const CurveSpec& curve, const MuBasis& basis)
{
    OrderedJson j;
    j["curve"] = curve_json(curve);
    j["mu"] = basis.mu;
    j["p"] = OrderedJson::array(
        {param_poly(basis.p.A), param_poly(basis.p.B), param_poly(basis.p.C)});
    j["q"] = OrderedJson::array(
        {param_poly(basis.q.A), param_poly(basis.q.B), param_poly(basis.q.C)});
    j["k"] = rat_to_string(basis.k);
    return j.dump(2) + "\n";
}

std::string mubasis_to_text(const CurveSpec& curve, const MuBasis& basis)
{
    std::ostringstream os;
    os << "mu = " << basis.mu << " (degrees " << basis.mu << " and " << curve.n - basis.mu
       << ")\n";
    os << "p = (" << param_poly(basis.p.A) << ", " << param_poly(basis.p.B) << ", "
       << param_poly(basis.p.C) << ")\n";
    os << "q = (" << param_poly(basis.q.A) << ", " << param_poly(basis.q.B) << ", "
       << param_poly(basis.q.C) << ")\n";
    os << "p x q = k P with k = " << rat_to_string(basis.k) << "\n";
    return os.str();
}

std::string implicit_to_json(const AnalysisReport& report)
{
    OrderedJson j;
    j["degree"] = report.implicit_degree;
    j["resultant_degree"] = report.implicit_f.degree();
    j["poly"] = report.implicit_f.to_string();
    j["proper"] = report.implicit_degree == report.curve.n;
    return j.dump(2) + "\n";
}

std::string implicit_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    os << "f(x,y,w) = " << report.implicit_f.to_string() << "\n";
    os << "implicit curve degree: " << report.implicit_degree << "\n";
    return os.str();
}

std::string smith_to_json(const AnalysisReport& report)
{
    OrderedJson j;
    OrderedJson smith = OrderedJson::array();
    for (const HPoly& f : report.ms.smith.factors) smith.push_back(smith_poly(f));
    j["smith"] = smith;
    OrderedJson dchain = OrderedJson::array();
    for (size_t k = 2; k < report.ms.d_by_k.size(); ++k)
        dchain.push_back(smith_poly(report.ms.d_by_k[k]));
    j["d_chain"] = dchain;
    return j.dump(2) + "\n";
}

std::string smith_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    os << "S(B(F,G)) = diag(";
    for (size_t i = 0; i < report.ms.smith.factors.size(); ++i) {
        if (i) os << ", ";
        os << smith_poly(report.ms.smith.factors[i]);
    }
    os << ")\n";
    for (size_t k = 2; k < report.ms.d_by_k.size(); ++k)
        os << "d_" << k << " = " << smith_poly(report.ms.d_by_k[k]) << "\n";
    return os.str();
}

std::string tree_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    if (report.tree.empty()) {
        os << "no singularities\n";
        return os.str();
    }
    for (const auto& n : report.tree) node_text(os, n, 0);
    return os.str();
}

std::string verifications_to_json(const AnalysisReport& report)
{
    OrderedJson ver = OrderedJson::array();
    for (const auto& v : report.verifications)
        ver.push_back(OrderedJson{{"name", v.name},
                                  {"status", v.ok ? "pass" : "fail"},
                                  {"detail", v.detail}});
    OrderedJson j;
    j["verifications"] = ver;
    bool all = true;
    for (const auto& v : report.verifications) all = all && v.ok;
    j["all_pass"] = all;
    return j.dump(2) + "\n";
}

std::string verifications_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    for (const auto& v : report.verifications)
        os << v.name << ": " << (v.ok ? "pass" : "FAIL")
           << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    return os.str();
}

std::string compare_to_json(const CheckReport& rep)
{
    OrderedJson j;
    j["ok"] = rep.ok;
    OrderedJson notes = OrderedJson::array();
    for (const auto& s : rep.notes) notes.push_back(s);
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

std::string compare_to_text(const CheckReport& rep)
{
    std::ostringstream os;
    os << (rep.ok ? "ok" : "FAIL") << "\n";
    for (const auto& s : rep.notes) os << "  - " << s << "\n";
    return os.str();
}

} // namespace rcs
