#ifndef RCS_REPORT_HPP
#define RCS_REPORT_HPP

#include "core/singularity.hpp"

#include <string>

namespace rcs {

// Machine-readable report; canonical key order and rational formatting so
// that parse + re-serialize is byte-identical.
std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

std::string mubasis_to_json(const CurveSpec& curve, const MuBasis& basis);
std::string mubasis_to_text(const CurveSpec& curve, const MuBasis& basis);

std::string implicit_to_json(const AnalysisReport& report);
std::string implicit_to_text(const AnalysisReport& report);

std::string smith_to_json(const AnalysisReport& report);
std::string smith_to_text(const AnalysisReport& report);

std::string tree_to_text(const AnalysisReport& report);

std::string verifications_to_json(const AnalysisReport& report);
std::string verifications_to_text(const AnalysisReport& report);

std::string compare_to_json(const CheckReport& rep);
std::string compare_to_text(const CheckReport& rep);

} // namespace rcs

#endif
