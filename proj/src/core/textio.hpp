#ifndef RCS_TEXTIO_HPP
#define RCS_TEXTIO_HPP

#include "core/mubasis.hpp"

#include <string>

namespace rcs {

// Raised on malformed input; carries 1-based line/column.
class ParseError : public MathError {
public:
    ParseError(const std::string& what, int line, int column)
        : MathError(what + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column)),
          line(line),
          column(column)
    {
    }
    int line, column;
};

/**
 * Parses the polynomial text syntax: rational coefficients, `^` powers,
 * `*` products, and one homogeneous variable pair.  Both (t,v) and (s,u)
 * names are accepted; e.g. "t^2*v - 3/2*v^3".
 */
HPoly parse_hpoly(const std::string& text);

// Curve input: a JSON object {"degree": n, "a": ..., "b": ..., "c": ...}
// whose components are coefficient-string arrays (ascending t-power) or
// text polynomials; or the inline form "a; b; c".
CurveSpec parse_curve(const std::string& text);

// Canonical serialized polynomial: {"degree": d, "coeffs": [...]} with
// coefficient strings ascending in the first variable's power.
std::string hpoly_to_json(const HPoly& f);

// Matrix serialization {rows, cols, entries: [[poly, ...], ...]}.
std::string hpolymat_to_json(const HPolyMat& m, const std::string& x,
                             const std::string& y);

} // namespace rcs

#endif
