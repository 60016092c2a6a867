#ifndef RCS_SINGULARITY_HPP
#define RCS_SINGULARITY_HPP

#include "core/factor.hpp"
#include "core/mubasis.hpp"
#include "core/qmat.hpp"
#include "core/resultants.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rcs {

// Analysis that cannot be completed within configured bounds (blow-up
// depth, coordinate search).  Distinct from precondition violations.
class IncompleteError : public MathError {
public:
    explicit IncompleteError(const std::string& what) : MathError(what) {}
};

/// F = p.P(t,v)/(sv-tu), G = q.P(t,v)/(sv-tu).
struct FGPair {
    BiHPoly F, G;
};

// The dot product s(s,u) . P(t,v) as a bihomogeneous polynomial.
BiHPoly moving_line(const Syzygy& s, const CurveSpec& curve);

FGPair build_FG(const CurveSpec& curve, const MuBasis& basis);

/// Smith normal form of B_{t,v}(F,G) together with the extracted d-chain.
struct MainSmith {
    HPolyMat bezout;            // (n-1) x (n-1), entries forms in (s,u)
    SmithFormH smith;
    std::vector<HPoly> d_by_k;  // d_by_k[k] = d_k for k = 2..n-mu (lower
                                // indices unused and set to 1)
};

// Computes the Smith form and verifies the cascade shape: mu leading 1s,
// then successive exact quotients d_{n-mu}, ..., d_2.  A shape violation
// is a hard error.
MainSmith main_smith(const CurveSpec& curve, const MuBasis& basis, const FGPair& fg);

/// A singular point (or an irreducible conjugacy class of points).
struct SingularPoint {
    HPoly formula;                   // full inversion formula
    int order = 0;
    bool has_point = false;          // rational coordinates available
    std::array<Rational, 3> point{}; // normalized primitive integer triple
    bool atomic_class = false;       // irrational point: SNF-only analysis
    std::vector<HPoly> irreducibles; // distinct irreducible factors of formula
};

std::vector<SingularPoint> singular_points(const CurveSpec& curve, const MuBasis& basis,
                                           const MainSmith& ms);

/// Node of the singularity tree; level 0 lies on the curve itself, level k
/// in the k-th infinitesimal neighborhood.
struct SingularityNode {
    int level = 0;
    int order = 0;
    HPoly formula;       // inversion formula, in the curve parameter
    bool has_point = false;
    std::array<Rational, 3> point{};
    int ancestor_order = 0;          // order of the level-0 ancestor
    bool attributed_by_blowup = true; // false for the SNF-only fallback
    std::vector<SingularityNode> children;
    std::vector<Interval> intervals; // real isolating intervals (optional)
    bool parameter_at_infinity = false;
};

/// Curve moved so the singular point sits at (0,0,1), in factored form
/// P = (a h, b h, c) with gcd(a,b) = gcd(h,c) = gcd(a,h) = 1.
struct OriginForm {
    CurveSpec curve;
    HPoly a, b, c, h;
    QMat transform; // the 3x3 change of coordinates applied to (x,y,w)
    int order = 0;
};

OriginForm move_to_origin(const CurveSpec& curve, const SingularPoint& pt,
                          int coord_bound);

// P1 = (a^2 h, b c, c a) with any common factor removed; validates the
// result as a curve.  removed_factor receives the cancelled gcd.
CurveSpec blow_up(const OriginForm& origin, HPoly* removed_factor = nullptr);

struct AnalysisOptions {
    int max_depth = 8;
    int coord_bound = 20;
    bool isolate_roots = false;
};

struct Verification {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct AnalysisReport {
    CurveSpec curve;
    MuBasis basis;
    TriPoly implicit_f;
    int implicit_degree = 0;
    FGPair fg;
    MainSmith ms;
    std::vector<SingularityNode> tree;
    // Budget: sum_k (k-1) deg d_k vs (n-1)(n-2).
    long budget_lhs = 0, budget_rhs = 0;
    bool budget_ok = false;
    std::vector<Verification> verifications;
    bool incomplete = false;
    std::vector<std::string> incompleteness;
};

// The full pipeline: mu-basis, properness, Smith form, singular points,
// blow-up attribution of infinitely near singularities, budget.
AnalysisReport analyze(const CurveSpec& curve, const AnalysisOptions& opts = {});

// ---------------------------------------------------------------------
// Verification operations (paper-level cross checks).

// S^Q(B(h,L)) = diag(1,...,1, h,...,h) with r-1 trailing h's and total
// restricted degree r(r-1).
CheckReport h_block_check(const OriginForm& origin);

// S^Q(B(F,G)) equals S^Q(B(M,L)) for every singular point.
CheckReport syzygy_invariance_check(const CurveSpec& curve, const MuBasis& basis,
                                    const AnalysisOptions& opts = {});

// Restricted-SNF agreement for an arbitrary alternative syzygy pair.
CheckReport syzygy_invariance_for(const CurveSpec& curve, const MuBasis& basis,
                                  const Syzygy& alt_p, const Syzygy& alt_q,
                                  const std::vector<SingularPoint>& points);

// F and G vanish at every ordered pair of parameters of each singular
// point (exact ideal-membership reduction in all charts).
CheckReport symmetry_check(const CurveSpec& curve, const FGPair& fg,
                           const std::vector<SingularPoint>& points);

// Budget identity and tree/d-chain consistency.
CheckReport budget_check(const AnalysisReport& report);

// Vanishing of all partials of order < r at the point, with a nonzero
// order-r partial.
CheckReport implicit_multiplicity_check(const TriPoly& f,
                                        const std::array<Rational, 3>& point, int r);

// The four resultant matrices and their Smith forms; forms 3 and 4 agree,
// forms 2 vs 3/4 agree after removing the factor c, form 1 vs form 2
// agreement is recorded (never asserted).
CheckReport compare_four_matrices(const CurveSpec& curve, const MuBasis& basis,
                                  const MainSmith& ms);

// Inversion formula by evaluation, rank deficiency n-r, h | D_{n-r+1},
// and the no-infinitely-near Smith form shape.
CheckReport appendix_checks(const CurveSpec& curve, const MuBasis& basis,
                            const AnalysisReport& report);

// Every formula of a level-k node reappears as a level-0 inversion formula
// of the k-times blown-up curve; d-chain conservation per point.
CheckReport blowup_consistency_check(const AnalysisReport& report);

// Runs every verification suite against a finished analysis.
std::vector<Verification> run_all_verifications(AnalysisReport& report,
                                                const AnalysisOptions& opts = {});

// Restriction of a polynomial to the primary parts supported on the
// irreducible factors of the reference formula.
HPoly restrict_to(const HPoly& f, const std::vector<HPoly>& irreducibles);

} // namespace rcs

#endif
