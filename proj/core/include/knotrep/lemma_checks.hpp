#ifndef KNOTREP_LEMMA_CHECKS_HPP
#define KNOTREP_LEMMA_CHECKS_HPP

#include <string>

#include "knotrep/components.hpp"
#include "knotrep/dimension.hpp"
#include "knotrep/radical.hpp"

namespace knotrep {

// Polynomial map between affine spaces, one coordinate polynomial per
// target variable, all living in the source ring.
struct PolynomialMap {
  int source_vars = 0;
  int target_vars = 0;
  std::vector<Polynomial> coords;       // size target_vars
  std::vector<std::string> target_names;  // optional; defaults to y0, y1, ...

  void validate() const;
};

// A nested pair V(I_Y) inside V(I_X) can only have equal dimensions
// when the varieties coincide, provided V(I_X) is irreducible and the
// dimensions are read over the reals. The checker verifies that the
// computed data is consistent with this and, when it is not, blames a
// hypothesis: either the irreducibility assertion (exhibited by a
// component split) or the rational-vs-real dimension gap.
enum class LemmaVerdict {
  DimensionsDiffer,  // proper containment visible in the dimensions
  EqualConfirmed,    // equal dimensions and equal radicals
  HypothesisAtFault, // equal dimensions, distinct radicals, X asserted irreducible
  NotAsserted,       // equal dimensions, distinct radicals, nothing asserted
};

enum class LemmaDiagnostic {
  None,
  IrreducibilityViolated,  // I_X visibly splits
  RealRadicalCaveat,       // no split found; rational dimension may overshoot
};

const char* lemma_verdict_name(LemmaVerdict v);
const char* lemma_diagnostic_name(LemmaDiagnostic d);

struct LemmaReport {
  int dim_x = 0;
  int dim_y = 0;
  IdealRelation relation = IdealRelation::Equal;
  LemmaVerdict verdict = LemmaVerdict::EqualConfirmed;
  LemmaDiagnostic diagnostic = LemmaDiagnostic::None;
  bool real_radical_caveat = false;  // either ideal tripped the even-power test
  std::string message;
};

// Requires I_X subseteq I_Y as literal ideals (each generator of I_X
// reduces to zero modulo I_Y); throws NotNested otherwise.
LemmaReport check_dimension_lemma(const Ideal& I_X, const Ideal& I_Y,
                                  bool x_irreducible_asserted,
                                  const Budget& budget = {});

// Defining ideal of the Zariski closure of phi(V(I)), computed by
// eliminating the source variables from the graph ideal
// (I, y_j - phi_j(x)).
Ideal image_closure_demo(const PolynomialMap& phi, const Ideal& I,
                         const Budget& budget = {});

}  // namespace knotrep

#endif
