#include "knotrep/lemma_checks.hpp"

#include <algorithm>
#include <sstream>

#include "knotrep/elimination.hpp"

namespace knotrep {

void PolynomialMap::validate() const {
  if (source_vars <= 0 || target_vars <= 0)
    fail(ErrorCode::InvalidInput, "polynomial map needs nonempty source and target");
  if (static_cast<int>(coords.size()) != target_vars)
    fail(ErrorCode::InvalidInput, "polynomial map needs one coordinate per target variable");
  for (const Polynomial& c : coords)
    if (c.nvars() != source_vars)
      fail(ErrorCode::InvalidInput, "map coordinate lives in the wrong ring");
  if (!target_names.empty() && static_cast<int>(target_names.size()) != target_vars)
    fail(ErrorCode::InvalidInput, "target name count mismatch");
}

const char* lemma_verdict_name(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::DimensionsDiffer: return "DimensionsDiffer";
    case LemmaVerdict::EqualConfirmed: return "EqualConfirmed";
    case LemmaVerdict::HypothesisAtFault: return "HypothesisAtFault";
    case LemmaVerdict::NotAsserted: return "NotAsserted";
  }
  return "?";
}

const char* lemma_diagnostic_name(LemmaDiagnostic d) {
  switch (d) {
    case LemmaDiagnostic::None: return "None";
    case LemmaDiagnostic::IrreducibilityViolated: return "IrreducibilityViolated";
    case LemmaDiagnostic::RealRadicalCaveat: return "RealRadicalCaveat";
  }
  return "?";
}

LemmaReport check_dimension_lemma(const Ideal& I_X, const Ideal& I_Y,
                                  bool x_irreducible_asserted,
                                  const Budget& budget) {
  I_X.validate();
  I_Y.validate();
  if (I_X.nvars != I_Y.nvars)
    fail(ErrorCode::InvalidInput, "ideals live in different rings");

  const std::vector<Polynomial>& by = groebner(I_Y, budget);
  for (const Polynomial& g : I_X.generators)
    if (!normal_form(g.with_order(I_Y.order), by, budget).is_zero())
      fail(ErrorCode::NotNested, "first ideal is not contained in the second");

  LemmaReport rep;
  DimensionReport dx = dimension_report(I_X, budget);
  DimensionReport dy = dimension_report(I_Y, budget);
  rep.dim_x = dx.dimension;
  rep.dim_y = dy.dimension;
  rep.real_radical_caveat = dx.real_radical_caveat || dy.real_radical_caveat;
  rep.relation = ideal_equal(I_X, I_Y, budget);

  std::ostringstream msg;
  if (rep.dim_x != rep.dim_y) {
    rep.verdict = LemmaVerdict::DimensionsDiffer;
    msg << "dim " << rep.dim_x << " vs " << rep.dim_y
        << ": containment is proper and the dimensions drop; consistent";
  } else if (rep.relation == IdealRelation::Equal) {
    rep.verdict = LemmaVerdict::EqualConfirmed;
    msg << "equal dimensions (" << rep.dim_x << ") and equal radicals; consistent";
  } else if (!x_irreducible_asserted) {
    rep.verdict = LemmaVerdict::NotAsserted;
    msg << "equal dimensions (" << rep.dim_x
        << ") with distinct radicals; no irreducibility was asserted, so "
           "nothing to contradict";
  } else {
    rep.verdict = LemmaVerdict::HypothesisAtFault;
    SplitResult split = split_components(I_X, budget);
    if (split.branches.size() > 1) {
      rep.diagnostic = LemmaDiagnostic::IrreducibilityViolated;
      msg << "equal dimensions (" << rep.dim_x
          << ") with distinct radicals: the irreducibility assertion fails, "
             "the outer variety splits into "
          << split.branches.size() << " components";
    } else {
      rep.diagnostic = LemmaDiagnostic::RealRadicalCaveat;
      msg << "equal dimensions (" << rep.dim_x
          << ") with distinct radicals and no visible split: rational "
             "dimension may exceed the real dimension";
    }
  }
  rep.message = msg.str();
  return rep;
}

Ideal image_closure_demo(const PolynomialMap& phi, const Ideal& I,
                         const Budget& budget) {
  phi.validate();
  I.validate();
  if (phi.source_vars != I.nvars)
    fail(ErrorCode::InvalidInput, "map source does not match the ideal's ring");

  const int ns = phi.source_vars, nt = phi.target_vars, n = ns + nt;
  std::vector<std::string> names = I.var_names;
  for (int j = 0; j < nt; ++j) {
    std::string nm = phi.target_names.empty() ? "y" + std::to_string(j)
                                              : phi.target_names[j];
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm = "_" + nm;
    names.push_back(nm);
  }

  MonomialOrder order = grevlex_order(n);
  std::vector<Polynomial> lift_vars;
  for (int v = 0; v < ns; ++v)
    lift_vars.push_back(Polynomial::variable(n, order, v));

  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators)
    gens.push_back(g.substitute(lift_vars, n, order));
  for (int j = 0; j < nt; ++j)
    gens.push_back(Polynomial::variable(n, order, ns + j) -
                   phi.coords[j].substitute(lift_vars, n, order));

  std::vector<int> drop(ns);
  for (int v = 0; v < ns; ++v) drop[v] = v;
  Ideal image = eliminate(Ideal::make(std::move(names), order, std::move(gens)),
                          drop, budget);
  // The anti-collision prefixes are only needed while source names
  // are in scope; the image ring can use the requested names.
  for (int j = 0; j < nt; ++j)
    image.var_names[j] = phi.target_names.empty() ? "y" + std::to_string(j)
                                                  : phi.target_names[j];
  return image;
}

}  // namespace knotrep
