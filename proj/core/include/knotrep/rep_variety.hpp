#ifndef KNOTREP_REP_VARIETY_HPP
#define KNOTREP_REP_VARIETY_HPP

#include "knotrep/components.hpp"
#include "knotrep/presentation.hpp"

namespace knotrep {

// Target groups for representation varieties. SO(n) uses the n^2
// matrix-entry model (orthonormality + determinant); SU2 uses unit
// quaternions, a 4-variable fast path. The SU2 variety is not the
// SO(3) variety (double cover): dimension lists are only ever
// compared within one target.
enum class TargetKind { SO, SU2 };

struct RepTarget {
  TargetKind kind = TargetKind::SU2;
  int n = 2;  // matrix size for SO(n); 2 for SU2

  static RepTarget su2() { return {TargetKind::SU2, 2}; }
  static RepTarget so(int n);
  // "su2", "so2", "so3", "so4"; anything else throws Unsupported.
  static RepTarget from_name(std::string_view name);
  std::string name() const;
  int vars_per_generator() const { return kind == TargetKind::SU2 ? 4 : n * n; }

  bool operator==(const RepTarget&) const = default;
};

// FixFirstGenerator cuts the conjugation freedom by pinning generator
// 0 to a normal form: the (a, b, 0, 0) quaternion axis for SU2, the
// z-axis rotation shape for SO(3), the bi-planar block shape for
// SO(4). SO(2) is abelian, so its slice pins nothing. Pins only ever
// add equations.
enum class GaugeKind { None, FixFirstGenerator };

const char* gauge_name(GaugeKind g);
GaugeKind gauge_from_name(std::string_view name);

struct VariableScheme {
  int vars_per_generator = 0;
  // Gauge pins as substitutions var -> replacement (a constant or a
  // signed variable); the pinned equations in the ideal are
  // var - replacement.
  std::vector<std::pair<int, Polynomial>> pins;

  int block_start(int gen) const { return gen * vars_per_generator; }
};

struct RepVarietyModel {
  Presentation presentation;
  RepTarget target;
  GaugeKind gauge = GaugeKind::None;
  Ideal ideal;
  VariableScheme scheme;
};

// Defining ideal of the target group itself: the one-generator,
// no-relator model's ideal.
Ideal group_ideal(RepTarget target);

// One variable block per generator, the target's group equations per
// block, the component equations of (relator word) - identity per
// relator, then any gauge pins. Inverse letters use the transpose
// (SO) or quaternion conjugate (SU2), which agree with the inverse
// modulo the group equations.
RepVarietyModel build_rep_ideal(const Presentation& p, RepTarget target,
                                GaugeKind gauge);

// Identifies all generator blocks with block 0. Relators must die
// under the identification (any word in one letter with zero exponent
// sum does); otherwise RelatorSurvived. The result is the plain group
// ideal: gauge pins are not part of the slice.
Ideal abelian_slice(const RepVarietyModel& m);

struct DimInvariant {
  RepTarget target;
  GaugeKind gauge = GaugeKind::None;
  // Krull dimensions of the branches found, sorted descending. Empty
  // only when the budget blocked every computation.
  std::vector<int> dimension_list;
  bool certified = false;           // every branch generator provably irreducible
  bool real_radical_caveat = false; // some dimension is only a real upper bound
  bool budget_exceeded = false;     // splitting or some branch dimension stalled
};

// Dimension list via split_components + per-branch Krull dimension.
// Gauge pins are substituted away first, so a pinned model computes
// in the smaller ring. Falls back to the unsplit ideal's top
// dimension when splitting exhausts the budget.
DimInvariant variety_dimension(const RepVarietyModel& m, const Budget& budget = {});

// Ideal text plus a JSON header line (target, gauge, block layout):
// everything needed to reproduce the computation elsewhere.
std::string model_dump(const RepVarietyModel& m);

}  // namespace knotrep

#endif
