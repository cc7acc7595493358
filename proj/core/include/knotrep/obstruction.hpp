#ifndef KNOTREP_OBSTRUCTION_HPP
#define KNOTREP_OBSTRUCTION_HPP

#include "knotrep/diagram.hpp"
#include "knotrep/rep_variety.hpp"

namespace knotrep {

// Comparison of dimension lists. Lists are descending; the shorter
// one is padded with -1, so [3,1] vs [3] reads [3,1] vs [3,-1] and
// "more, bigger components" compares Greater. Incomplete marks an
// entry whose lists cannot be trusted (budget) and never comes out of
// lex_compare itself.
enum class LexVerdict { Less, Equal, Greater, Incomplete };

const char* lex_verdict_name(LexVerdict v);

// Total order on descending lists; throws UnsortedInput otherwise.
LexVerdict lex_compare(const std::vector<int>& a, const std::vector<int>& b);

// What the completed per-model verdicts jointly allow. A Greater
// entry obstructs "A below B", a Less entry obstructs "B below A";
// one of each excludes both directions. Each model alone only ever
// speaks in one direction.
enum class CombinedVerdict {
  ConsistentAGeB,
  ConsistentBGeA,
  ConsistentBothOrEqual,
  ExcludedBothDirections,
  Inconclusive,
};

const char* combined_verdict_name(CombinedVerdict v);

// Pure function of the entry verdicts; Incomplete entries are
// ignored, and no entries at all (or only Incomplete ones) is
// Inconclusive.
CombinedVerdict combine_verdicts(const std::vector<LexVerdict>& verdicts);

// Incomplete when either invariant is budget-flagged or empty,
// otherwise lex_compare of the lists.
LexVerdict entry_verdict(const DimInvariant& a, const DimInvariant& b);

struct ModelEntry {
  RepTarget target;
  GaugeKind gauge = GaugeKind::None;
  DimInvariant a, b;
  LexVerdict verdict = LexVerdict::Incomplete;
  std::string note;  // failure reason when the entry is Incomplete
};

struct ComparisonReport {
  std::string digest_a, digest_b;
  std::vector<ModelEntry> entries;
  CombinedVerdict combined = CombinedVerdict::Inconclusive;
  bool real_radical_caveat = false;  // some dimension is a rational upper bound
  bool budget_exceeded = false;      // some entry is Incomplete
  bool heuristic = false;            // combined verdict rests on caveated data
};

// Full pipeline per model: wirtinger -> tietze -> representation
// ideal -> dimension lists -> lex verdict; the combined verdict folds
// the completed entries. A failure inside one model downgrades that
// entry to Incomplete; invalid diagrams throw before any model runs.
ComparisonReport compare_knots(const Diagram& a, const Diagram& b,
                               const std::vector<std::pair<RepTarget, GaugeKind>>& models,
                               const Budget& budget = {});

}  // namespace knotrep

#endif
