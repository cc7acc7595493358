#include "knotrep/obstruction.hpp"

#include <algorithm>

namespace knotrep {

const char* lex_verdict_name(LexVerdict v) {
  switch (v) {
    case LexVerdict::Less: return "Less";
    case LexVerdict::Equal: return "Equal";
    case LexVerdict::Greater: return "Greater";
    case LexVerdict::Incomplete: return "Incomplete";
  }
  return "?";
}

const char* combined_verdict_name(CombinedVerdict v) {
  switch (v) {
    case CombinedVerdict::ConsistentAGeB: return "ConsistentWith(A>=B)";
    case CombinedVerdict::ConsistentBGeA: return "ConsistentWith(B>=A)";
    case CombinedVerdict::ConsistentBothOrEqual: return "ConsistentBothOrEqual";
    case CombinedVerdict::ExcludedBothDirections: return "ExcludedBothDirections";
    case CombinedVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

LexVerdict lex_compare(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) fail(ErrorCode::UnsortedInput, "first list is not descending");
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] < b[i + 1]) fail(ErrorCode::UnsortedInput, "second list is not descending");
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ai = i < a.size() ? a[i] : -1;
    int bi = i < b.size() ? b[i] : -1;
    if (ai != bi) return ai < bi ? LexVerdict::Less : LexVerdict::Greater;
  }
  return LexVerdict::Equal;
}

CombinedVerdict combine_verdicts(const std::vector<LexVerdict>& verdicts) {
  bool any_less = false, any_greater = false, any_complete = false;
  for (LexVerdict v : verdicts) {
    if (v == LexVerdict::Incomplete) continue;
    any_complete = true;
    any_less = any_less || v == LexVerdict::Less;
    any_greater = any_greater || v == LexVerdict::Greater;
  }
  if (!any_complete) return CombinedVerdict::Inconclusive;
  if (any_less && any_greater) return CombinedVerdict::ExcludedBothDirections;
  if (any_greater) return CombinedVerdict::ConsistentAGeB;
  if (any_less) return CombinedVerdict::ConsistentBGeA;
  return CombinedVerdict::ConsistentBothOrEqual;
}

LexVerdict entry_verdict(const DimInvariant& a, const DimInvariant& b) {
  if (a.budget_exceeded || b.budget_exceeded || a.dimension_list.empty() ||
      b.dimension_list.empty())
    return LexVerdict::Incomplete;
  return lex_compare(a.dimension_list, b.dimension_list);
}

ComparisonReport compare_knots(const Diagram& a, const Diagram& b,
                               const std::vector<std::pair<RepTarget, GaugeKind>>& models,
                               const Budget& budget) {
  if (models.empty()) fail(ErrorCode::InvalidInput, "need at least one model");
  ComparisonReport report;
  report.digest_a = diagram_digest(a);
  report.digest_b = diagram_digest(b);

  Presentation pa = tietze_simplify(wirtinger(a)).first;
  Presentation pb = tietze_simplify(wirtinger(b)).first;

  std::vector<LexVerdict> verdicts;
  for (const auto& [target, gauge] : models) {
    ModelEntry entry;
    entry.target = target;
    entry.gauge = gauge;
    try {
      entry.a = variety_dimension(build_rep_ideal(pa, target, gauge), budget);
      entry.b = variety_dimension(build_rep_ideal(pb, target, gauge), budget);
      entry.verdict = entry_verdict(entry.a, entry.b);
      if (entry.verdict == LexVerdict::Incomplete)
        entry.note = "budget exhausted before both dimension lists completed";
    } catch (const Error& e) {
      entry.verdict = LexVerdict::Incomplete;
      entry.note = e.what();
    }
    report.real_radical_caveat = report.real_radical_caveat ||
                                 entry.a.real_radical_caveat ||
                                 entry.b.real_radical_caveat;
    report.budget_exceeded =
        report.budget_exceeded || entry.verdict == LexVerdict::Incomplete;
    verdicts.push_back(entry.verdict);
    report.entries.push_back(std::move(entry));
  }
  report.combined = combine_verdicts(verdicts);
  report.heuristic = report.real_radical_caveat;
  return report;
}

}  // namespace knotrep
