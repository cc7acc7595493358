#include <algorithm>
#include <tuple>

#include "knotrep/presentation.hpp"

namespace knotrep {

namespace {

// Net occurrence positions of generator g (1-based) in w.
int occurrence_count(const Word& w, int g) {
  int n = 0;
  for (int x : w)
    if (std::abs(x) == g) ++n;
  return n;
}

Word substitute(const Word& w, int g, const Word& replacement) {
  Word out;
  Word inv = inverse_word(replacement);
  for (int x : w) {
    if (x == g)
      out.insert(out.end(), replacement.begin(), replacement.end());
    else if (x == -g)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

Word shift_down(const Word& w, int g) {
  Word out = w;
  for (int& x : out) {
    int a = std::abs(x);
    if (a > g) x = (x > 0) ? a - 1 : -(a - 1);
  }
  return out;
}

}  // namespace

Presentation apply_move(const Presentation& p, const TietzeMove& m) {
  Presentation out = p;
  const int nrel = static_cast<int>(p.relators.size());
  switch (m.kind) {
    case TietzeMove::Kind::RemoveEmptyRelator: {
      if (m.relator < 0 || m.relator >= nrel || !p.relators[m.relator].empty())
        fail(ErrorCode::InternalInvariant, "bad RemoveEmptyRelator witness");
      out.relators.erase(out.relators.begin() + m.relator);
      return out;
    }
    case TietzeMove::Kind::RemoveDuplicateRelator: {
      if (m.relator < 0 || m.relator >= nrel || m.other < 0 || m.other >= nrel ||
          m.other == m.relator)
        fail(ErrorCode::InternalInvariant, "bad RemoveDuplicateRelator indices");
      const Word& a = p.relators[m.relator];
      const Word& b = p.relators[m.other];
      if (a != b && a != inverse_word(b))
        fail(ErrorCode::InternalInvariant, "relators are not duplicates");
      out.relators.erase(out.relators.begin() + m.relator);
      return out;
    }
    case TietzeMove::Kind::EliminateGenerator: {
      int g = m.gen + 1;  // 1-based letter
      if (m.gen < 0 || m.gen >= p.generator_count || m.relator < 0 ||
          m.relator >= nrel)
        fail(ErrorCode::InternalInvariant, "bad EliminateGenerator indices");
      if (p.generator_count < 2)
        fail(ErrorCode::InternalInvariant, "cannot eliminate the last generator");
      if (occurrence_count(p.relators[m.relator], g) != 1)
        fail(ErrorCode::InternalInvariant,
             "defining relator must contain the generator exactly once");
      if (occurrence_count(m.replacement, g) != 0 ||
          !free_reduce(substitute(p.relators[m.relator], g, m.replacement)).empty())
        fail(ErrorCode::InternalInvariant,
             "replacement word does not solve the defining relator");
      out.relators.clear();
      for (int i = 0; i < nrel; ++i) {
        if (i == m.relator) continue;
        out.relators.push_back(shift_down(substitute(p.relators[i], g, m.replacement), g));
      }
      out.generator_count = p.generator_count - 1;
      if (!out.labels.empty()) out.labels.erase(out.labels.begin() + m.gen);
      return out;
    }
  }
  fail(ErrorCode::InternalInvariant, "unknown Tietze move");
}

Presentation replay_trace(Presentation p, const TietzeTrace& t) {
  for (const TietzeMove& m : t.moves) p = apply_move(p, m);
  return p;
}

namespace {

// Solve relator = alpha g^e beta for g: e=+1 gives g = alpha^-1 beta^-1,
// e=-1 gives g = beta alpha.
Word solve_for(const Word& r, int g) {
  int pos = -1;
  for (size_t i = 0; i < r.size(); ++i)
    if (std::abs(r[i]) == g) pos = static_cast<int>(i);
  Word alpha(r.begin(), r.begin() + pos);
  Word beta(r.begin() + pos + 1, r.end());
  Word w;
  if (r[pos] > 0) {
    w = inverse_word(alpha);
    Word ib = inverse_word(beta);
    w.insert(w.end(), ib.begin(), ib.end());
  } else {
    w = beta;
    w.insert(w.end(), alpha.begin(), alpha.end());
  }
  return free_reduce(w);
}

bool find_next_move(const Presentation& p, TietzeMove& out) {
  const int nrel = static_cast<int>(p.relators.size());
  for (int i = 0; i < nrel; ++i)
    if (p.relators[i].empty()) {
      out = {TietzeMove::Kind::RemoveEmptyRelator, i, -1, -1, {}};
      return true;
    }
  for (int i = 0; i < nrel; ++i)
    for (int j = 0; j < i; ++j)
      if (p.relators[i] == p.relators[j] ||
          p.relators[i] == inverse_word(p.relators[j])) {
        out = {TietzeMove::Kind::RemoveDuplicateRelator, i, j, -1, {}};
        return true;
      }
  if (p.generator_count < 2) return false;
  // Shortest defining relator; ties by lowest generator, then lowest
  // relator index.
  std::tuple<int, int, int> best{-1, -1, -1};
  for (int g = 1; g <= p.generator_count; ++g)
    for (int i = 0; i < nrel; ++i) {
      if (occurrence_count(p.relators[i], g) != 1) continue;
      std::tuple<int, int, int> key{static_cast<int>(p.relators[i].size()), g, i};
      if (std::get<0>(best) < 0 || key < best) best = key;
    }
  if (std::get<0>(best) < 0) return false;
  int g = std::get<1>(best), i = std::get<2>(best);
  out = {TietzeMove::Kind::EliminateGenerator, i, -1, g - 1,
         solve_for(p.relators[i], g)};
  return true;
}

}  // namespace

std::pair<Presentation, TietzeTrace> tietze_simplify(const Presentation& p,
                                                     int budget) {
  p.validate();
  Presentation cur = p;
  TietzeTrace trace;
  Presentation best = cur;
  size_t best_len = 0;
  auto score = [](const Presentation& q) {
    return std::pair<int, int>{q.generator_count, q.total_relator_length()};
  };
  TietzeMove m;
  while (static_cast<int>(trace.moves.size()) < budget) {
    if (!find_next_move(cur, m)) {
      Presentation out = best;
      trace.moves.resize(best_len);
      return {std::move(out), std::move(trace)};
    }
    cur = apply_move(cur, m);
    trace.moves.push_back(m);
    if (score(cur) < score(best)) {
      best = cur;
      best_len = trace.moves.size();
    }
  }
  trace.budget_exhausted = find_next_move(cur, m);
  trace.moves.resize(best_len);
  return {std::move(best), std::move(trace)};
}

}  // namespace knotrep
