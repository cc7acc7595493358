#ifndef KNOTREP_PRESENTATION_HPP
#define KNOTREP_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "knotrep/diagram.hpp"
#include "knotrep/errors.hpp"

namespace knotrep {

// A word in a free group. Letter +(i+1) is generator i, letter -(i+1)
// its inverse; the empty word is the identity. Words handed across
// module boundaries are always freely reduced.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
bool is_reduced(const Word& w);

// Word text form: space-separated tokens "g<i>" and "g<i>^-1".
std::string word_to_text(const Word& w);
Word word_from_text(std::string_view text, int generator_count);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::vector<std::string> labels;  // optional, size 0 or generator_count

  // Throws on out-of-range letters or non-reduced relators.
  void validate() const;

  int total_relator_length() const;
  bool operator==(const Presentation&) const = default;
};

// Presentation text format:
//   gens: <k>
//   rel: g0 g1 g0^-1 ...
std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(std::string_view text);

// Wirtinger presentation of the knot group. One generator per strand
// class (maximal over-path; there are exactly crossing_count of them
// when the diagram has crossings), one conjugation relator per
// crossing except the last, whose relator is redundant. For a
// positive crossing with over strand o and under strands u -> w the
// relator is o u o^-1 w^-1; a negative crossing swaps o and o^-1.
Presentation wirtinger(const Diagram& d);

// --- Tietze simplification ------------------------------------------------

struct TietzeMove {
  enum class Kind { RemoveEmptyRelator, RemoveDuplicateRelator, EliminateGenerator };
  Kind kind;
  // RemoveEmptyRelator: relator = index of the empty relator.
  // RemoveDuplicateRelator: relator = removed index, other = kept index.
  // EliminateGenerator: gen = eliminated generator, relator = defining
  // relator's index, replacement = word substituted for gen (all in
  // the indexing *before* the move).
  int relator = -1;
  int other = -1;
  int gen = -1;
  Word replacement;

  bool operator==(const TietzeMove&) const = default;
};

struct TietzeTrace {
  std::vector<TietzeMove> moves;
  bool budget_exhausted = false;
};

// Applies one recorded move; throws InternalInvariant if the witness
// data does not match p.
Presentation apply_move(const Presentation& p, const TietzeMove& m);

// Replays a whole trace from the source presentation.
Presentation replay_trace(Presentation p, const TietzeTrace& t);

// Greedy simplifier. Repeatedly removes empty/duplicate relators and
// eliminates a generator that occurs exactly once in some relator,
// preferring the shortest defining relator and breaking ties by
// lowest generator index, then lowest relator index. Returns the best
// presentation visited, measured by (generator_count, total relator
// length) lexicographically, together with the trace prefix reaching
// it; the result is never worse than the input and the procedure is
// idempotent. `budget` caps the number of applied moves.
std::pair<Presentation, TietzeTrace> tietze_simplify(const Presentation& p,
                                                     int budget = 1000);

// --- abelianization -------------------------------------------------------

struct Abelianization {
  int rank = 0;
  std::vector<long long> torsion;  // entries > 1 in divisibility order

  bool operator==(const Abelianization&) const = default;
};

// Smith normal form of the relator exponent-sum matrix.
Abelianization abelianization(const Presentation& p);

}  // namespace knotrep

#endif
