#ifndef KNOTREP_DIAGRAM_HPP
#define KNOTREP_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

enum class SourceFormat { Braid, DT, PD };

inline const char* source_format_name(SourceFormat f) {
  switch (f) {
    case SourceFormat::Braid: return "braid";
    case SourceFormat::DT: return "dt";
    case SourceFormat::PD: return "pd";
  }
  return "?";
}

// One crossing in PD convention.
//
// arcs[0] is the incoming under-strand arc; arcs[1..3] follow
// counterclockwise around the crossing, so arcs[2] is the outgoing
// under-strand arc and arcs[1], arcs[3] carry the over-strand.
//
// Sign convention used throughout this library: sign = +1 means the
// over-strand runs arcs[1] -> arcs[3]; sign = -1 means it runs
// arcs[3] -> arcs[1]. This pins a handedness for each input format;
// the mirror choice would give the reflected diagram, whose knot
// group is isomorphic.
struct Crossing {
  std::array<int, 4> arcs;
  int sign;  // +1 or -1

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[1] : arcs[3]; }
  int over_out() const { return sign > 0 ? arcs[3] : arcs[1]; }

  bool operator==(const Crossing&) const = default;
};

// Combinatorial oriented knot diagram. Arcs are the PD-code edge
// labels 0..arc_count-1 (segments between consecutive crossing
// passages, over or under). Every arc appears exactly twice across
// the crossing records. A 0-crossing diagram is the unknot and has
// arc_count = 1.
struct Diagram {
  std::vector<Crossing> crossings;
  int arc_count = 1;
  SourceFormat source_format = SourceFormat::PD;

  int crossing_count() const { return static_cast<int>(crossings.size()); }

  // Throws Error(ArcDegree / InvalidInput) if the structural
  // invariants fail.
  void validate() const;

  bool operator==(const Diagram&) const = default;
};

// Wirtinger strands: arcs glued along over-strand passages. Strand
// classes are the classical "arcs" of knot theory (one per maximal
// over-path); both the Wirtinger presentation and Fox colorings hang
// off them.
struct StrandClasses {
  std::vector<int> strand_of_arc;  // arc index -> strand class
  int strand_count = 0;
};

StrandClasses strand_classes(const Diagram& d);

// --- parsers ------------------------------------------------------------

// Closure of a braid word on `strands` strands. Entries are nonzero
// integers with |entry| < strands; entry +i crosses the strand in
// position i-1 over position i, entry -i crosses it under. Rejects
// multi-component closures.
Diagram parse_braid(const std::vector<int>& word, int strands);

// Dowker-Thistlethwaite code: the i-th entry pairs odd passage 2i+1
// with even passage |code[i]|; a positive entry means the odd passage
// goes under. Reconstructs a planar realization or fails with
// NotRealizable.
Diagram parse_dt(const std::vector<long long>& code);

struct PdTuple {
  std::array<long long, 4> arcs;
  std::optional<int> sign;  // explicit Xp/Xm sign, if given
};

// PD tuples with arbitrary (distinct-per-arc) nonnegative labels; arcs
// are renumbered densely in sorted label order. Orientation, and from
// it each crossing's sign, is inferred from the arc successor
// structure; explicit signs are cross-checked.
Diagram parse_pd(const std::vector<PdTuple>& tuples);

// --- text formats -------------------------------------------------------
//
// braid:  header line "strands=<k>", then whitespace-separated signed
//         integers on any number of lines.
// dt:     comma-separated even integers on one logical line.
// pd:     one crossing per line, "X[a,b,c,d]" or "Xp[a,b,c,d]" /
//         "Xm[a,b,c,d]". '#' starts a comment. An empty file is the
//         unknot in all three formats.

Diagram parse_braid_text(std::string_view text);
Diagram parse_dt_text(std::string_view text);
Diagram parse_pd_text(std::string_view text);

std::string to_pd_text(const Diagram& d);

// Reads a file and dispatches on `format`, or on the extension
// (.braid/.dt/.pd) when format is not given.
Diagram parse_knot_file(const std::string& path,
                        std::optional<SourceFormat> format = std::nullopt);

// Stable hex digest of the canonical PD serialization; used to
// identify knot inputs in reports.
std::string diagram_digest(const Diagram& d);

}  // namespace knotrep

#endif
