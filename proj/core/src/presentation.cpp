#include "knotrep/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "knotrep/smith.hpp"

namespace knotrep {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

std::string word_to_text(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    int g = std::abs(w[i]) - 1;
    out += 'g';
    out += std::to_string(g);
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

Word word_from_text(std::string_view text, int generator_count) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 'g')
      fail(ErrorCode::InvalidInput, "bad word token '" + tok + "'");
    int g;
    try {
      g = std::stoi(tok.substr(1));
    } catch (...) {
      fail(ErrorCode::InvalidInput, "bad generator index in '" + tok + "'");
    }
    if (g < 0 || g >= generator_count)
      fail(ErrorCode::OutOfRange,
           "generator g" + std::to_string(g) + " outside [0, " +
               std::to_string(generator_count) + ")");
    w.push_back(inv ? -(g + 1) : g + 1);
  }
  return w;
}

void Presentation::validate() const {
  if (generator_count <= 0)
    fail(ErrorCode::InvalidInput, "presentation needs at least one generator");
  if (!labels.empty() && static_cast<int>(labels.size()) != generator_count)
    fail(ErrorCode::InvalidInput, "labels size mismatch");
  for (const Word& r : relators) {
    for (int x : r) {
      if (x == 0) fail(ErrorCode::InvalidGenerator, "zero letter in relator");
      if (std::abs(x) > generator_count)
        fail(ErrorCode::OutOfRange, "relator letter outside generator range");
    }
    if (!is_reduced(r))
      fail(ErrorCode::InvalidInput, "relator is not freely reduced");
  }
}

int Presentation::total_relator_length() const {
  int n = 0;
  for (const Word& r : relators) n += static_cast<int>(r.size());
  return n;
}

std::string presentation_to_text(const Presentation& p) {
  std::string out = "gens: " + std::to_string(p.generator_count) + "\n";
  for (const Word& r : p.relators) out += "rel: " + word_to_text(r) + "\n";
  return out;
}

Presentation presentation_from_text(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_gens = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "gens:") {
      if (have_gens) fail(ErrorCode::InvalidInput, "duplicate gens: header");
      if (!(ls >> p.generator_count))
        fail(ErrorCode::InvalidInput, "gens: needs a count");
      have_gens = true;
    } else if (key == "rel:") {
      if (!have_gens)
        fail(ErrorCode::InvalidInput, "rel: before gens: header");
      std::string rest;
      std::getline(ls, rest);
      p.relators.push_back(free_reduce(word_from_text(rest, p.generator_count)));
    } else {
      fail(ErrorCode::InvalidInput, "unknown line key '" + key + "'");
    }
  }
  if (!have_gens) fail(ErrorCode::InvalidInput, "missing gens: header");
  p.validate();
  return p;
}

Presentation wirtinger(const Diagram& d) {
  d.validate();
  StrandClasses sc = strand_classes(d);
  Presentation p;
  p.generator_count = sc.strand_count;
  const int n = d.crossing_count();
  for (int i = 0; i + 1 < n; ++i) {
    const Crossing& c = d.crossings[i];
    int o = sc.strand_of_arc[c.over_in()] + 1;
    int u = sc.strand_of_arc[c.under_in()] + 1;
    int w = sc.strand_of_arc[c.under_out()] + 1;
    Word r = c.sign > 0 ? Word{o, u, -o, -w} : Word{-o, u, o, -w};
    p.relators.push_back(free_reduce(r));
  }
  p.validate();
  return p;
}

Abelianization abelianization(const Presentation& p) {
  p.validate();
  IntMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
  for (int i = 0; i < m.rows; ++i)
    for (int x : p.relators[i]) m.at(i, std::abs(x) - 1) += (x > 0 ? 1 : -1);
  std::vector<mpz_class> diag = smith_diagonal(std::move(m));
  Abelianization ab;
  ab.rank = p.generator_count - static_cast<int>(diag.size());
  for (const mpz_class& d : diag)
    if (d > 1) {
      if (!d.fits_slong_p())
        fail(ErrorCode::InternalInvariant, "torsion coefficient overflow");
      ab.torsion.push_back(d.get_si());
    }
  return ab;
}

}  // namespace knotrep
