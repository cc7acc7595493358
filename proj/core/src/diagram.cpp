#include "knotrep/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace knotrep {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void Diagram::validate() const {
  const int n = crossing_count();
  if (n == 0) {
    if (arc_count != 1)
      fail(ErrorCode::InvalidInput, "0-crossing diagram must have arc_count 1");
    return;
  }
  if (arc_count <= 0)
    fail(ErrorCode::InvalidInput, "arc_count must be positive");
  std::vector<int> degree(arc_count, 0);
  for (const Crossing& c : crossings) {
    if (c.sign != 1 && c.sign != -1)
      fail(ErrorCode::InvalidInput, "crossing sign must be +1 or -1");
    for (int a : c.arcs) {
      if (a < 0 || a >= arc_count)
        fail(ErrorCode::OutOfRange, "arc index " + std::to_string(a) +
                                        " outside [0, arc_count)");
      degree[a]++;
    }
  }
  for (int a = 0; a < arc_count; ++a)
    if (degree[a] != 2)
      fail(ErrorCode::ArcDegree, "arc " + std::to_string(a) + " appears " +
                                     std::to_string(degree[a]) +
                                     " times, expected 2");
}

StrandClasses strand_classes(const Diagram& d) {
  UnionFind uf(d.arc_count);
  for (const Crossing& c : d.crossings) uf.unite(c.arcs[1], c.arcs[3]);
  StrandClasses out;
  out.strand_of_arc.assign(d.arc_count, -1);
  int next = 0;
  for (int a = 0; a < d.arc_count; ++a) {
    int r = uf.find(a);
    if (out.strand_of_arc[r] < 0) out.strand_of_arc[r] = next++;
    out.strand_of_arc[a] = out.strand_of_arc[r];
  }
  out.strand_count = next;
  return out;
}

// --- braid --------------------------------------------------------------

Diagram parse_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) fail(ErrorCode::InvalidInput, "strands must be >= 1");
  for (int v : word) {
    if (v == 0) fail(ErrorCode::InvalidGenerator, "braid letter 0");
    if (std::abs(v) >= strands)
      fail(ErrorCode::OutOfRange,
           "braid letter " + std::to_string(v) + " needs >= " +
               std::to_string(std::abs(v) + 1) + " strands, have " +
               std::to_string(strands));
  }

  // Closure components = cycles of the underlying position permutation.
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int v : word) {
    int p = std::abs(v) - 1;
    std::swap(perm[p], perm[p + 1]);
  }
  int cycles = 0;
  std::vector<char> seen(strands, 0);
  for (int p = 0; p < strands; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = p; !seen[q]; q = perm[q]) seen[q] = 1;
  }
  if (cycles != 1)
    fail(ErrorCode::MultiComponent,
         "braid closure has " + std::to_string(cycles) + " components");

  Diagram d;
  d.source_format = SourceFormat::Braid;
  if (word.empty()) return d;  // 1-strand unknot

  int next_label = 0;
  std::vector<int> initial(strands), cur(strands);
  for (int p = 0; p < strands; ++p) initial[p] = cur[p] = next_label++;

  std::vector<Crossing> raw;
  raw.reserve(word.size());
  for (int v : word) {
    int p = std::abs(v) - 1;
    if (v > 0) {
      // Position p passes over p+1; under-strand enters from the right.
      int over_in = cur[p], under_in = cur[p + 1];
      int under_out = next_label++, over_out = next_label++;
      raw.push_back({{under_in, over_in, under_out, over_out}, +1});
      cur[p] = under_out;
      cur[p + 1] = over_out;
    } else {
      int under_in = cur[p], over_in = cur[p + 1];
      int over_out = next_label++, under_out = next_label++;
      raw.push_back({{under_in, over_out, under_out, over_in}, -1});
      cur[p] = over_out;
      cur[p + 1] = under_out;
    }
  }

  // Plat closure: bottom of each strand rejoins its top.
  UnionFind uf(next_label);
  for (int p = 0; p < strands; ++p) uf.unite(cur[p], initial[p]);

  std::vector<int> dense(next_label, -1);
  int arc_count = 0;
  for (const Crossing& c : raw)
    for (int a : c.arcs) {
      int r = uf.find(a);
      if (dense[r] < 0) dense[r] = arc_count++;
    }
  for (Crossing& c : raw)
    for (int& a : c.arcs) a = dense[uf.find(a)];

  d.crossings = std::move(raw);
  d.arc_count = arc_count;
  d.validate();
  return d;
}

// --- DT codes -----------------------------------------------------------

namespace {

// Counts the faces of the 4-valent map given by per-crossing rotations.
// rot maps each dart to the counterclockwise-next dart at its vertex;
// darts are 2*edge (tail, at visit `edge`) and 2*edge+1 (head).
int count_faces(const std::vector<int>& rot) {
  const int darts = static_cast<int>(rot.size());
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = rot[x ^ 1];  // cross the edge, then turn
    }
  }
  return faces;
}

}  // namespace

Diagram parse_dt(const std::vector<long long>& code) {
  const int n = static_cast<int>(code.size());
  Diagram d;
  d.source_format = SourceFormat::DT;
  if (n == 0) return d;
  if (n > 20)
    fail(ErrorCode::Unsupported, "DT realization supports at most 20 crossings");

  std::vector<char> used(n + 1, 0);
  for (long long v : code) {
    long long a = std::llabs(v);
    if (v == 0 || a % 2 != 0)
      fail(ErrorCode::OddValue, "DT entry " + std::to_string(v) + " is not a nonzero even integer");
    if (a > 2 * n || used[a / 2])
      fail(ErrorCode::InvalidInput,
           "DT code is not a permutation of +-{2,...," + std::to_string(2 * n) + "}");
    used[a / 2] = 1;
  }

  const int visits = 2 * n;
  // Crossing i: odd passage at visit 2i, even passage at visit |code[i]|-1.
  // Edge e runs from visit e to visit (e+1) mod 2n.
  std::vector<int> v_odd(n), v_even(n);
  std::vector<char> odd_is_under(n);
  for (int i = 0; i < n; ++i) {
    v_odd[i] = 2 * i;
    v_even[i] = static_cast<int>(std::llabs(code[i])) - 1;
    odd_is_under[i] = code[i] > 0;
  }

  auto tail_dart = [&](int visit) { return 2 * visit; };
  auto head_dart = [&](int visit) { return 2 * ((visit + visits - 1) % visits) + 1; };

  // Two rotation choices per crossing: the even strand crosses the odd
  // one from one side or the other. Search lexicographically for a
  // genus-0 assignment; the first crossing is pinned, which resolves
  // the reflection ambiguity of DT codes one fixed way.
  std::vector<int> rot(2 * visits);
  std::vector<std::array<int, 4>> ccw(n);
  auto apply = [&](unsigned long mask) {
    for (int i = 0; i < n; ++i) {
      int in1 = head_dart(v_odd[i]), out1 = tail_dart(v_odd[i]);
      int in2 = head_dart(v_even[i]), out2 = tail_dart(v_even[i]);
      if (i > 0 && ((mask >> (i - 1)) & 1))
        ccw[i] = {in1, out2, out1, in2};
      else
        ccw[i] = {in1, in2, out1, out2};
      for (int k = 0; k < 4; ++k) rot[ccw[i][k]] = ccw[i][(k + 1) % 4];
    }
  };

  bool found = false;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    apply(mask);
    if (count_faces(rot) == n + 2) {
      found = true;
      break;
    }
  }
  if (!found)
    fail(ErrorCode::NotRealizable, "DT code admits no planar realization");

  d.crossings.reserve(n);
  for (int i = 0; i < n; ++i) {
    int under_in = odd_is_under[i] ? head_dart(v_odd[i]) : head_dart(v_even[i]);
    int over_in = odd_is_under[i] ? head_dart(v_even[i]) : head_dart(v_odd[i]);
    int k0 = 0;
    while (ccw[i][k0] != under_in) ++k0;
    Crossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = ccw[i][(k0 + k) % 4] / 2;
    c.sign = (ccw[i][(k0 + 1) % 4] == over_in) ? +1 : -1;
    d.crossings.push_back(c);
  }
  d.arc_count = visits;
  d.validate();
  return d;
}

// --- PD -----------------------------------------------------------------

Diagram parse_pd(const std::vector<PdTuple>& tuples) {
  const int n = static_cast<int>(tuples.size());
  Diagram d;
  d.source_format = SourceFormat::PD;
  if (n == 0) return d;

  std::map<long long, int> label_map;
  for (const PdTuple& t : tuples)
    for (long long a : t.arcs) {
      if (a < 0) fail(ErrorCode::InvalidInput, "negative arc label");
      label_map.emplace(a, 0);
    }
  if (static_cast<int>(label_map.size()) != 2 * n)
    fail(ErrorCode::ArcDegree,
         "expected " + std::to_string(2 * n) + " distinct arc labels, found " +
             std::to_string(label_map.size()));
  int next = 0;
  for (auto& [label, idx] : label_map) idx = next++;

  d.crossings.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 4; ++k)
      d.crossings[i].arcs[k] = label_map.at(tuples[i].arcs[k]);
    d.crossings[i].sign = 0;  // inferred below
  }
  d.arc_count = 2 * n;

  // Occurrences per arc.
  std::vector<std::array<std::pair<int, int>, 2>> occ(d.arc_count);
  std::vector<int> occ_count(d.arc_count, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) {
      int a = d.crossings[i].arcs[k];
      if (occ_count[a] >= 2)
        fail(ErrorCode::ArcDegree,
             "arc label appears more than twice: " + std::to_string(a));
      occ[a][occ_count[a]++] = {i, k};
    }
  for (int a = 0; a < d.arc_count; ++a)
    if (occ_count[a] != 2)
      fail(ErrorCode::ArcDegree,
           "arc appears " + std::to_string(occ_count[a]) + " times, expected 2");

  // Infer slot roles (0 = incoming, 1 = outgoing) by propagating the
  // two constraints: an arc's two occurrences have opposite roles, and
  // a crossing's two over slots have opposite roles. Slots 0 and 2 are
  // pinned by the PD convention.
  std::vector<int> role(4 * n, -1);
  auto slot = [&](int c, int k) { return 4 * c + k; };
  std::vector<int> queue;
  auto assign = [&](int s, int r) {
    if (role[s] == -1) {
      role[s] = r;
      queue.push_back(s);
    } else if (role[s] != r) {
      fail(ErrorCode::InconsistentOrientation,
           "arc orientation constraints are contradictory");
    }
  };
  for (int i = 0; i < n; ++i) {
    assign(slot(i, 0), 0);
    assign(slot(i, 2), 1);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int s = queue[qi];
    int c = s / 4, k = s % 4;
    int a = d.crossings[c].arcs[k];
    for (const auto& [oc, ok] : occ[a]) {
      int other = slot(oc, ok);
      if (other != s) assign(other, 1 - role[s]);
    }
    if (k == 1 || k == 3) assign(slot(c, k ^ 2), 1 - role[s]);
  }
  for (int s = 0; s < 4 * n; ++s)
    if (role[s] == -1)
      fail(ErrorCode::MultiComponent,
           "over-strand loop never passes under: extra link component");

  for (int i = 0; i < n; ++i) {
    int inferred = role[slot(i, 1)] == 0 ? +1 : -1;
    if (tuples[i].sign && *tuples[i].sign != inferred)
      fail(ErrorCode::InconsistentOrientation,
           "declared crossing sign contradicts inferred orientation at crossing " +
               std::to_string(i));
    d.crossings[i].sign = inferred;
  }

  // Knot traversal must visit every arc.
  std::vector<char> visited(d.arc_count, 0);
  int arc = 0, steps = 0;
  while (!visited[arc] && steps <= d.arc_count) {
    visited[arc] = 1;
    ++steps;
    int c = -1, k = -1;
    for (const auto& [oc, ok] : occ[arc])
      if (role[slot(oc, ok)] == 0) {
        c = oc;
        k = ok;
      }
    if (c < 0) fail(ErrorCode::InternalInvariant, "arc without incoming slot");
    arc = (k == 0) ? d.crossings[c].arcs[2] : d.crossings[c].arcs[k ^ 2];
  }
  if (std::count(visited.begin(), visited.end(), 1) != d.arc_count)
    fail(ErrorCode::MultiComponent, "PD tuples describe a multi-component link");

  // The tuples claim a counterclockwise order at each crossing; check
  // that these rotations admit a genus-0 (planar) embedding. Dart ids:
  // 2*arc = outgoing end, 2*arc+1 = incoming end.
  {
    std::vector<int> dart_at(4 * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 4; ++k) {
        int a = d.crossings[i].arcs[k];
        dart_at[slot(i, k)] = 2 * a + (role[slot(i, k)] == 0 ? 1 : 0);
      }
    std::vector<int> r(4 * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 4; ++k)
        r[dart_at[slot(i, k)]] = dart_at[slot(i, (k + 1) % 4)];
    if (count_faces(r) != n + 2)
      fail(ErrorCode::InconsistentOrientation,
           "PD rotations do not admit a planar embedding");
  }

  d.validate();
  return d;
}

// --- text formats -------------------------------------------------------

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    out.push_back(comment ? ' ' : ch);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

long long parse_int(const std::string& tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(ErrorCode::InvalidInput, "expected integer, got '" + tok + "'");
  return v;
}

}  // namespace

Diagram parse_braid_text(std::string_view text) {
  auto toks = tokenize(strip_comments(text));
  if (toks.empty()) return parse_braid({}, 1);  // empty file: the unknot
  const std::string& head = toks[0];
  if (head.rfind("strands=", 0) != 0)
    fail(ErrorCode::InvalidInput, "braid input must start with strands=<k>");
  int strands = static_cast<int>(parse_int(head.substr(8)));
  std::vector<int> word;
  for (size_t i = 1; i < toks.size(); ++i)
    word.push_back(static_cast<int>(parse_int(toks[i])));
  return parse_braid(word, strands);
}

Diagram parse_dt_text(std::string_view text) {
  std::string s = strip_comments(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::vector<long long> code;
  for (const std::string& tok : tokenize(s)) code.push_back(parse_int(tok));
  return parse_dt(code);
}

Diagram parse_pd_text(std::string_view text) {
  std::vector<PdTuple> tuples;
  std::istringstream in{std::string(strip_comments(text))};
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::string joined;
    for (const std::string& t : toks) joined += t;
    PdTuple tup;
    size_t pos = 1;
    if (joined.empty() || joined[0] != 'X')
      fail(ErrorCode::InvalidInput, "PD line must start with X: '" + line + "'");
    if (pos < joined.size() && (joined[pos] == 'p' || joined[pos] == 'm')) {
      tup.sign = joined[pos] == 'p' ? +1 : -1;
      ++pos;
    }
    if (pos >= joined.size() || joined[pos] != '[' || joined.back() != ']')
      fail(ErrorCode::InvalidInput, "malformed PD tuple: '" + line + "'");
    std::string body = joined.substr(pos + 1, joined.size() - pos - 2);
    for (char& ch : body)
      if (ch == ',') ch = ' ';
    auto nums = tokenize(body);
    if (nums.size() != 4)
      fail(ErrorCode::InvalidInput, "PD tuple needs 4 arcs: '" + line + "'");
    for (int k = 0; k < 4; ++k) tup.arcs[k] = parse_int(nums[k]);
    tuples.push_back(tup);
  }
  return parse_pd(tuples);
}

std::string to_pd_text(const Diagram& d) {
  std::string out;
  for (const Crossing& c : d.crossings) {
    out += c.sign > 0 ? "Xp[" : "Xm[";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(c.arcs[k]);
    }
    out += "]\n";
  }
  return out;
}

Diagram parse_knot_file(const std::string& path, std::optional<SourceFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  SourceFormat f;
  if (format) {
    f = *format;
  } else {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "braid")
      f = SourceFormat::Braid;
    else if (ext == "dt")
      f = SourceFormat::DT;
    else if (ext == "pd")
      f = SourceFormat::PD;
    else
      fail(ErrorCode::InvalidInput,
           "cannot infer knot format from extension '" + ext +
               "'; pass --format braid|dt|pd");
  }
  switch (f) {
    case SourceFormat::Braid: return parse_braid_text(text);
    case SourceFormat::DT: return parse_dt_text(text);
    case SourceFormat::PD: return parse_pd_text(text);
  }
  fail(ErrorCode::InternalInvariant, "unreachable");
}

std::string diagram_digest(const Diagram& d) {
  std::string payload = to_pd_text(d);
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : payload) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

}  // namespace knotrep
