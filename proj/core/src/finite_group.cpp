#include "knotrep/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace knotrep {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

int FiniteGroup::element_index(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return -1;
  return static_cast<int>(it - elements.begin());
}

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<Perm> gens,
                                         std::string name,
                                         std::size_t max_order) {
  if (degree < 1) fail(ErrorCode::InvalidInput, "group degree must be >= 1");
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      fail(ErrorCode::InvalidInput, "generator degree mismatch");
    std::vector<char> hit(degree, 0);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x])
        fail(ErrorCode::InvalidInput, "generator is not a permutation");
      hit[x] = 1;
    }
  }

  std::set<Perm> seen;
  std::deque<Perm> queue;
  seen.insert(perm_identity(degree));
  queue.push_back(perm_identity(degree));
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = perm_compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > max_order)
          fail(ErrorCode::BudgetExceeded,
               "group order exceeds " + std::to_string(max_order));
        queue.push_back(std::move(next));
      }
    }
  }

  FiniteGroup out;
  out.degree = degree;
  out.name = std::move(name);
  out.generators = std::move(gens);
  out.elements.assign(seen.begin(), seen.end());  // set iteration is sorted
  out.inverse_of.resize(out.elements.size());
  for (size_t i = 0; i < out.elements.size(); ++i) {
    int j = out.element_index(perm_inverse(out.elements[i]));
    if (j < 0) fail(ErrorCode::InternalInvariant, "inverse escaped the table");
    out.inverse_of[i] = j;
  }
  return out;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "C<n> needs n >= 1");
  Perm rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return FiniteGroup::from_generators(n, {rot}, "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 2) fail(ErrorCode::InvalidInput, "D<n> needs n >= 2");
  Perm rot(n), flip(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return FiniteGroup::from_generators(n, {rot, flip}, "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "S<n> needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm swap01 = perm_identity(n);
    std::swap(swap01[0], swap01[1]);
    Perm rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    gens = {swap01, rot};
  }
  return FiniteGroup::from_generators(n, gens, "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 3) fail(ErrorCode::InvalidInput, "A<n> needs n >= 3");
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Perm c = perm_identity(n);
    c[i] = i + 1;
    c[i + 1] = i + 2;
    c[i + 2] = i;
    gens.push_back(c);
  }
  return FiniteGroup::from_generators(n, gens, "A" + std::to_string(n));
}

FiniteGroup group_by_name(std::string_view name) {
  if (name.size() < 2)
    fail(ErrorCode::InvalidInput, "unknown group name '" + std::string(name) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size())
    fail(ErrorCode::InvalidInput, "unknown group name '" + std::string(name) + "'");
  switch (name[0]) {
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    case 'S': return symmetric_group(n);
    case 'A': return alternating_group(n);
    default:
      fail(ErrorCode::InvalidInput, "unknown group family '" + std::string(1, name[0]) + "'");
  }
}

FiniteGroup group_from_cycles_text(std::string_view text, std::string name) {
  std::vector<std::vector<std::vector<int>>> perms_cycles;
  int max_point = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    while (i < line.size()) {
      if (line[i] != '(')
        fail(ErrorCode::InvalidInput, "expected '(' in cycle notation: " + line);
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < line.size() && line[i] != ')') {
        int v = 0;
        size_t start = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
          v = v * 10 + (line[i] - '0');
          ++i;
        }
        if (i == start)
          fail(ErrorCode::InvalidInput, "expected point number in: " + line);
        if (v < 1) fail(ErrorCode::InvalidInput, "points are 1-based");
        cyc.push_back(v);
        max_point = std::max(max_point, v);
        skip_ws();
        if (i < line.size() && line[i] == ',') {
          ++i;
          skip_ws();
        }
      }
      if (i >= line.size())
        fail(ErrorCode::InvalidInput, "unterminated cycle in: " + line);
      ++i;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    perms_cycles.push_back(std::move(cycles));
  }
  if (max_point == 0) max_point = 1;

  std::vector<Perm> gens;
  for (const auto& cycles : perms_cycles) {
    Perm p = perm_identity(max_point);
    std::vector<char> used(max_point, 0);
    for (const auto& cyc : cycles)
      for (size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
        if (used[from])
          fail(ErrorCode::InvalidInput, "point repeated across cycles");
        used[from] = 1;
        p[from] = to;
      }
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_generators(max_point, std::move(gens), std::move(name));
}

std::vector<std::pair<int, int>> conjugacy_class_reps(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<char> assigned(n, 0);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    int size = 0;
    for (int h = 0; h < n; ++h) {
      Perm conj = perm_compose(
          perm_compose(g.elements[h], g.elements[i]),
          g.elements[g.inverse_of[h]]);
      int j = g.element_index(conj);
      if (j < 0) fail(ErrorCode::InternalInvariant, "conjugate escaped the table");
      if (!assigned[j]) {
        assigned[j] = 1;
        ++size;
      }
    }
    out.emplace_back(i, size);
  }
  return out;
}

}  // namespace knotrep
