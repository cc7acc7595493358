#include "knotrep/rep_variety.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "knotrep/dimension.hpp"
#include "knotrep/poly_text.hpp"

namespace knotrep {

RepTarget RepTarget::so(int n) {
  if (n < 2) fail(ErrorCode::InvalidInput, "SO(n) needs n >= 2");
  if (n > 4)
    fail(ErrorCode::Unsupported,
         "SO(" + std::to_string(n) + ") not supported: determinant expansion is capped at n = 4");
  return {TargetKind::SO, n};
}

RepTarget RepTarget::from_name(std::string_view name) {
  if (name == "su2") return su2();
  if (name.size() > 2 && name.substr(0, 2) == "so") {
    int n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 2, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size()) return so(n);
  }
  fail(ErrorCode::Unsupported, "unknown target '" + std::string(name) +
                                   "' (expected su2, so2, so3 or so4)");
}

std::string RepTarget::name() const {
  return kind == TargetKind::SU2 ? "su2" : "so" + std::to_string(n);
}

const char* gauge_name(GaugeKind g) {
  return g == GaugeKind::None ? "none" : "fix1";
}

GaugeKind gauge_from_name(std::string_view name) {
  if (name == "none") return GaugeKind::None;
  if (name == "fix1") return GaugeKind::FixFirstGenerator;
  fail(ErrorCode::Unsupported, "unknown gauge '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> scheme_names(RepTarget t, int gens) {
  std::vector<std::string> names;
  for (int g = 0; g < gens; ++g) {
    if (t.kind == TargetKind::SU2) {
      for (const char* c : {"a", "b", "c", "d"})
        names.push_back(c + std::to_string(g));
    } else {
      for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
          names.push_back("m" + std::to_string(g) + "_" + std::to_string(i) +
                          std::to_string(j));
    }
  }
  return names;
}

// Flattened n x n matrix of polynomials, row major.
using Mat = std::vector<Polynomial>;

Mat identity_mat(int n, int nvars, const MonomialOrder& o) {
  Mat m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = Polynomial::constant(nvars, o, i == j ? 1 : 0);
  return m;
}

Mat generator_mat(int n, int nvars, const MonomialOrder& o, int base, bool transpose) {
  Mat m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int src = transpose ? j * n + i : i * n + j;
      m[i * n + j] = Polynomial::variable(nvars, o, base + src);
    }
  return m;
}

Mat mat_mul(int n, const Mat& a, const Mat& b) {
  Mat out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial acc = Polynomial(a[0].nvars(), a[0].order());
      for (int k = 0; k < n; ++k) acc = acc + a[i * n + k] * b[k * n + j];
      out[i * n + j] = std::move(acc);
    }
  return out;
}

// Leibniz expansion; fine for n <= 4.
Polynomial mat_det(int n, const Mat& m) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Polynomial det(m[0].nvars(), m[0].order());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(m[0].nvars(), m[0].order(),
                                           inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) prod = prod * m[i * n + perm[i]];
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

using Quat = std::array<Polynomial, 4>;

Quat quat_of(int nvars, const MonomialOrder& o, int base, bool conjugate) {
  Quat q;
  for (int k = 0; k < 4; ++k) {
    q[k] = Polynomial::variable(nvars, o, base + k);
    if (conjugate && k > 0) q[k] = -q[k];
  }
  return q;
}

Quat quat_mul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

// Group-defining equations for the block starting at `base`.
void append_block_equations(RepTarget t, int nvars, const MonomialOrder& o,
                            int base, std::vector<Polynomial>& out) {
  if (t.kind == TargetKind::SU2) {
    Polynomial norm(nvars, o);
    for (int k = 0; k < 4; ++k) {
      Polynomial v = Polynomial::variable(nvars, o, base + k);
      norm = norm + v * v;
    }
    out.push_back(norm - Polynomial::constant(nvars, o, 1));
    return;
  }
  const int n = t.n;
  auto entry = [&](int i, int j) {
    return Polynomial::variable(nvars, o, base + i * n + j);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Polynomial dot(nvars, o);
      for (int k = 0; k < n; ++k) dot = dot + entry(k, i) * entry(k, j);
      if (i == j) dot = dot - Polynomial::constant(nvars, o, 1);
      out.push_back(std::move(dot));
    }
  out.push_back(mat_det(n, generator_mat(n, nvars, o, base, false)) -
                Polynomial::constant(nvars, o, 1));
}

std::vector<std::pair<int, Polynomial>> gauge_pins(RepTarget t, int nvars,
                                                   const MonomialOrder& o) {
  std::vector<std::pair<int, Polynomial>> pins;
  auto zero = [&](int v) { pins.emplace_back(v, Polynomial(nvars, o)); };
  if (t.kind == TargetKind::SU2) {
    zero(2);  // c0
    zero(3);  // d0
    return pins;
  }
  const int n = t.n;
  auto idx = [&](int i, int j) { return i * n + j; };
  if (n == 3) {
    // z-axis rotation: last row/column e3, 2x2 rotation block
    zero(idx(0, 2));
    zero(idx(1, 2));
    zero(idx(2, 0));
    zero(idx(2, 1));
    pins.emplace_back(idx(2, 2), Polynomial::constant(nvars, o, 1));
    pins.emplace_back(idx(1, 1), Polynomial::variable(nvars, o, idx(0, 0)));
    pins.emplace_back(idx(1, 0), -Polynomial::variable(nvars, o, idx(0, 1)));
  } else if (n == 4) {
    // two-plane block shape: kill the off-diagonal 2x2 blocks
    for (int i : {0, 1})
      for (int j : {2, 3}) {
        zero(idx(i, j));
        zero(idx(j, i));
      }
  }
  // SO(2) is abelian: conjugation cannot cut anything, no pins.
  return pins;
}

}  // namespace

Ideal group_ideal(RepTarget target) {
  Presentation one;
  one.generator_count = 1;
  return build_rep_ideal(one, target, GaugeKind::None).ideal;
}

RepVarietyModel build_rep_ideal(const Presentation& p, RepTarget target,
                                GaugeKind gauge) {
  p.validate();
  const int vpg = target.vars_per_generator();
  const int nvars = vpg * p.generator_count;
  if (nvars > kMaxVariables)
    fail(ErrorCode::Unsupported,
         "model needs " + std::to_string(nvars) +
             " variables (cap " + std::to_string(kMaxVariables) +
             "); simplify the presentation or shrink the target");

  MonomialOrder order = grevlex_order(nvars);
  std::vector<Polynomial> gens;
  for (int g = 0; g < p.generator_count; ++g)
    append_block_equations(target, nvars, order, g * vpg, gens);

  for (const Word& rel : p.relators) {
    if (target.kind == TargetKind::SU2) {
      Quat acc = {Polynomial::constant(nvars, order, 1), Polynomial(nvars, order),
                  Polynomial(nvars, order), Polynomial(nvars, order)};
      for (int letter : rel)
        acc = quat_mul(acc, quat_of(nvars, order, (std::abs(letter) - 1) * vpg,
                                    letter < 0));
      acc[0] = acc[0] - Polynomial::constant(nvars, order, 1);
      for (Polynomial& comp : acc)
        if (!comp.is_zero()) gens.push_back(std::move(comp));
    } else {
      const int n = target.n;
      Mat acc = identity_mat(n, nvars, order);
      for (int letter : rel)
        acc = mat_mul(n, acc,
                      generator_mat(n, nvars, order, (std::abs(letter) - 1) * vpg,
                                    letter < 0));
      Mat id = identity_mat(n, nvars, order);
      for (int k = 0; k < n * n; ++k) {
        Polynomial comp = acc[k] - id[k];
        if (!comp.is_zero()) gens.push_back(std::move(comp));
      }
    }
  }

  VariableScheme scheme;
  scheme.vars_per_generator = vpg;
  if (gauge == GaugeKind::FixFirstGenerator) {
    scheme.pins = gauge_pins(target, nvars, order);
    for (const auto& [var, value] : scheme.pins)
      gens.push_back(Polynomial::variable(nvars, order, var) - value);
  }

  RepVarietyModel m;
  m.presentation = p;
  m.target = target;
  m.gauge = gauge;
  m.scheme = std::move(scheme);
  m.ideal = Ideal::make(scheme_names(target, p.generator_count), order,
                        std::move(gens));
  return m;
}

Ideal abelian_slice(const RepVarietyModel& m) {
  for (const Word& rel : m.presentation.relators) {
    int exponent_sum = 0;
    for (int letter : rel) exponent_sum += letter > 0 ? 1 : -1;
    if (exponent_sum != 0)
      fail(ErrorCode::RelatorSurvived,
           "relator '" + word_to_text(rel) +
               "' does not vanish when all generators are identified");
  }
  return group_ideal(m.target);
}

DimInvariant variety_dimension(const RepVarietyModel& m, const Budget& budget) {
  DimInvariant inv;
  inv.target = m.target;
  inv.gauge = m.gauge;

  // Substitute the gauge pins away so the computation runs in the
  // free-variable ring.
  const int nvars = m.ideal.nvars;
  std::vector<int> reduced_index(nvars, -1);
  std::vector<char> pinned(nvars, 0);
  for (const auto& [var, value] : m.scheme.pins) pinned[var] = 1;
  std::vector<std::string> kept_names;
  for (int v = 0; v < nvars; ++v)
    if (!pinned[v]) {
      reduced_index[v] = static_cast<int>(kept_names.size());
      kept_names.push_back(m.ideal.var_names[v]);
    }
  const int nk = static_cast<int>(kept_names.size());
  MonomialOrder ok = grevlex_order(nk);

  std::vector<Polynomial> values(nvars);
  for (int v = 0; v < nvars; ++v)
    if (!pinned[v]) values[v] = Polynomial::variable(nk, ok, reduced_index[v]);
  for (const auto& [var, value] : m.scheme.pins) {
    // Pin replacements are constants or signed kept variables.
    if (value.is_constant()) {
      values[var] = Polynomial::constant(
          nk, ok, value.is_zero() ? Rational(0) : value.terms()[0].coef);
    } else {
      const Term& t = value.leading();
      int src = -1;
      for (int v = 0; v < nvars; ++v)
        if (t.mono.exp[v] > 0) src = v;
      if (src < 0 || pinned[src] || t.mono.degree != 1 || value.term_count() != 1)
        fail(ErrorCode::InternalInvariant, "unexpected pin replacement shape");
      values[var] = Polynomial::variable(nk, ok, reduced_index[src]) * t.coef;
    }
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& g : m.ideal.generators) {
    Polynomial image = g.substitute(values, nk, ok);
    if (!image.is_zero()) gens.push_back(std::move(image));
  }
  Ideal effective = Ideal::make(std::move(kept_names), ok, std::move(gens));

  try {
    SplitResult split = split_components(effective, budget);
    for (const Ideal& branch : split.branches) {
      DimensionReport rep = dimension_report(branch, budget);
      inv.dimension_list.push_back(rep.dimension);
      inv.real_radical_caveat = inv.real_radical_caveat || rep.real_radical_caveat;
    }
    std::sort(inv.dimension_list.rbegin(), inv.dimension_list.rend());
    inv.certified = split.fully_split;
    return inv;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeBudgetExceeded) throw;
    inv.budget_exceeded = true;
  }

  try {
    DimensionReport rep = dimension_report(effective, budget);
    inv.dimension_list = {rep.dimension};
    inv.real_radical_caveat = rep.real_radical_caveat;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeBudgetExceeded) throw;
    // dimension_list stays empty: nothing completed
  }
  return inv;
}

std::string model_dump(const RepVarietyModel& m) {
  std::ostringstream out;
  out << "{\"schema\":1,\"target\":\"" << m.target.name() << "\",\"gauge\":\""
      << gauge_name(m.gauge) << "\",\"generators\":" << m.presentation.generator_count
      << ",\"vars_per_generator\":" << m.scheme.vars_per_generator << ",\"pinned\":[";
  for (std::size_t i = 0; i < m.scheme.pins.size(); ++i) {
    if (i) out << ",";
    out << m.scheme.pins[i].first;
  }
  out << "]}\n";
  out << ideal_to_text(m.ideal);
  return out.str();
}

}  // namespace knotrep
