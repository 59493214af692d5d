#include "shrinkcy/surface.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::Mori: return "mori";
    case CatalogKind::Numerical: return "numerical";
    case CatalogKind::ToricStar: return "toric-star";
    case CatalogKind::User: return "user";
  }
  return "?";
}

namespace {

DivisorClass unit_class(const std::string& basis_id, std::size_t dimension,
                        std::size_t index) {
  DivisorClass c{basis_id, std::vector<Int>(dimension, Int(0))};
  c.coeffs[index] = 1;
  return c;
}

// Parse a decimal run out of name[pos...]; returns nullopt if no digits.
std::optional<long> take_uint(const std::string& name, std::size_t& pos) {
  std::size_t start = pos;
  long value = 0;
  while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
    value = value * 10 + (name[pos] - '0');
    if (value > 1000) return std::nullopt;  // nothing legitimate is this big
    ++pos;
  }
  if (pos == start) return std::nullopt;
  return value;
}

struct Shell {
  // surface without its catalog yet
  SurfaceModel m;
};

GramForm hirzebruch_gram(const std::string& basis_id, long n, long blowups) {
  GramForm g;
  g.basis_id = basis_id;
  if (n == 0) {
    g.labels = {"f1", "f2"};
  } else {
    g.labels = {"e", "f"};
  }
  for (long i = 1; i <= blowups; ++i) g.labels.push_back("x" + std::to_string(i));
  const std::size_t d = g.labels.size();
  g.entries.assign(d, std::vector<Int>(d, Int(0)));
  if (n == 0) {
    g.entries[0][1] = g.entries[1][0] = 1;
  } else {
    g.entries[0][0] = -n;
    g.entries[0][1] = g.entries[1][0] = 1;
  }
  for (std::size_t i = 2; i < d; ++i) g.entries[i][i] = -1;
  return g;
}

Shell make_p2() {
  Shell s;
  s.m.name = "P2";
  s.m.basis_id = "P2";
  s.m.gram = GramForm{"P2", {"l"}, {{Int(1)}}};
  s.m.canonical = DivisorClass{"P2", {Int(-3)}};
  return s;
}

Shell make_hirzebruch(long n, long blowups) {
  Shell s;
  std::string name = blowups == 0
                         ? "F" + std::to_string(n)
                         : "Bl" + std::to_string(blowups) + "F" + std::to_string(n);
  s.m.name = name;
  s.m.basis_id = name;
  s.m.gram = hirzebruch_gram(name, n, blowups);
  std::vector<Int> k(s.m.gram.labels.size(), Int(1));
  k[0] = -2;
  k[1] = (n == 0) ? Int(-2) : Int(-(n + 2));
  s.m.canonical = DivisorClass{name, std::move(k)};
  return s;
}

Shell make_del_pezzo(long n) {
  Shell s;
  std::string name = "dP" + std::to_string(n);
  s.m.name = name;
  s.m.basis_id = name;
  GramForm g;
  g.basis_id = name;
  g.labels = {"l"};
  for (long i = 1; i <= n; ++i) g.labels.push_back("x" + std::to_string(i));
  const std::size_t d = g.labels.size();
  g.entries.assign(d, std::vector<Int>(d, Int(0)));
  g.entries[0][0] = 1;
  for (std::size_t i = 1; i < d; ++i) g.entries[i][i] = -1;
  s.m.gram = std::move(g);
  std::vector<Int> k(d, Int(1));
  k[0] = -3;
  s.m.canonical = DivisorClass{name, std::move(k)};
  return s;
}

// Positions of a trailing block of labels x1..xk whose Gram block is
// diag(-1), orthogonal to everything else, with canonical coefficient +1.
// Returns k (possibly 0 when the structure is absent).
std::size_t exceptional_tail(const SurfaceModel& s) {
  const auto& labels = s.gram.labels;
  std::size_t d = labels.size();
  auto is_x_label = [](const std::string& lab) {
    if (lab.size() < 2 || lab[0] != 'x') return false;
    for (std::size_t i = 1; i < lab.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(lab[i]))) return false;
    return true;
  };
  std::size_t head = d;
  while (head > 0 && is_x_label(labels[head - 1])) --head;
  std::size_t k = d - head;
  if (k == 0) return 0;
  for (std::size_t i = 0; i < k; ++i)
    if (labels[head + i] != "x" + std::to_string(i + 1)) return 0;
  for (std::size_t i = head; i < d; ++i) {
    if (s.gram.entries[i][i] != -1) return 0;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i && s.gram.entries[i][j] != 0) return 0;
    if (s.canonical.coeffs[i] != 1) return 0;
  }
  return k;
}

struct ScanTarget {
  Int csq;
  Int kdot;
};

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Depth-first assignment of the x-block so that sum(g_i) = s1 and
// sum(g_i^2) = s2, each g_i in [-b, b]. Integer values make g^2 >= |g|, so
// the running budget prunes hard.
void tail_dfs(std::size_t k, const Int& b, std::vector<Int>& tail, std::size_t i,
              Int s1, Int s2, const std::vector<Int>& head,
              std::vector<std::vector<Int>>& out) {
  Int remaining = Int(static_cast<long>(k - i));
  Int cap2 = remaining * b * b;
  if (s2 < 0 || s2 > cap2) return;
  Int abs_s1 = s1 < 0 ? Int(-s1) : s1;
  if (abs_s1 > remaining * b) return;
  if (s2 < abs_s1) return;
  if (i == k) {
    if (s1 == 0 && s2 == 0) {
      std::vector<Int> full = head;
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
    return;
  }
  for (Int g = -b; g <= b; ++g) {
    tail[i] = g;
    tail_dfs(k, b, tail, i + 1, s1 - g, s2 - g * g, head, out);
  }
}

std::vector<std::vector<Int>> scan_one_target(const SurfaceModel& s,
                                              const Int& bound,
                                              const ScanTarget& target,
                                              std::size_t tail_k) {
  const std::size_t d = s.gram.labels.size();
  std::vector<std::vector<Int>> hits;
  const std::size_t head_d = d - tail_k;
  std::vector<Int> coeffs(d, Int(0));
  // Iterate the head box; the x-block (if any) is solved, not enumerated.
  std::vector<Int> head(head_d, -bound);
  bool done = head_d == 0;
  bool first = true;
  while (!done || first) {
    first = false;
    for (std::size_t i = 0; i < head_d; ++i) coeffs[i] = head[i];
    for (std::size_t i = head_d; i < d; ++i) coeffs[i] = 0;
    DivisorClass c{s.basis_id, coeffs};
    Int h2 = pairing(s.gram, c, c);
    Int kh = pairing(s.gram, s.canonical, c);
    if (tail_k == 0) {
      if (h2 == target.csq && kh == target.kdot)
        hits.push_back(std::vector<Int>(coeffs.begin(), coeffs.end()));
    } else {
      // With C = H + sum(g_i x_i): C^2 = H^2 - sum(g_i^2),
      // K.C = K.H - sum(g_i). Solve for the x-block.
      Int s2 = h2 - target.csq;
      Int s1 = kh - target.kdot;
      std::vector<Int> tail(tail_k, Int(0));
      std::vector<Int> head_part(coeffs.begin(), coeffs.begin() + head_d);
      tail_dfs(tail_k, bound, tail, 0, s1, s2, head_part, hits);
    }
    // advance odometer
    std::size_t pos = 0;
    for (; pos < head_d; ++pos) {
      if (head[pos] < bound) {
        ++head[pos];
        break;
      }
      head[pos] = -bound;
    }
    if (pos == head_d) done = true;
    if (head_d == 0) done = true;
  }
  std::sort(hits.begin(), hits.end(), lex_less);
  return hits;
}

}  // namespace

SurfaceModel builtin_surface(const std::string& name) {
  auto fail = [&]() -> Shell {
    throw ValidationError(
        "unknown surface name '" + name +
        "' (expected P2, F0..F12, dP1..dP8, or Bl1..10F0..8)");
  };
  Shell shell = [&]() -> Shell {
    if (name == "P2") return make_p2();
    if (name.rfind("dP", 0) == 0) {
      std::size_t pos = 2;
      auto n = take_uint(name, pos);
      if (!n || pos != name.size() || *n < 1 || *n > 8) return fail();
      return make_del_pezzo(*n);
    }
    if (name.rfind("Bl", 0) == 0) {
      std::size_t pos = 2;
      auto k = take_uint(name, pos);
      if (!k || pos >= name.size() || name[pos] != 'F') return fail();
      ++pos;
      auto n = take_uint(name, pos);
      if (!n || pos != name.size()) return fail();
      if (*k < 1 || *k > 10 || *n < 0 || *n > 8) return fail();
      return make_hirzebruch(*n, *k);
    }
    if (name.rfind("F", 0) == 0) {
      std::size_t pos = 1;
      auto n = take_uint(name, pos);
      if (!n || pos != name.size() || *n < 0 || *n > 12) return fail();
      return make_hirzebruch(*n, 0);
    }
    return fail();
  }();

  SurfaceModel& m = shell.m;
  validate(m.gram);

  auto add = [&](const DivisorClass& c, CurveRole role) {
    m.catalog.push_back(NamedCurve{render_curve(m, c), c, role});
  };

  if (name == "P2") {
    add(unit_class(m.basis_id, 1, 0), CurveRole::MoriGenerator);
    m.catalog_kind = CatalogKind::Mori;
  } else if (name.rfind("dP", 0) == 0) {
    // lines (numerically: square -1, canonical degree -1), then l
    SurfaceModel probe = m;
    std::size_t tail_k = exceptional_tail(probe);
    auto lines = scan_one_target(probe, Int(3), ScanTarget{Int(-1), Int(-1)}, tail_k);
    for (auto& v : lines)
      add(DivisorClass{m.basis_id, std::move(v)}, CurveRole::MoriGenerator);
    add(unit_class(m.basis_id, m.gram.labels.size(), 0), CurveRole::MoriGenerator);
    m.catalog_kind = CatalogKind::Mori;
  } else if (name.rfind("Bl", 0) == 0) {
    for (auto& c : candidate_negative_classes(m, Int(3)))
      add(c, CurveRole::NumericalCandidate);
    m.catalog_kind = CatalogKind::Numerical;
  } else {
    // Hirzebruch: the two torus-fixed generators
    add(unit_class(m.basis_id, 2, 0), CurveRole::MoriGenerator);
    add(unit_class(m.basis_id, 2, 1), CurveRole::MoriGenerator);
    m.catalog_kind = CatalogKind::Mori;
  }
  return m;
}

DivisorClass parse_curve(const SurfaceModel& s, const std::string& text) {
  const auto& labels = s.gram.labels;
  std::vector<Int> coeffs(labels.size(), Int(0));
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto col = [&]() { return static_cast<int>(i) + 1; };

  skip_ws();
  if (i == text.size()) throw ParseError("empty curve expression", 0, col());
  int sign = 1;
  if (text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    skip_ws();
    if (i == text.size())
      throw ParseError("expected a term after sign", 0, col());
    // optional multiplicity
    Int mult = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      mult = Int(text.substr(start, i - start));
      skip_ws();
    }
    // longest basis label matching here
    std::size_t best = labels.size();
    std::size_t best_len = 0;
    for (std::size_t li = 0; li < labels.size(); ++li) {
      const std::string& lab = labels[li];
      if (lab.size() > best_len && text.compare(i, lab.size(), lab) == 0) {
        best = li;
        best_len = lab.size();
      }
    }
    if (best == labels.size())
      throw ParseError("expected a basis label of '" + s.basis_id + "'", 0, col());
    i += best_len;
    coeffs[best] += Int(sign) * mult;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+') sign = 1;
    else if (text[i] == '-') sign = -1;
    else throw ParseError("expected '+' or '-'", 0, col());
    ++i;
  }
  return DivisorClass{s.basis_id, std::move(coeffs)};
}

std::string render_curve(const SurfaceModel& s, const DivisorClass& c) {
  if (c.basis_id != s.basis_id) throw BasisMismatchError(s.basis_id, c.basis_id);
  if (c.coeffs.size() != s.gram.labels.size())
    throw ValidationError("render_curve: coefficient count mismatch");
  std::string out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    const Int& v = c.coeffs[i];
    if (v == 0) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? "-" : "+";
    }
    Int a = v < 0 ? Int(-v) : v;
    if (a != 1) out += a.str();
    out += s.gram.labels[i];
  }
  if (out.empty()) out = "0";
  return out;
}

Int curve_square(const SurfaceModel& s, const DivisorClass& c) {
  return pairing(s.gram, c, c);
}

Int k_dot(const SurfaceModel& s, const DivisorClass& c) {
  return pairing(s.gram, s.canonical, c);
}

Int k_squared(const SurfaceModel& s) {
  return pairing(s.gram, s.canonical, s.canonical);
}

Rational adjunction_genus(const SurfaceModel& s, const DivisorClass& c) {
  return rat(Int(curve_square(s, c) + k_dot(s, c)), Int(2)) + 1;
}

std::vector<DivisorClass> candidate_negative_classes(const SurfaceModel& s,
                                                     const Int& bound) {
  if (bound < 0) throw ValidationError("candidate scan needs bound >= 0");
  std::size_t tail_k = exceptional_tail(s);
  const std::size_t d = s.gram.labels.size();
  if (tail_k == 0 && d > 6)
    throw Error("candidate scan on rank " + std::to_string(d) +
                " basis without an x-block would not terminate usefully");
  const ScanTarget groups[] = {
      {Int(-1), Int(-1)}, {Int(-2), Int(0)}, {Int(0), Int(-2)}};
  std::vector<DivisorClass> out;
  for (const auto& t : groups) {
    for (auto& v : scan_one_target(s, bound, t, tail_k))
      out.push_back(DivisorClass{s.basis_id, std::move(v)});
  }
  // Always keep a negative section if the basis has one.
  for (std::size_t i = 0; i < d; ++i) {
    if (s.gram.labels[i] != "e") continue;
    DivisorClass e = unit_class(s.basis_id, d, i);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    break;
  }
  return out;
}

}  // namespace shrinkcy
