#include "coxalt/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace coxalt {

int AltComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool AltComplex::pure() const {
  for (const auto& f : facets)
    if (static_cast<int>(f.size()) - 1 != dimension()) return false;
  return true;
}

bool AltComplex::balanced() const {
  for (const auto& f : facets) {
    std::set<int> colors;
    for (int v : f) colors.insert(vertex_color[v]);
    if (colors.size() != f.size()) return false;
  }
  return true;
}

AltComplex build_complex(const AltGroup& alt) {
  int n = alt.rank();  // generators s_0..s_{n-1}, so R = r_1..r_{n-1}
  if (n - 1 < 2) throw Error("RANK_TOO_SMALL: the complex needs |R| >= 2");
  AltComplex c;

  // one vertex per coset of W+_{R minus {r}} per color r
  std::vector<std::vector<int>> vertex_of_elem;  // [color][plus index] -> vertex id
  for (int color = 1; color < n; ++color) {
    c.color_names.push_back("r" + std::to_string(color));
    std::set<int> J;
    for (int i = 1; i < n; ++i)
      if (i != color) J.insert(i);
    std::vector<int> sub = alt.alt_parabolic(J);
    std::vector<int> vid(alt.size(), -1);
    for (int p = 0; p < alt.size(); ++p) {
      if (vid[p] >= 0) continue;
      int id = static_cast<int>(c.vertex_color.size());
      std::vector<int> members;
      for (int y : sub) {
        int q = alt.multiply(p, y);
        if (vid[q] < 0) {
          vid[q] = id;
          members.push_back(q);
        }
      }
      std::sort(members.begin(), members.end());
      c.vertex_color.push_back(color - 1);
      c.vertex_members.push_back(std::move(members));
    }
    vertex_of_elem.push_back(std::move(vid));
  }

  for (int p = 0; p < alt.size(); ++p) {
    std::vector<int> facet;
    for (size_t color = 0; color < vertex_of_elem.size(); ++color)
      facet.push_back(vertex_of_elem[color][p]);
    std::sort(facet.begin(), facet.end());
    c.facets.push_back(std::move(facet));
  }
  return c;
}

AltComplex type_select(const AltComplex& c, const std::vector<int>& colors) {
  std::set<int> keep(colors.begin(), colors.end());
  AltComplex out;
  std::vector<int> new_id(c.vertex_color.size(), -1);
  std::map<int, int> color_map;
  for (int col : keep) {
    color_map[col] = static_cast<int>(out.color_names.size());
    out.color_names.push_back(c.color_names[col]);
  }
  for (size_t v = 0; v < c.vertex_color.size(); ++v) {
    if (!keep.count(c.vertex_color[v])) continue;
    new_id[v] = static_cast<int>(out.vertex_color.size());
    out.vertex_color.push_back(color_map[c.vertex_color[v]]);
    out.vertex_members.push_back(c.vertex_members[v]);
  }
  std::set<std::vector<int>> seen;
  for (const auto& f : c.facets) {
    std::vector<int> restricted;
    for (int v : f)
      if (new_id[v] >= 0) restricted.push_back(new_id[v]);
    if (restricted.empty()) continue;
    std::sort(restricted.begin(), restricted.end());
    if (seen.insert(restricted).second) out.facets.push_back(std::move(restricted));
  }
  return out;
}

std::string complex_facets_text(const AltComplex& c) {
  std::vector<std::string> lines;
  for (const auto& f : c.facets) {
    std::ostringstream line;
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) line << " ";
      line << f[i] << ":" << c.color_names[c.vertex_color[f[i]]];
    }
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

SmithResult smith_normal_form(std::vector<std::vector<Int>> m) {
  SmithResult res;
  if (m.empty() || m[0].empty()) return res;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // smallest nonzero pivot by absolute value
    size_t pr = rows, pc = cols;
    Int best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;
    std::swap(m[r], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = r + 1; i < rows && clean; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) {  // remainder became the smaller pivot
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (size_t j = c + 1; j < cols && clean; ++j) {
        if (m[r][j] == 0) continue;
        Int q = m[r][j] / m[r][c];
        for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
          clean = false;
        }
      }
    }
    res.diagonal.push_back(abs(m[r][c]));
    ++res.rank;
    ++r;
    ++c;
  }
  return res;
}

Homology homology(const AltComplex& c) {
  int dim = c.dimension();
  if (dim < 0) return {};
  // all faces by dimension, from the facets
  std::vector<std::set<std::vector<int>>> faces(dim + 1);
  for (const auto& f : c.facets) {
    int k = static_cast<int>(f.size());
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (int b = 0; b < k; ++b)
        if ((mask >> b) & 1) face.push_back(f[b]);
      faces[face.size() - 1].insert(face);
    }
  }
  std::vector<std::vector<std::vector<int>>> list(dim + 1);
  std::vector<std::map<std::vector<int>, int>> pos(dim + 1);
  for (int d = 0; d <= dim; ++d)
    for (const auto& f : faces[d]) {
      pos[d][f] = static_cast<int>(list[d].size());
      list[d].push_back(f);
    }

  // boundary_k: C_k -> C_{k-1}; boundary_0 is the augmentation to Z
  std::vector<SmithResult> snf(dim + 2);
  {
    std::vector<std::vector<Int>> aug(1, std::vector<Int>(list[0].size(), 1));
    snf[0] = smith_normal_form(std::move(aug));
  }
  for (int d = 1; d <= dim; ++d) {
    std::vector<std::vector<Int>> b(list[d - 1].size(), std::vector<Int>(list[d].size(), 0));
    for (size_t j = 0; j < list[d].size(); ++j) {
      const std::vector<int>& f = list[d][j];
      int sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        b[pos[d - 1][sub]][j] = sign;
        sign = -sign;
      }
    }
    snf[d] = smith_normal_form(std::move(b));
  }

  Homology h;
  for (int d = 0; d <= dim; ++d) {
    long kernel = static_cast<long>(list[d].size()) - snf[d].rank;
    long image = d == dim ? 0 : snf[d + 1].rank;
    h.reduced_betti.push_back(kernel - image);
    if (d < dim)
      for (const Int& inv : snf[d + 1].diagonal)
        if (inv != 1) h.torsion_free = false;
  }
  return h;
}

AltComplex build_w_complex_without_s0(const GroupTable& g) {
  int n = g.rank();
  AltComplex c;
  std::vector<std::vector<int>> vertex_of_elem;
  for (int color = 1; color < n; ++color) {
    c.color_names.push_back("s" + std::to_string(color));
    std::set<int> J;  // S minus {s_color}
    for (int i = 0; i < n; ++i)
      if (i != color) J.insert(i);
    std::vector<int> vid(g.size(), -1);
    for (int w = 0; w < g.size(); ++w) {
      if (vid[w] >= 0) continue;
      int id = static_cast<int>(c.vertex_color.size());
      // the coset w W_J by right multiplication closure
      std::vector<int> members;
      std::vector<int> stack{w};
      vid[w] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        members.push_back(x);
        for (int i : J) {
          int y = g.right(x, i);
          if (vid[y] < 0) {
            vid[y] = id;
            stack.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      c.vertex_color.push_back(color - 1);
      c.vertex_members.push_back(std::move(members));
    }
    vertex_of_elem.push_back(std::move(vid));
  }
  std::set<std::vector<int>> seen;
  for (int w = 0; w < g.size(); ++w) {
    std::vector<int> facet;
    for (size_t color = 0; color < vertex_of_elem.size(); ++color)
      facet.push_back(vertex_of_elem[color][w]);
    std::sort(facet.begin(), facet.end());
    if (seen.insert(facet).second) c.facets.push_back(std::move(facet));
  }
  return c;
}

bool complexes_isomorphic_via_tau(const AltGroup& alt, std::string* detail) {
  const GroupTable& g = alt.group();
  AltComplex plus = build_complex(alt);
  AltComplex sel = build_w_complex_without_s0(g);

  auto fail = [&](const std::string& msg) {
    if (detail) *detail = msg;
    return false;
  };

  if (plus.vertex_color.size() != sel.vertex_color.size())
    return fail("vertex counts differ");
  if (plus.facets.size() != sel.facets.size()) return fail("facet counts differ");

  // tau maps the coset w W_{S minus s_i} onto tau(w) W+_{R minus r_i}; build
  // the vertex map by applying tau to the members
  std::map<std::vector<int>, int> plus_vertex_by_members;
  for (size_t v = 0; v < plus.vertex_members.size(); ++v)
    plus_vertex_by_members[plus.vertex_members[v]] = static_cast<int>(v);

  std::vector<int> image(sel.vertex_members.size(), -1);
  for (size_t v = 0; v < sel.vertex_members.size(); ++v) {
    std::set<int> tau_members;
    for (int w : sel.vertex_members[v]) tau_members.insert(alt.tau(w));
    std::vector<int> key(tau_members.begin(), tau_members.end());
    auto it = plus_vertex_by_members.find(key);
    if (it == plus_vertex_by_members.end())
      return fail("tau image of a coset is not a W+ coset");
    if (plus.vertex_color[it->second] != sel.vertex_color[v])
      return fail("tau image has the wrong color");
    image[v] = it->second;
  }
  std::set<int> hit(image.begin(), image.end());
  if (hit.size() != image.size()) return fail("tau vertex map is not injective");

  std::set<std::vector<int>> plus_facets(plus.facets.begin(), plus.facets.end());
  for (const auto& f : sel.facets) {
    std::vector<int> mapped;
    for (int v : f) mapped.push_back(image[v]);
    std::sort(mapped.begin(), mapped.end());
    if (!plus_facets.count(mapped)) return fail("a facet does not map to a facet");
  }
  return true;
}

}  // namespace coxalt
