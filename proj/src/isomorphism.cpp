#include "cospectra/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cospectra/errors.hpp"

namespace cospectra {

namespace {

using ColorVec = std::vector<int>;

// One round of joint refinement: new color = (old color, sorted multiset of
// neighbor colors), with ids assigned from a signature table shared by both
// graphs so colors stay comparable across them.
ColorVec refine_round(const Graph& g, const ColorVec& colors,
                      std::map<std::vector<int>, int>& table) {
  const int n = g.order();
  ColorVec next(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sig;
    sig.push_back(colors[v]);
    std::vector<int> nbr;
    for (int u = 0; u < n; ++u)
      if (g.edge(v, u)) nbr.push_back(colors[u]);
    std::sort(nbr.begin(), nbr.end());
    sig.insert(sig.end(), nbr.begin(), nbr.end());
    auto [it, inserted] = table.emplace(std::move(sig), static_cast<int>(table.size()));
    next[v] = it->second;
  }
  return next;
}

std::vector<int> color_histogram(const ColorVec& colors, int num_colors) {
  std::vector<int> h(num_colors, 0);
  for (int c : colors) ++h[c];
  return h;
}

struct Refined {
  ColorVec g_colors, h_colors;
  int num_colors = 0;
  bool compatible = true;
  std::string certificate;
};

Refined joint_refinement(const Graph& g, const Graph& h) {
  Refined out;
  const int n = g.order();
  // Round 0: color by degree.
  {
    std::map<std::vector<int>, int> table;
    out.g_colors.resize(n);
    out.h_colors.resize(n);
    for (int v = 0; v < n; ++v) {
      auto [it, ins] = table.emplace(std::vector<int>{g.degree(v)}, static_cast<int>(table.size()));
      out.g_colors[v] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      auto [it, ins] = table.emplace(std::vector<int>{h.degree(v)}, static_cast<int>(table.size()));
      out.h_colors[v] = it->second;
    }
    out.num_colors = static_cast<int>(table.size());
  }
  for (int round = 1; round <= n; ++round) {
    if (color_histogram(out.g_colors, out.num_colors) !=
        color_histogram(out.h_colors, out.num_colors)) {
      out.compatible = false;
      out.certificate = "refinement round " + std::to_string(round - 1) +
                        " produces different color histograms";
      return out;
    }
    std::map<std::vector<int>, int> table;
    ColorVec ng = refine_round(g, out.g_colors, table);
    ColorVec nh = refine_round(h, out.h_colors, table);
    const int nc = static_cast<int>(table.size());
    // Class counts never shrink; stable once they stop growing.
    const bool stable = nc == out.num_colors;
    out.g_colors = std::move(ng);
    out.h_colors = std::move(nh);
    out.num_colors = nc;
    if (stable) break;
  }
  if (color_histogram(out.g_colors, out.num_colors) !=
      color_histogram(out.h_colors, out.num_colors)) {
    out.compatible = false;
    out.certificate = "stable refinement produces different color histograms";
  }
  return out;
}

struct Searcher {
  const Graph& g;
  const Graph& h;
  const Refined& ref;
  std::vector<int> order;    // g-vertices, most constrained color class first
  std::vector<int> mapping;  // g index -> h index, -1 while unassigned
  std::vector<bool> used;    // h side

  Searcher(const Graph& g_, const Graph& h_, const Refined& ref_) : g(g_), h(h_), ref(ref_) {
    const int n = g.order();
    std::vector<int> class_size(ref.num_colors, 0);
    for (int c : ref.g_colors) ++class_size[c];
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const int ca = class_size[ref.g_colors[a]], cb = class_size[ref.g_colors[b]];
      if (ca != cb) return ca < cb;
      return a < b;
    });
    mapping.assign(n, -1);
    used.assign(n, false);
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int cand = 0; cand < h.order(); ++cand) {
      if (used[cand] || ref.h_colors[cand] != ref.g_colors[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        if (g.edge(v, u) != h.edge(cand, mapping[u])) ok = false;
      }
      if (!ok) continue;
      mapping[v] = cand;
      used[cand] = true;
      if (run(depth + 1)) return true;
      mapping[v] = -1;
      used[cand] = false;
    }
    return false;
  }
};

std::string perm_str(const std::vector<int>& perm) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) out << " ";
    out << perm[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

Verdict is_isomorphic(const Graph& g, const Graph& h, const IsoOptions& opts) {
  Verdict v;
  v.claim = "isomorphic";
  if (g.order() != h.order()) {
    v.holds = false;
    v.witness = "orders differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order());
    return v;
  }
  if (g.order() > opts.exact_bound)
    throw OrderTooLarge("order " + std::to_string(g.order()) + " exceeds exact search bound " +
                        std::to_string(opts.exact_bound));
  const Refined ref = joint_refinement(g, h);
  if (!ref.compatible) {
    v.holds = false;
    v.witness = ref.certificate;
    return v;
  }
  Searcher search(g, h, ref);
  if (search.run(0)) {
    v.holds = true;
    v.witness_permutation = search.mapping;
    v.witness = "witness permutation " + perm_str(search.mapping);
    return v;
  }
  v.holds = false;
  v.witness = "backtracking search exhausted with compatible refined partitions";
  return v;
}

CertificateComparison certificate_comparison(const Graph& g, const Graph& h) {
  CertificateComparison out;
  const DegreeSummary dg = degree_data(g), dh = degree_data(h);
  out.degrees_equal =
      g.order() == h.order() && dg.degree_sequence == dh.degree_sequence;
  out.charpoly_equal =
      g.order() == h.order() && char_poly(g.adjacency()) == char_poly(h.adjacency());
  out.proved_nonisomorphic = !out.degrees_equal || !out.charpoly_equal;
  std::ostringstream text;
  text << "certificate comparison: degree sequences "
       << (out.degrees_equal ? "equal" : "differ") << ", characteristic polynomials "
       << (out.charpoly_equal ? "equal" : "differ");
  if (out.proved_nonisomorphic)
    text << " (non-isomorphism proved)";
  else
    text << " (inconclusive)";
  out.text = text.str();
  return out;
}

}  // namespace cospectra
