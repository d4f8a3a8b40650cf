#include "snark/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace snark {

namespace {

// Stable 1-WL refinement. Colours are normalized to 0..c-1; new colour ids
// are ordered by (old colour, neighbourhood signature), which keeps the
// refinement isomorphism-invariant.
std::vector<int> refine(const CubicMultigraph& g, std::vector<int> colour) {
  int n = g.n();
  for (;;) {
    int classes = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> into(classes, 0);
      for (auto [id, w] : g.incident(v)) into[colour[w]] += g.edge(id).mult;
      sig[v].reserve(classes + 1);
      sig[v].push_back(colour[v]);
      sig[v].insert(sig[v].end(), into.begin(), into.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n, 0);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (next == colour) return colour;
    colour = std::move(next);
  }
}

bool is_discrete(const std::vector<int>& colour) {
  int n = static_cast<int>(colour.size());
  if (n == 0) return true;
  return *std::max_element(colour.begin(), colour.end()) == n - 1;
}

std::vector<std::uint8_t> encode_under(const CubicMultigraph& g, const std::vector<int>& label) {
  int n = g.n();
  std::vector<std::uint8_t> mat(static_cast<size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    if (e.mult > 255) throw ContractViolation("multiplicity too large to encode");
    int a = label[e.u], b = label[e.v];
    mat[static_cast<size_t>(a) * n + b] = static_cast<std::uint8_t>(e.mult);
    mat[static_cast<size_t>(b) * n + a] = static_cast<std::uint8_t>(e.mult);
  }
  std::vector<std::uint8_t> enc;
  enc.reserve(1 + n * (n - 1) / 2);
  enc.push_back(static_cast<std::uint8_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) enc.push_back(mat[static_cast<size_t>(i) * n + j]);
  return enc;
}

struct Search {
  const CubicMultigraph& g;
  std::vector<std::uint8_t> best;
  std::vector<int> best_label;
  bool have_best = false;

  void run(std::vector<int> colour) {
    colour = refine(g, std::move(colour));
    if (is_discrete(colour)) {
      auto enc = encode_under(g, colour);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_label = colour;
        have_best = true;
      }
      return;
    }
    // first non-singleton class
    int n = g.n();
    int classes = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<int> count(classes, 0);
    for (int c : colour) ++count[c];
    int target = 0;
    while (count[target] == 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      std::vector<int> child(colour);
      // v becomes its own class, placed ahead of the rest of its cell
      for (int w = 0; w < n; ++w)
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const CubicMultigraph& g) {
  if (g.n() == 0) return {};
  // seed classes by degree
  std::vector<int> degs;
  for (int v = 0; v < g.n(); ++v) degs.push_back(g.degree(v));
  std::vector<int> uniq = degs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> colour(g.n());
  for (int v = 0; v < g.n(); ++v)
    colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
  Search s{g, {}, {}, false};
  s.run(std::move(colour));
  return s.best_label;
}

CanonicalForm canonical_form(const CubicMultigraph& g) {
  CanonicalForm f;
  f.n = g.n();
  if (g.n() == 0) {
    f.encoding = {0};
    return f;
  }
  f.encoding = encode_under(g, canonical_labeling(g));
  return f;
}

bool is_isomorphic(const CubicMultigraph& a, const CubicMultigraph& b) {
  if (a.n() != b.n() || a.m() != b.m() || a.instance_count() != b.instance_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string canonical_digest(const CubicMultigraph& g) {
  auto form = canonical_form(g);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : form.encoding) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace snark
