#include "crn/network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "crn/lp.hpp"

namespace crn {

void ReactionNetwork::validate() const {
  int s = num_species(), m = num_complexes();
  std::set<std::vector<int>> seen;
  std::vector<bool> used(s, false);
  for (const auto& y : complexes) {
    if (static_cast<int>(y.size()) != s) throw std::invalid_argument("complex length != species count");
    for (int e : y)
      if (e < 0) throw std::invalid_argument("complex exponent negative");
    if (!seen.insert(y).second) throw std::invalid_argument("duplicate complex");
    for (int i = 0; i < s; ++i)
      if (y[i] > 0) used[i] = true;
  }
  for (int i = 0; i < s; ++i)
    if (!used[i]) throw std::invalid_argument("species never used: " + species[i]);
  std::set<std::string> names;
  for (const auto& rx : reactions) {
    if (rx.educt < 0 || rx.educt >= m || rx.product < 0 || rx.product >= m)
      throw std::invalid_argument("reaction complex index out of range");
    if (rx.educt == rx.product) throw std::invalid_argument("self-loop reaction");
    if (!names.insert(rx.rate).second) throw std::invalid_argument("duplicate rate name: " + rx.rate);
  }
}

IntMat ReactionNetwork::exponent_matrix() const {
  IntMat y(num_complexes(), num_species());
  for (int i = 0; i < num_complexes(); ++i)
    for (int j = 0; j < num_species(); ++j) y(i, j) = complexes[i][j];
  return y;
}

NetworkMatrices build_matrices(const ReactionNetwork& net, const RateAssignment& rates) {
  net.validate();
  int m = net.num_complexes(), r = net.num_reactions();
  NetworkMatrices out;
  out.Y = net.exponent_matrix();
  out.A_kappa = RatMat(m, m);
  out.incidence = IntMat(m, r);
  out.doubling = IntMat(m, r);
  out.k.resize(r);
  for (int j = 0; j < r; ++j) {
    const Reaction& rx = net.reactions[j];
    auto it = rates.find(rx.rate);
    if (it == rates.end()) throw std::invalid_argument("missing rate value: " + rx.rate);
    if (sign_of(it->second) <= 0) throw std::invalid_argument("rate must be positive: " + rx.rate);
    out.k[j] = it->second;
    out.A_kappa(rx.educt, rx.product) += it->second;
    out.A_kappa(rx.educt, rx.educt) -= it->second;
    out.incidence(rx.educt, j) = -1;
    out.incidence(rx.product, j) = 1;
    out.doubling(rx.educt, j) = 1;
  }
  RatMat yt = to_rational(out.Y).transposed();
  out.Sigma = yt * out.A_kappa.transposed();
  out.N = out.Y.transposed() * out.incidence;
  out.educt = out.Y.transposed() * out.doubling;
  return out;
}

std::vector<Rat> eval_monomials(const IntMat& exponents, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != exponents.cols())
    throw std::invalid_argument("eval_monomials: length mismatch");
  for (const Rat& v : x)
    if (sign_of(v) <= 0) throw std::invalid_argument("eval_monomials: x must be positive");
  std::vector<Rat> out(exponents.rows(), Rat(1));
  for (int p = 0; p < exponents.rows(); ++p)
    for (int i = 0; i < exponents.cols(); ++i)
      if (exponents(p, i) != 0) out[p] *= pow_rat(x[i], exponents(p, i).get_si());
  return out;
}

std::vector<double> eval_monomials(const IntMat& exponents, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != exponents.cols())
    throw std::invalid_argument("eval_monomials: length mismatch");
  std::vector<double> out(exponents.rows(), 1.0);
  for (int p = 0; p < exponents.rows(); ++p)
    for (int i = 0; i < exponents.cols(); ++i)
      if (exponents(p, i) != 0) out[p] *= std::pow(x[i], exponents(p, i).get_d());
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Tarjan SCCs; returns component id per vertex, components numbered in
// reverse topological order of discovery.
std::vector<int> strong_components(int n, const std::vector<std::vector<int>>& adj, int& count) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(n, false);
  int next = 0;
  count = 0;
  std::function<void(int)> dfs = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) dfs(v);
  return comp;
}

bool weakly_connected(int m, const std::vector<std::pair<int, int>>& edges, int from, int to) {
  UnionFind uf(m);
  for (auto [a, b] : edges) uf.unite(a, b);
  return uf.find(from) == uf.find(to);
}

}  // namespace

GraphSummary graph_summary(const ReactionNetwork& net) {
  net.validate();
  GraphSummary out;
  int m = net.num_complexes(), s = net.num_species(), r = net.num_reactions();
  if (m == 0) {
    out.conservation = IntMat(s, 0);
    return out;
  }

  std::vector<std::vector<int>> adj(m);
  for (const auto& rx : net.reactions) adj[rx.educt].push_back(rx.product);

  UnionFind uf(m);
  for (const auto& rx : net.reactions) uf.unite(rx.educt, rx.product);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < m; ++v) classes[uf.find(v)].push_back(v);
  for (auto& [root, members] : classes) {
    std::vector<int> c;
    for (int v : members) c.push_back(v + 1);
    out.linkage_classes.push_back(std::move(c));
  }
  std::sort(out.linkage_classes.begin(), out.linkage_classes.end());
  out.linkage_class_count = static_cast<int>(out.linkage_classes.size());

  int scc_count = 0;
  std::vector<int> comp = strong_components(m, adj, scc_count);
  std::vector<bool> terminal(scc_count, true);
  for (int v = 0; v < m; ++v)
    for (int w : adj[v])
      if (comp[w] != comp[v]) terminal[comp[v]] = false;
  std::vector<std::vector<int>> scc_members(scc_count);
  for (int v = 0; v < m; ++v) scc_members[comp[v]].push_back(v);
  for (int c = 0; c < scc_count; ++c) {
    if (!terminal[c]) continue;
    std::vector<int> t;
    for (int v : scc_members[c]) t.push_back(v + 1);
    std::sort(t.begin(), t.end());
    out.terminal_sccs.push_back(std::move(t));
  }
  std::sort(out.terminal_sccs.begin(), out.terminal_sccs.end());

  // Integer stoichiometric matrix, independent of rate values.
  IntMat n_mat(s, r);
  for (int j = 0; j < r; ++j) {
    const Reaction& rx = net.reactions[j];
    for (int i = 0; i < s; ++i)
      n_mat(i, j) = Int(net.complexes[rx.product][i]) - Int(net.complexes[rx.educt][i]);
  }
  out.dim_stoichiometric = rank_of(n_mat);
  out.deficiency = m - out.linkage_class_count - out.dim_stoichiometric;
  out.conservation = integer_kernel(n_mat.transposed());

  // One terminal strong component per linkage class.
  std::map<int, int> terminals_per_class;
  for (int c = 0; c < scc_count; ++c)
    if (terminal[c]) terminals_per_class[uf.find(scc_members[c][0])]++;
  out.deficiency_formula_valid = true;
  for (auto& [root, members] : classes) {
    (void)members;
    if (terminals_per_class[root] != 1) out.deficiency_formula_valid = false;
  }

  out.positive_flux = r > 0 && lp_feasible(to_rational(n_mat), SignPattern(r, Sgn::pos)).has_value();

  // Removing all reactions between an adjacent pair inside a terminal strong
  // component must disconnect that pair's linkage class.
  out.terminal_cut = true;
  for (int c = 0; c < scc_count && out.terminal_cut; ++c) {
    if (!terminal[c] || scc_members[c].size() < 2) continue;
    std::set<std::pair<int, int>> pairs;
    for (int v : scc_members[c])
      for (int w : adj[v])
        if (comp[w] == c) pairs.insert({std::min(v, w), std::max(v, w)});
    for (auto [u, v] : pairs) {
      std::vector<std::pair<int, int>> kept;
      for (const auto& rx : net.reactions) {
        int a = std::min(rx.educt, rx.product), b = std::max(rx.educt, rx.product);
        if (a == u && b == v) continue;
        kept.push_back({rx.educt, rx.product});
      }
      if (weakly_connected(m, kept, u, v)) {
        out.terminal_cut = false;
        break;
      }
    }
  }

  out.regular = out.positive_flux && out.deficiency_formula_valid && out.terminal_cut;
  return out;
}

}  // namespace crn
