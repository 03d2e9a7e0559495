#include "colnum/tree_decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "colnum/util.hpp"

namespace colnum {

namespace {
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
}  // namespace

std::vector<int> TreeDecomposition::adhesion(int x) const {
  if (x == root) return {};
  return sorted_intersection(bags[x], bags[parent[x]]);
}

std::vector<int> TreeDecomposition::margin(int x) const {
  auto adh = adhesion(x);
  std::vector<int> out;
  std::set_difference(bags[x].begin(), bags[x].end(), adh.begin(), adh.end(),
                      std::back_inserter(out));
  return out;
}

int TreeDecomposition::adhesion_width() const {
  int k = 0;
  for (int x = 0; x < node_count; ++x) k = std::max(k, static_cast<int>(adhesion(x).size()));
  return k;
}

Graph TreeDecomposition::torso(const Graph& g, int x) const {
  const auto& bag = bags[x];
  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < bag.size(); ++i) pos[bag[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
  auto add_clique = [&](const std::vector<int>& set) {
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = i + 1; j < set.size(); ++j)
        edges.emplace_back(std::min(pos[set[i]], pos[set[j]]),
                           std::max(pos[set[i]], pos[set[j]]));
  };
  add_clique(adhesion(x));
  for (int c : children(x)) add_clique(adhesion(c));
  return Graph::from_edges(static_cast<int>(bag.size()), std::move(edges));
}

std::vector<int> TreeDecomposition::children(int x) const {
  std::vector<int> out;
  for (int y = 0; y < node_count; ++y)
    if (y != root && parent[y] == x) out.push_back(y);
  return out;
}

std::vector<int> TreeDecomposition::dfs_preorder() const {
  std::vector<int> order, stack{root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    auto ch = children(x);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

void TreeDecomposition::validate(const Graph& g) const {
  if (node_count <= 0) throw Error("decomposition needs at least one node");
  if (root < 0 || root >= node_count) throw Error("bad root");
  // tree shape: every non-root has a parent, and walking up reaches the root
  for (int x = 0; x < node_count; ++x) {
    if (x == root) continue;
    int hops = 0, y = x;
    while (y != root) {
      if (y < 0 || y >= node_count || hops++ > node_count)
        throw Error("parent map is not a tree rooted at " + std::to_string(root));
      y = parent[y];
    }
  }
  // condition 1: bag nodes of every vertex form a nonempty connected subtree
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> holders;
    for (int x = 0; x < node_count; ++x)
      if (std::binary_search(bags[x].begin(), bags[x].end(), v)) holders.push_back(x);
    if (holders.empty())
      throw Error("vertex " + std::to_string(v) + " appears in no bag");
    // connected iff every holder except the shallowest has a holder parent
    std::vector<char> holds(node_count, 0);
    for (int x : holders) holds[x] = 1;
    int tops = 0;
    for (int x : holders)
      if (x == root || !holds[parent[x]]) ++tops;
    if (tops != 1)
      throw Error("bags of vertex " + std::to_string(v) + " are not connected in the tree");
  }
  // condition 2: every edge is covered by some bag
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x = 0; x < node_count && !covered; ++x)
      covered = std::binary_search(bags[x].begin(), bags[x].end(), u) &&
                std::binary_search(bags[x].begin(), bags[x].end(), v);
    if (!covered)
      throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                  " is covered by no bag");
  }
}

TreeDecomposition TreeDecomposition::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  TreeDecomposition t;
  int declared_n = -1;
  bool header = false;
  int line_no = 0;
  std::vector<std::pair<int, int>> tree_edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "s") {
      std::string kind;
      int nodes, maxbag, n;
      if (!(ls >> kind >> nodes >> maxbag >> n) || kind != "td")
        throw ParseError("expected 's td <nodes> <maxbag> <n>'", line_no);
      t.node_count = nodes;
      t.bags.assign(nodes, {});
      t.parent.assign(nodes, -1);
      declared_n = n;
      header = true;
    } else if (tag == "b") {
      if (!header) throw ParseError("bag line before header", line_no);
      int node;
      if (!(ls >> node) || node < 1 || node > t.node_count)
        throw ParseError("bad bag node id", line_no);
      int v;
      std::vector<int> bag;
      while (ls >> v) {
        if (v < 1 || v > declared_n) throw ParseError("bag vertex out of range", line_no);
        bag.push_back(v - 1);
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      t.bags[node - 1] = std::move(bag);
    } else if (tag == "t") {
      if (!header) throw ParseError("tree line before header", line_no);
      int p, c;
      if (!(ls >> p >> c) || p < 1 || c < 1 || p > t.node_count || c > t.node_count)
        throw ParseError("bad tree edge", line_no);
      tree_edges.emplace_back(p - 1, c - 1);
    } else {
      throw ParseError("unknown line tag '" + tag + "'", line_no);
    }
  }
  if (!header) throw Error("missing 's td' header");
  std::vector<char> has_parent(t.node_count, 0);
  for (auto [p, c] : tree_edges) {
    if (has_parent[c]) throw Error("node " + std::to_string(c + 1) + " has two parents");
    has_parent[c] = 1;
    t.parent[c] = p;
  }
  int roots = 0;
  for (int x = 0; x < t.node_count; ++x)
    if (!has_parent[x]) {
      t.root = x;
      ++roots;
    }
  if (roots != 1) throw Error("decomposition tree must have exactly one root");
  return t;
}

std::string TreeDecomposition::serialize() const {
  std::ostringstream out;
  int maxbag = 0, n = 0;
  for (const auto& bag : bags) {
    maxbag = std::max(maxbag, static_cast<int>(bag.size()));
    for (int v : bag) n = std::max(n, v + 1);
  }
  out << "s td " << node_count << " " << maxbag << " " << n << "\n";
  for (int x = 0; x < node_count; ++x) {
    out << "b " << x + 1;
    for (int v : bags[x]) out << " " << v + 1;
    out << "\n";
  }
  for (int x = 0; x < node_count; ++x)
    if (x != root) out << "t " << parent[x] + 1 << " " << x + 1 << "\n";
  return out.str();
}

DiGraph skeleton(const Graph& g, const TreeDecomposition& t) {
  DiGraph d(g.vertex_count());
  for (int x = 0; x < t.node_count; ++x) {
    auto adh = t.adhesion(x);
    for (int u : t.margin(x))
      for (int v : adh) d.add_arc(u, v);
  }
  // acyclicity: arcs always point to strictly shallower margins
  std::vector<int> state(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, size_t>> frames{{s, 0}};
    state[s] = 1;
    while (!frames.empty()) {
      auto& [x, i] = frames.back();
      if (i < d.out(x).size()) {
        int y = d.out(x)[i++];
        if (state[y] == 1) throw ContractViolation("skeleton has a directed cycle");
        if (state[y] == 0) {
          state[y] = 1;
          frames.emplace_back(y, 0);
        }
      } else {
        state[x] = 2;
        frames.pop_back();
      }
    }
  }
  return d;
}

SkeletonReach skeleton_reach(const Graph& g, const TreeDecomposition& t, int u, int r) {
  auto d = skeleton(g, t);
  std::vector<int> dist(g.vertex_count(), -1);
  dist[u] = 0;
  std::vector<int> queue{u};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    if (dist[x] == r) continue;
    for (int y : d.out(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  SkeletonReach res;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) res.reached.push_back(v);
  int k = t.adhesion_width();
  res.count_bound = binomial(r + k, k);
  if (static_cast<long long>(res.reached.size()) > res.count_bound)
    throw ContractViolation("skeleton reach exceeded the binomial bound");
  return res;
}

VertexOrder compose_td_order(const Graph& g, const TreeDecomposition& t,
                             const std::vector<VertexOrder>& torso_orders) {
  t.validate(g);
  if (static_cast<int>(torso_orders.size()) != t.node_count)
    throw Error("need one torso order per node");
  std::vector<int> perm;
  perm.reserve(g.vertex_count());
  std::vector<char> placed(g.vertex_count(), 0);
  for (int x : t.dfs_preorder()) {
    const auto& bag = t.bags[x];
    const auto& o = torso_orders[x];
    if (o.size() != static_cast<int>(bag.size()))
      throw Error("torso order size mismatch at node " + std::to_string(x + 1));
    auto mar = t.margin(x);
    std::vector<char> in_margin(g.vertex_count(), 0);
    for (int v : mar) in_margin[v] = 1;
    // torso order restricted to the margin
    for (int pos = 0; pos < o.size(); ++pos) {
      int v = bag[o.vertex_at(pos)];
      if (in_margin[v] && !placed[v]) {
        placed[v] = 1;
        perm.push_back(v);
      }
    }
  }
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw Error("margins do not cover every vertex; is the decomposition valid?");
  return VertexOrder::from_permutation(std::move(perm));
}

}  // namespace colnum
