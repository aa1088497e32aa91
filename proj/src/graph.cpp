#include "divnet/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

#include "divnet/parallel.hpp"

namespace divnet {

Graph::Graph(std::vector<std::string> labels, bool directed,
             std::vector<GraphLink> links)
    : labels_(std::move(labels)), directed_(directed) {
  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (const auto& l : links) {
    if (l.source >= labels_.size() || l.target >= labels_.size())
      throw std::invalid_argument("link endpoint out of range");
    merged[{l.source, l.target}] += l.weight;
  }
  links_.reserve(merged.size());
  for (const auto& [key, w] : merged) {
    links_.push_back({key.first, key.second, w});
    if (key.first == key.second) ++loops_;
  }
}

Graph Graph::from_network(const PajekNetwork& net) {
  if (net.is_two_mode())
    throw std::invalid_argument("graph statistics need a 1-mode network");
  const auto n = static_cast<std::size_t>(net.vertex_count());
  bool directed = false;
  for (const auto& l : net.links)
    if (l.kind == LinkKind::arc) directed = true;

  std::vector<GraphLink> links;
  links.reserve(net.links.size() * 2);
  for (const auto& l : net.links) {
    auto s = static_cast<std::size_t>(l.source - 1);
    auto t = static_cast<std::size_t>(l.target - 1);
    if (s >= n || t >= n)
      throw std::invalid_argument("link references an unknown vertex");
    links.push_back({s, t, l.weight});
    if (directed && l.kind == LinkKind::edge && s != t)
      links.push_back({t, s, l.weight});
  }
  return Graph(net.labels, directed, std::move(links));
}

double Graph::total_weight() const {
  double sum = 0.0;
  for (const auto& l : links_) sum += l.weight;
  return sum;
}

std::vector<std::vector<std::size_t>> Graph::adjacency(
    bool as_undirected) const {
  std::vector<std::vector<std::size_t>> adj(node_count());
  for (const auto& l : links_) {
    if (l.source == l.target) continue;
    adj[l.source].push_back(l.target);
    if (as_undirected || !directed_) adj[l.target].push_back(l.source);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

namespace {

// One Brandes pass from source s, accumulating dependencies into cb.
void brandes_from_source(
    std::size_t s, const std::vector<std::vector<std::size_t>>& adj,
    std::vector<long double>& cb, std::vector<std::size_t>& order,
    std::vector<std::vector<std::size_t>>& pred, std::vector<double>& sigma,
    std::vector<long>& dist, std::vector<long double>& delta) {
  const std::size_t n = adj.size();
  order.clear();
  for (std::size_t i = 0; i < n; ++i) {
    pred[i].clear();
    sigma[i] = 0.0;
    dist[i] = -1;
    delta[i] = 0.0L;
  }
  sigma[s] = 1.0;
  dist[s] = 0;
  std::queue<std::size_t> q;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    order.push_back(v);
    for (std::size_t w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
      if (dist[w] == dist[v] + 1) {
        sigma[w] += sigma[v];
        pred[w].push_back(v);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t w = *it;
    for (std::size_t v : pred[w])
      delta[v] += static_cast<long double>(sigma[v]) /
                  static_cast<long double>(sigma[w]) * (1.0L + delta[w]);
    if (w != s) cb[w] += delta[w];
  }
}

}  // namespace

std::vector<double> betweenness(const Graph& g, BCMode mode,
                                unsigned threads) {
  const std::size_t n = g.node_count();
  auto adj = g.adjacency(mode == BCMode::undirected_binary);

  // Fixed-size source blocks keep the reduction order independent of the
  // thread count.
  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = n == 0 ? 0 : (n + kBlock - 1) / kBlock;
  std::vector<std::vector<long double>> partial(
      blocks, std::vector<long double>());

  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<long double> cb(n, 0.0L);
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> pred(n);
    std::vector<double> sigma(n);
    std::vector<long> dist(n);
    std::vector<long double> delta(n);
    order.reserve(n);
    const std::size_t end = std::min(n, (b + 1) * kBlock);
    for (std::size_t s = b * kBlock; s < end; ++s)
      brandes_from_source(s, adj, cb, order, pred, sigma, dist, delta);
    partial[b] = std::move(cb);
  });

  std::vector<long double> total(n, 0.0L);
  for (const auto& cb : partial)
    for (std::size_t i = 0; i < n; ++i) total[i] += cb[i];

  std::vector<double> out(n);
  const long double scale = mode == BCMode::undirected_binary ? 2.0L : 1.0L;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<double>(total[i] / scale);
  return out;
}

std::vector<double> normalize_betweenness(const std::vector<double>& raw,
                                          std::size_t n, BCMode mode) {
  if (n < 3)
    throw std::invalid_argument(
        "normalized betweenness needs at least 3 nodes");
  const double pairs =
      static_cast<double>(n - 1) * static_cast<double>(n - 2);
  const double factor =
      (mode == BCMode::undirected_binary ? 2.0 : 1.0) / pairs;
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] * factor;
  return out;
}

Graph largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph has no components");
  auto adj = g.adjacency(true);

  std::vector<int> comp(n, -1);
  std::vector<std::size_t> size_of;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(size_of.size());
    std::size_t count = 0;
    std::queue<std::size_t> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      ++count;
      for (std::size_t w : adj[v])
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    size_of.push_back(count);
  }

  // Components are discovered in ascending order of their smallest node,
  // so keeping the first maximum implements the tie rule.
  int best = 0;
  for (int id = 1; id < static_cast<int>(size_of.size()); ++id)
    if (size_of[id] > size_of[best]) best = id;

  std::vector<std::size_t> remap(n, SIZE_MAX);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v)
    if (comp[v] == best) {
      remap[v] = labels.size();
      labels.push_back(g.labels()[v]);
    }
  std::vector<GraphLink> links;
  for (const auto& l : g.links())
    if (comp[l.source] == best && comp[l.target] == best)
      links.push_back({remap[l.source], remap[l.target], l.weight});
  return Graph(std::move(labels), g.directed(), std::move(links));
}

Descriptives descriptives(const Graph& g) {
  Descriptives d;
  d.nodes = g.node_count();
  d.links = g.link_count();
  d.loops = g.loop_count();
  d.total_weight = g.total_weight();
  if (d.nodes == 0) return d;

  const double n = static_cast<double>(d.nodes);
  const double m = static_cast<double>(d.links);
  if (d.nodes > 1) {
    double slots = n * (n - 1.0);
    d.density = (g.directed() ? m : 2.0 * m) / slots;
  }
  d.mean_degree = 2.0 * m / n;

  // Mean local clustering, undirected binary, loops dropped.
  auto adj = g.adjacency(true);
  double clustering_sum = 0.0;
  for (std::size_t v = 0; v < d.nodes; ++v) {
    const auto& nbrs = adj[v];
    if (nbrs.size() < 2) continue;
    std::size_t closed = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (std::binary_search(adj[nbrs[a]].begin(), adj[nbrs[a]].end(),
                               nbrs[b]))
          ++closed;
    clustering_sum += 2.0 * static_cast<double>(closed) /
                      (static_cast<double>(nbrs.size()) *
                       static_cast<double>(nbrs.size() - 1));
  }
  d.clustering = clustering_sum / n;

  // Distances over the largest component, unweighted BFS.
  Graph lc = largest_component(g);
  d.component_nodes = lc.node_count();
  if (lc.node_count() > 1) {
    auto cadj = lc.adjacency(true);
    const std::size_t k = lc.node_count();
    double dist_sum = 0.0;
    std::size_t dist_max = 0;
    std::vector<long> dist(k);
    for (std::size_t s = 0; s < k; ++s) {
      std::fill(dist.begin(), dist.end(), -1L);
      dist[s] = 0;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t w : cadj[v])
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            q.push(w);
          }
      }
      for (std::size_t t = 0; t < k; ++t)
        if (t != s && dist[t] > 0) {
          dist_sum += static_cast<double>(dist[t]);
          dist_max = std::max(dist_max, static_cast<std::size_t>(dist[t]));
        }
    }
    d.avg_distance =
        dist_sum / (static_cast<double>(k) * static_cast<double>(k - 1));
    d.max_distance = dist_max;
  }
  return d;
}

}  // namespace divnet
