#include "optonet/netgen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "optonet/error.hpp"
#include "optonet/rng.hpp"
#include "optonet/scaling.hpp"

namespace optonet {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<NodeId, std::uint32_t>>& pairs,
               std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& index) {
  offsets.assign(n + 1, 0);
  for (const auto& [node, _] : pairs) ++offsets[node + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  index.assign(pairs.size(), 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [node, value] : pairs) index[cursor[node]++] = value;
}

struct SourceResult {
  std::uint64_t distance_sum = 0;
  std::uint64_t reachable = 0;
  std::uint32_t eccentricity = 0;
};

SourceResult bfs_from(const NetworkGraph& g, NodeId source, std::vector<std::uint32_t>& dist,
                      std::vector<NodeId>& queue) {
  constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
  std::fill(dist.begin(), dist.end(), unseen);
  SourceResult r;
  std::size_t head = 0;
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  while (head < queue.size()) {
    const NodeId u = queue[head++];
    const std::uint32_t du = dist[u];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] != unseen) continue;
      dist[v] = du + 1;
      r.distance_sum += du + 1;
      ++r.reachable;
      r.eccentricity = du + 1;
      queue.push_back(v);
    }
  }
  return r;
}

}  // namespace

NetworkGraph::NetworkGraph(std::size_t n, std::vector<Edge> edges, std::uint64_t seed)
    : n_(n), seed_(seed), edges_(std::move(edges)) {
  if (n_ > std::numeric_limits<NodeId>::max()) throw DomainError("too many nodes");
  if (edges_.size() >= std::numeric_limits<std::uint32_t>::max()) throw DomainError("too many edges");

  std::vector<std::pair<NodeId, std::uint32_t>> out, in;
  out.reserve(edges_.size());
  in.reserve(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src >= n_ || e.dst >= n_) {
      throw DomainError("edge " + std::to_string(i) + " references a node outside [0, n)");
    }
    if (e.src == e.dst) throw DomainError("self-loop at node " + std::to_string(e.src));
    out.emplace_back(e.src, i);
    in.emplace_back(e.dst, i);
  }
  build_csr(n_, out, out_offsets_, out_index_);
  build_csr(n_, in, in_offsets_, in_index_);

  for (NodeId u = 0; u < n_; ++u) {
    auto targets = out_edges(u);
    std::vector<NodeId> dst;
    dst.reserve(targets.size());
    for (auto idx : targets) dst.push_back(edges_[idx].dst);
    std::sort(dst.begin(), dst.end());
    if (std::adjacent_find(dst.begin(), dst.end()) != dst.end()) {
      throw DomainError("duplicate edge leaving node " + std::to_string(u));
    }
  }

  std::vector<std::pair<NodeId, std::uint32_t>> undirected;
  undirected.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    undirected.emplace_back(e.src, e.dst);
    undirected.emplace_back(e.dst, e.src);
  }
  std::vector<std::uint32_t> raw_offsets, raw;
  build_csr(n_, undirected, raw_offsets, raw);
  nbr_offsets_.assign(n_ + 1, 0);
  nbr_.reserve(raw.size());
  for (NodeId u = 0; u < n_; ++u) {
    auto first = raw.begin() + raw_offsets[u];
    auto last = raw.begin() + raw_offsets[u + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    nbr_.insert(nbr_.end(), first, last);
    nbr_offsets_[u + 1] = static_cast<std::uint32_t>(nbr_.size());
  }
}

std::span<const std::uint32_t> NetworkGraph::out_edges(NodeId node) const {
  return {out_index_.data() + out_offsets_[node], out_offsets_[node + 1] - out_offsets_[node]};
}

std::span<const std::uint32_t> NetworkGraph::in_edges(NodeId node) const {
  return {in_index_.data() + in_offsets_[node], in_offsets_[node + 1] - in_offsets_[node]};
}

std::span<const NodeId> NetworkGraph::neighbors(NodeId node) const {
  return {nbr_.data() + nbr_offsets_[node], nbr_offsets_[node + 1] - nbr_offsets_[node]};
}

double NetworkGraph::mean_degree() const {
  return n_ == 0 ? 0.0 : static_cast<double>(nbr_.size()) / static_cast<double>(n_);
}

NetworkGraph generate_er(std::size_t n, double mean_degree, std::uint64_t seed) {
  if (n < 2) throw DomainError("random graph needs at least two nodes");
  if (!(mean_degree > 0.0) || !(mean_degree < static_cast<double>(n))) {
    throw DomainError("mean degree must lie in (0, n)");
  }
  const double p = mean_degree / static_cast<double>(n - 1);
  if (p > 1.0) throw DomainError("edge probability exceeds 1");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1) + 16);
  CounterRng pick(seed, StreamTag::graph, 0);
  CounterRng orient(seed, StreamTag::orientation, 0);
  auto push = [&](NodeId a, NodeId b) {
    if (orient() & 1U) std::swap(a, b);
    edges.push_back({a, b});
  };

  if (p >= 1.0) {
    for (NodeId v = 1; v < n; ++v) {
      for (NodeId w = 0; w < v; ++w) push(w, v);
    }
  } else {
    // Geometric skipping over the pairs (w < v); Batagelj & Brandes.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = pick.uniform();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) push(static_cast<NodeId>(w), static_cast<NodeId>(v));
    }
  }
  return NetworkGraph(n, std::move(edges), seed);
}

std::optional<std::size_t> default_source_sample(std::size_t n) {
  if (n <= 5000) return std::nullopt;
  return std::size_t{1000};
}

PathStats average_shortest_path(const NetworkGraph& g, std::optional<std::size_t> sample_sources,
                                std::uint64_t seed) {
  const std::size_t n = g.node_count();
  if (n == 0 || g.edge_count() == 0) throw DomainError("path statistics need a non-empty graph");

  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  const bool sampled = sample_sources && *sample_sources < n;
  if (sampled) {
    if (*sample_sources == 0) throw DomainError("source sample must be positive");
    CounterRng rng(seed, StreamTag::source_sampling, 0);
    for (std::size_t i = 0; i < *sample_sources; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(*sample_sources);
    std::sort(sources.begin(), sources.end());
  }

  std::vector<SourceResult> results(sources.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, sources.size() / 64));
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (std::size_t i = begin; i < end; ++i) results[i] = bfs_from(g, sources[i], dist, queue);
  };
  if (workers <= 1) {
    work(0, sources.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (sources.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < sources.size(); b += chunk) {
      pool.emplace_back(work, b, std::min(sources.size(), b + chunk));
    }
  }

  std::uint64_t total_distance = 0;
  std::uint64_t total_reachable = 0;
  std::uint32_t diameter = 0;
  for (const auto& r : results) {
    total_distance += r.distance_sum;
    total_reachable += r.reachable;
    diameter = std::max(diameter, r.eccentricity);
  }

  PathStats s;
  s.sources = sources.size();
  s.diameter = diameter;
  s.reachable_fraction = static_cast<double>(total_reachable) /
                         (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
  s.mean_shortest_path = total_reachable == 0
                             ? std::numeric_limits<double>::quiet_NaN()
                             : static_cast<double>(total_distance) / static_cast<double>(total_reachable);
  if (sampled) {
    std::vector<double> per_source;
    for (const auto& r : results) {
      if (r.reachable > 0) per_source.push_back(static_cast<double>(r.distance_sum) / static_cast<double>(r.reachable));
    }
    if (per_source.size() > 1) {
      const double m = std::accumulate(per_source.begin(), per_source.end(), 0.0) / static_cast<double>(per_source.size());
      double ss = 0.0;
      for (double x : per_source) ss += (x - m) * (x - m);
      s.standard_error = std::sqrt(ss / static_cast<double>(per_source.size() - 1) /
                                   static_cast<double>(per_source.size()));
    }
  }
  return s;
}

Eq6Report validate_eq6(const std::vector<std::size_t>& n_values, const std::vector<double>& k_values,
                       std::size_t seeds, std::uint64_t base_seed, double tolerance) {
  if (seeds == 0) throw DomainError("need at least one seed");
  Eq6Report report;
  report.tolerance = tolerance;
  for (std::size_t n : n_values) {
    for (double k : k_values) {
      if (!(k > 1.0)) throw DomainError("degree must exceed 1");
      Eq6Row row;
      row.n = n;
      row.k = k;
      row.seeds = seeds;
      row.prediction = achievable_path_length(static_cast<double>(n), k);
      std::vector<double> means;
      double degree_sum = 0.0;
      row.min_reachable_fraction = 1.0;
      for (std::size_t s = 0; s < seeds; ++s) {
        const std::uint64_t seed = mix64(base_seed ^ mix64(n) ^ mix64(std::bit_cast<std::uint64_t>(k)) ^ mix64(s + 1));
        const auto g = generate_er(n, k, seed);
        const auto stats = average_shortest_path(g, default_source_sample(n), seed);
        means.push_back(stats.mean_shortest_path);
        degree_sum += g.mean_degree();
        row.min_reachable_fraction = std::min(row.min_reachable_fraction, stats.reachable_fraction);
      }
      row.empirical_mean = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(seeds);
      double ss = 0.0;
      for (double m : means) ss += (m - row.empirical_mean) * (m - row.empirical_mean);
      row.empirical_std = seeds > 1 ? std::sqrt(ss / static_cast<double>(seeds - 1)) : 0.0;
      row.realized_mean_degree = degree_sum / static_cast<double>(seeds);
      row.relative_error = std::abs(row.empirical_mean - row.prediction) / row.prediction;
      row.within_tolerance = row.relative_error <= tolerance;
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_edge_list(std::ostream& os, const NetworkGraph& g) {
  os << "n " << g.node_count() << '\n';
  for (const auto& e : g.edges()) os << e.src << ' ' << e.dst << '\n';
}

NetworkGraph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n") throw DomainError("edge list must start with 'n <count>'");
      have_header = true;
      continue;
    }
    std::int64_t u = 0, v = 0;
    if (!(ls >> u >> v) || u < 0 || v < 0) {
      throw DomainError("malformed edge on line " + std::to_string(lineno));
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!have_header) throw DomainError("edge list is empty");
  return NetworkGraph(n, std::move(edges));
}

}  // namespace optonet
