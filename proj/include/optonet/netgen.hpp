#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace optonet {

using NodeId = std::uint32_t;

/// A directed synapse src -> dst.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed synaptic connectivity. Immutable after construction; the
/// undirected view (used for path metrics) merges u->v and v->u.
class NetworkGraph {
 public:
  NetworkGraph() = default;
  /// Throws DomainError on self-loops, out-of-range indices, or duplicate edges.
  NetworkGraph(std::size_t n, std::vector<Edge> edges, std::uint64_t seed = 0);

  [[nodiscard]] std::size_t node_count() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  /// Indices into edges() of synapses leaving / entering a node.
  [[nodiscard]] std::span<const std::uint32_t> out_edges(NodeId node) const;
  [[nodiscard]] std::span<const std::uint32_t> in_edges(NodeId node) const;
  /// Undirected neighbours, sorted and unique.
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId node) const;

  [[nodiscard]] std::size_t undirected_edge_count() const { return nbr_.size() / 2; }
  /// Mean undirected degree, 2·E/n.
  [[nodiscard]] double mean_degree() const;

 private:
  std::size_t n_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_, out_index_;
  std::vector<std::uint32_t> in_offsets_, in_index_;
  std::vector<std::uint32_t> nbr_offsets_;
  std::vector<NodeId> nbr_;
};

/// G(n, p) with p = mean_degree/(n-1). Each undirected edge becomes one
/// directed synapse with a seeded coin-flip orientation.
NetworkGraph generate_er(std::size_t n, double mean_degree, std::uint64_t seed);

struct PathStats {
  double mean_shortest_path = 0.0;
  double reachable_fraction = 0.0;
  std::uint32_t diameter = 0;
  std::size_t sources = 0;
  double standard_error = 0.0;  // of the per-source means; 0 when every source is used
};

/// Exact BFS over the undirected view from every source, or from a seeded
/// sample of `sample_sources` sources. Unreachable pairs are excluded from
/// the mean and reported through reachable_fraction.
PathStats average_shortest_path(const NetworkGraph& g,
                                std::optional<std::size_t> sample_sources = std::nullopt,
                                std::uint64_t seed = 0);

/// Source count used when the caller does not specify one.
std::optional<std::size_t> default_source_sample(std::size_t n);

struct Eq6Row {
  std::size_t n = 0;
  double k = 0.0;
  std::size_t seeds = 0;
  double empirical_mean = 0.0;
  double empirical_std = 0.0;
  double prediction = 0.0;
  double relative_error = 0.0;
  double min_reachable_fraction = 0.0;
  double realized_mean_degree = 0.0;
  bool within_tolerance = false;
};

struct Eq6Report {
  double tolerance = 0.15;
  std::vector<Eq6Row> rows;
};

/// Compares BFS path lengths of random graphs against the degree/path-length formula.
Eq6Report validate_eq6(const std::vector<std::size_t>& n_values, const std::vector<double>& k_values,
                       std::size_t seeds, std::uint64_t base_seed = 0, double tolerance = 0.15);

/// Edge-list text: "n <count>" then one "u v" line per directed edge.
void write_edge_list(std::ostream& os, const NetworkGraph& g);
NetworkGraph read_edge_list(std::istream& is);

}  // namespace optonet
