#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kronctrl/matrix.hpp"
#include "kronctrl/rational.hpp"

namespace kronctrl {

/// Directed edge between 1-based node indices.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted digraph. Nodes are 1..node_count; at most one edge per ordered
/// pair; weights are nonzero; self-loops are allowed. Edges are kept sorted
/// by (from, to).
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(std::size_t node_count) : node_count_(node_count) {}
  /// Throws Error on an invalid edge (see add_edge).
  WeightedDigraph(std::size_t node_count, std::vector<Edge> edges);

  /// Graph whose adjacency matrix is `a`: edge j->i with weight a(i,j).
  static WeightedDigraph from_adjacency(const Mat& a);

  /// Throws Error for out-of-range endpoints, zero weight or a duplicate.
  void add_edge(std::size_t from, std::size_t to, const Rational& weight);

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_self_loop() const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

/// Set of actuated (or measured) nodes out of `total_nodes`. Stored sorted
/// and duplicate-free.
class InputSelection {
 public:
  InputSelection() = default;
  /// Throws Error when an index is outside [1, total_nodes] or repeated.
  InputSelection(std::size_t total_nodes, std::vector<std::size_t> actuated);
  InputSelection(std::size_t total_nodes, std::initializer_list<std::size_t> actuated)
      : InputSelection(total_nodes, std::vector<std::size_t>(actuated)) {}

  static InputSelection all(std::size_t total_nodes);

  std::size_t total_nodes() const noexcept { return total_; }
  const std::vector<std::size_t>& actuated() const noexcept { return actuated_; }
  std::size_t size() const noexcept { return actuated_.size(); }
  bool is_full() const noexcept { return actuated_.size() == total_; }

  friend bool operator==(const InputSelection&, const InputSelection&) = default;

 private:
  std::size_t total_ = 0;
  std::vector<std::size_t> actuated_;
};

/// total_nodes x |actuated| matrix whose k-th column is the unit vector of
/// the k-th actuated node.
Mat selection_matrix(const InputSelection& s);

/// The equivalent diagonal 0/1 form diag(d_1, ..., d_N).
Mat selection_diagonal(const InputSelection& s);

/// Entry (i,j) is the weight of edge j->i; the diagonal holds self-loops.
Mat adjacency(const WeightedDigraph& g);

/// Kronecker product graph. Node (i,p) has linear index (i-1)·n + p, so
/// adjacency(kron_graph(g1, g2)) == kron(adjacency(g1), adjacency(g2)).
WeightedDigraph kron_graph(const WeightedDigraph& g1, const WeightedDigraph& g2);

/// L = D - A with D the diagonal of row sums of A. Throws SelfLoopPresent.
Mat laplacian(const WeightedDigraph& g);

/// Leader-follower multi-agent system with F = -L⊗H and G = Δ⊗B.
class MASystem {
 public:
  /// Throws DimensionMismatch when shapes do not conform and Error when a
  /// row of the Laplacian does not sum to zero.
  MASystem(Mat laplacian, Mat inner_coupling, InputSelection leaders, Mat agent_input);

  const Mat& laplacian() const noexcept { return laplacian_; }
  const Mat& inner_coupling() const noexcept { return inner_coupling_; }
  const InputSelection& leaders() const noexcept { return leaders_; }
  const Mat& agent_input() const noexcept { return agent_input_; }

  std::size_t agent_count() const noexcept { return laplacian_.rows(); }
  std::size_t agent_dimension() const noexcept { return inner_coupling_.rows(); }

  /// -L⊗H
  Mat state_matrix() const;
  /// Δ⊗B, with Δ in selection form.
  Mat input_matrix() const;

 private:
  Mat laplacian_;
  Mat inner_coupling_;
  InputSelection leaders_;
  Mat agent_input_;
};

}  // namespace kronctrl
