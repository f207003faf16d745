#include "kronctrl/graph.hpp"

#include <algorithm>
#include <string>

#include "kronctrl/error.hpp"

namespace kronctrl {

WeightedDigraph::WeightedDigraph(std::size_t node_count, std::vector<Edge> edges) : node_count_(node_count) {
  for (auto& e : edges) add_edge(e.from, e.to, e.weight);
}

WeightedDigraph WeightedDigraph::from_adjacency(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("adjacency matrix must be square");
  WeightedDigraph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) g.add_edge(j + 1, i + 1, a(i, j));
  return g;
}

void WeightedDigraph::add_edge(std::size_t from, std::size_t to, const Rational& weight) {
  if (from == 0 || from > node_count_ || to == 0 || to > node_count_) {
    throw Error("edge " + std::to_string(from) + "->" + std::to_string(to) + " references a node outside 1.." +
                std::to_string(node_count_));
  }
  if (weight.is_zero()) throw Error("edge " + std::to_string(from) + "->" + std::to_string(to) + " has zero weight");
  const auto key = [](const Edge& e) { return std::pair(e.from, e.to); };
  const auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::pair(from, to),
                                    [&](const Edge& e, const auto& k) { return key(e) < k; });
  if (pos != edges_.end() && pos->from == from && pos->to == to)
    throw Error("duplicate edge " + std::to_string(from) + "->" + std::to_string(to));
  edges_.insert(pos, Edge{from, to, weight});
}

bool WeightedDigraph::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.from == e.to; });
}

InputSelection::InputSelection(std::size_t total_nodes, std::vector<std::size_t> actuated)
    : total_(total_nodes), actuated_(std::move(actuated)) {
  std::sort(actuated_.begin(), actuated_.end());
  for (std::size_t k = 0; k < actuated_.size(); ++k) {
    const std::size_t node = actuated_[k];
    if (node == 0 || node > total_)
      throw Error("selected node " + std::to_string(node) + " outside 1.." + std::to_string(total_));
    if (k > 0 && actuated_[k - 1] == node) throw Error("node " + std::to_string(node) + " selected twice");
  }
}

InputSelection InputSelection::all(std::size_t total_nodes) {
  std::vector<std::size_t> nodes(total_nodes);
  for (std::size_t i = 0; i < total_nodes; ++i) nodes[i] = i + 1;
  return InputSelection(total_nodes, std::move(nodes));
}

Mat selection_matrix(const InputSelection& s) {
  Mat m(s.total_nodes(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) m(s.actuated()[k] - 1, k) = 1;
  return m;
}

Mat selection_diagonal(const InputSelection& s) {
  Mat m(s.total_nodes(), s.total_nodes());
  for (auto node : s.actuated()) m(node - 1, node - 1) = 1;
  return m;
}

Mat adjacency(const WeightedDigraph& g) {
  Mat a(g.node_count(), g.node_count());
  for (const auto& e : g.edges()) a(e.to - 1, e.from - 1) = e.weight;
  return a;
}

WeightedDigraph kron_graph(const WeightedDigraph& g1, const WeightedDigraph& g2) {
  const std::size_t n = g2.node_count();
  WeightedDigraph g(g1.node_count() * n);
  for (const auto& e1 : g1.edges()) {
    for (const auto& e2 : g2.edges()) {
      g.add_edge((e1.from - 1) * n + e2.from, (e1.to - 1) * n + e2.to, e1.weight * e2.weight);
    }
  }
  return g;
}

Mat laplacian(const WeightedDigraph& g) {
  if (g.has_self_loop()) throw SelfLoopPresent("Laplacian is undefined for graphs with self-loops");
  Mat l = adjacency(g);
  l *= Rational(-1);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Rational degree(0);
    for (std::size_t j = 0; j < l.cols(); ++j) degree -= l(i, j);
    l(i, i) = degree;
  }
  return l;
}

MASystem::MASystem(Mat laplacian, Mat inner_coupling, InputSelection leaders, Mat agent_input)
    : laplacian_(std::move(laplacian)),
      inner_coupling_(std::move(inner_coupling)),
      leaders_(std::move(leaders)),
      agent_input_(std::move(agent_input)) {
  if (!laplacian_.is_square()) throw DimensionMismatch("Laplacian must be square");
  if (!inner_coupling_.is_square()) throw DimensionMismatch("inner coupling matrix must be square");
  if (leaders_.total_nodes() != laplacian_.rows())
    throw DimensionMismatch("leader selection covers " + std::to_string(leaders_.total_nodes()) + " agents, Laplacian has " +
                            std::to_string(laplacian_.rows()));
  if (agent_input_.rows() != inner_coupling_.rows())
    throw DimensionMismatch("agent input matrix needs " + std::to_string(inner_coupling_.rows()) + " rows");
  for (std::size_t i = 0; i < laplacian_.rows(); ++i) {
    Rational sum(0);
    for (std::size_t j = 0; j < laplacian_.cols(); ++j) sum += laplacian_(i, j);
    if (!sum.is_zero()) throw Error("Laplacian row " + std::to_string(i + 1) + " does not sum to zero");
  }
}

Mat MASystem::state_matrix() const { return kron(Rational(-1) * laplacian_, inner_coupling_); }

Mat MASystem::input_matrix() const { return kron(selection_matrix(leaders_), agent_input_); }

}  // namespace kronctrl
