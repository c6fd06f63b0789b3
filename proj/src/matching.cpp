#include "hm/matching.hpp"

#include "hm/error.hpp"

namespace hm {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& h, std::uint64_t node_cap)
      : h_(h), cap_(node_cap), used_(h.n(), false), free_(h.n()),
        ceiling_(h.n() / h.k()) {}

  IntegralMatching run() {
    search(0);
    IntegralMatching out;
    out.size = best_.size();
    for (std::size_t i : best_) out.edges.push_back(h_.edge_vec(i));
    out.nodes = nodes_;
    return out;
  }

 private:
  void search(std::size_t next) {
    if (++nodes_ > cap_) throw Error(ErrorKind::TooLarge, "branch-and-bound node cap exceeded");
    if (current_.size() > best_.size()) best_ = current_;
    if (best_.size() == ceiling_) return;
    const std::size_t left = h_.num_edges() - next;
    if (current_.size() + std::min(left, free_ / h_.k()) <= best_.size()) return;
    if (next == h_.num_edges()) return;

    auto e = h_.edge(next);
    bool fits = true;
    for (Vertex v : e) fits = fits && !used_[v];
    if (fits) {
      for (Vertex v : e) used_[v] = true;
      free_ -= h_.k();
      current_.push_back(next);
      search(next + 1);
      current_.pop_back();
      free_ += h_.k();
      for (Vertex v : e) used_[v] = false;
      if (best_.size() == ceiling_) return;
    }
    search(next + 1);
  }

  const Hypergraph& h_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  std::size_t free_;
  std::size_t ceiling_;
  std::vector<std::size_t> current_, best_;
};

}  // namespace

IntegralMatching nu_integral(const Hypergraph& h, std::uint64_t node_cap) {
  if (h.empty()) return {};
  return BranchAndBound(h, node_cap).run();
}

bool is_matching(const Hypergraph& h, const std::vector<Edge>& edges) {
  std::vector<bool> used(h.n(), false);
  for (const auto& e : edges) {
    if (!h.contains(e)) return false;
    for (Vertex v : e) {
      if (used[v]) return false;
      used[v] = true;
    }
  }
  return true;
}

}  // namespace hm
