#include "hm/lp.hpp"

#include <stdexcept>

namespace hm {

namespace {

/// Dense tableau: rows are constraints, columns are edge variables then slacks.
class Tableau {
 public:
  Tableau(const Hypergraph& h, const std::vector<Vertex>& row_vertex)
      : rows_(row_vertex.size()), edges_(h.num_edges()), cols_(edges_ + rows_),
        a_(rows_ * cols_), rhs_(rows_, 1), cost_(cols_), basis_(rows_) {
    std::vector<std::ptrdiff_t> row_of(h.n(), -1);
    for (std::size_t r = 0; r < rows_; ++r) row_of[row_vertex[r]] = static_cast<std::ptrdiff_t>(r);
    for (std::size_t j = 0; j < edges_; ++j) {
      for (Vertex v : h.edge(j)) at(static_cast<std::size_t>(row_of[v]), j) = 1;
      cost_[j] = -1;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      at(r, edges_ + r) = 1;
      basis_[r] = edges_ + r;
    }
  }

  std::size_t solve() {
    std::size_t pivots = 0;
    std::vector<std::size_t> nonzero;
    mpq_class ratio, best_ratio, factor;
    while (true) {
      // Bland: lowest-index column with negative reduced cost enters.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return pivots;

      // Ratio test, ties to the lowest-index basic variable.
      std::size_t leave = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        const mpq_class& coef = at(r, enter);
        if (sgn(coef) <= 0) continue;
        ratio = rhs_[r] / coef;
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      // The matching LP is bounded (every column has a positive entry).
      if (leave == rows_) throw std::logic_error("fractional matching LP reported unbounded");

      pivot(leave, enter, nonzero, factor);
      ++pivots;
    }
  }

  const mpq_class& objective() const { return objective_; }
  const mpq_class& reduced_cost(std::size_t j) const { return cost_[j]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const mpq_class& rhs(std::size_t r) const { return rhs_[r]; }

 private:
  mpq_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void pivot(std::size_t p, std::size_t enter, std::vector<std::size_t>& nonzero,
             mpq_class& factor) {
    const mpq_class inv = 1 / at(p, enter);
    nonzero.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(at(p, j)) != 0) {
        at(p, j) *= inv;
        nonzero.push_back(j);
      }
    }
    rhs_[p] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == p || sgn(at(r, enter)) == 0) continue;
      factor = at(r, enter);
      for (std::size_t j : nonzero) at(r, j) -= factor * at(p, j);
      rhs_[r] -= factor * rhs_[p];
    }
    factor = cost_[enter];
    for (std::size_t j : nonzero) cost_[j] -= factor * at(p, j);
    objective_ -= factor * rhs_[p];
    basis_[p] = enter;
  }

  std::size_t rows_, edges_, cols_;
  std::vector<mpq_class> a_;
  std::vector<mpq_class> rhs_;
  std::vector<mpq_class> cost_;
  std::vector<std::size_t> basis_;
  mpq_class objective_;
};

}  // namespace

LPOutcome nu_frac(const Hypergraph& h) {
  LPOutcome out;
  out.dual = VertexWeighting(h.n());
  if (h.empty()) return out;

  std::vector<bool> touched(h.n(), false);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex v : h.edge(i)) touched[v] = true;
  }
  std::vector<Vertex> row_vertex;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (touched[v]) row_vertex.push_back(v);
  }

  Tableau tab(h, row_vertex);
  out.pivots = tab.solve();
  // Row zero holds z - c.x = 0, so its right-hand side is the current optimum.
  out.value = Rational(tab.objective().get_num(), tab.objective().get_den());

  for (std::size_t r = 0; r < row_vertex.size(); ++r) {
    if (tab.basic(r) < h.num_edges() && sgn(tab.rhs(r)) != 0) {
      const mpq_class& x = tab.rhs(r);
      out.primal.weights[h.edge_vec(tab.basic(r))] = Rational(x.get_num(), x.get_den());
    }
    const mpq_class& y = tab.reduced_cost(h.num_edges() + r);
    out.dual[row_vertex[r]] = Rational(y.get_num(), y.get_den());
  }
  if (out.primal.size() != out.value || out.dual.size() != out.value) {
    throw std::logic_error("simplex finished without strong duality");
  }
  return out;
}

}  // namespace hm
