#ifndef HM_LP_HPP
#define HM_LP_HPP

#include "hm/hypergraph.hpp"
#include "hm/weights.hpp"

namespace hm {

/// Optimal primal/dual pair of the fractional matching LP
///   max sum_e f(e)  s.t.  sum_{e ∋ v} f(e) <= 1,  f >= 0
/// and its dual, the fractional vertex cover LP
///   min sum_v w(v)  s.t.  sum_{v ∈ e} w(v) >= 1,  w >= 0.
struct LPOutcome {
  Rational value;
  EdgeWeighting primal;
  VertexWeighting dual;
  std::size_t pivots = 0;
};

/// Exact primal simplex with Bland's rule over rationals.
///
/// Slack basis is feasible (b = 1), so no phase one is needed. The dual is
/// read off the reduced costs of the slack columns at optimality. Vertices
/// of degree zero contribute no row and get dual weight zero.
LPOutcome nu_frac(const Hypergraph& h);

/// mu(H); identical to nu_frac(h).value by LP duality.
inline Rational mu(const Hypergraph& h) { return nu_frac(h).value; }

}  // namespace hm

#endif
