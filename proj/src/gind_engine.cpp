#include "normlab/gind_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normlab/error.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

ComputationResult gind_eval(const GIndPair& pair, const Matrix& a, const OptBudget& budget,
                            Strategy strategy) {
  const std::size_t n = a.dim();
  for (const auto* s : {&pair.norm1, &pair.norm2})
    if (auto d = s->dim(); d && *d != n) throw DimensionError("gind_eval: dimension mismatch");

  double factor = 1.0;
  const VectorNormSpec* codomain = &pair.norm2;
  while (codomain->kind() == VectorNormSpec::Kind::Scaled) {
    factor *= codomain->gamma();
    codomain = &codomain->inner();
  }
  ComputationResult r =
      maximize_on_sphere(VectorObjective::linear_norm(a, *codomain), pair.norm1, n, budget, strategy);
  r.value *= factor;
  return r;
}

ChainReport chain_compare(const GIndPair& pair, const Matrix& a, const OptBudget& budget) {
  ChainReport rep;
  rep.v21 = gind_eval({pair.norm2, pair.norm1}, a, budget).value;
  rep.v11 = gind_eval({pair.norm1, pair.norm1}, a, budget).value;
  rep.v22 = gind_eval({pair.norm2, pair.norm2}, a, budget).value;
  rep.v12 = gind_eval({pair.norm1, pair.norm2}, a, budget).value;

  const std::pair<double, double> links[] = {
      {rep.v21, rep.v11}, {rep.v11, rep.v12}, {rep.v21, rep.v22}, {rep.v22, rep.v12}};
  rep.slack = std::numeric_limits<double>::infinity();
  rep.chain_holds = true;
  for (const auto& [lhs, rhs] : links) {
    rep.slack = std::min(rep.slack, rhs - lhs);
    if (lhs > rhs + kChainSlack * std::max(std::abs(lhs), std::abs(rhs))) rep.chain_holds = false;
  }
  return rep;
}

}  // namespace normlab
