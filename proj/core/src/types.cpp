#include "mckay/types.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mckay {

bool is_admissible_type(const LatticeEmbedding& e, const TypeVector& gamma) {
  const std::size_t n = e.dimension();
  if (gamma.size() != n + 1) return false;
  if (std::any_of(gamma.gamma.begin(), gamma.gamma.end(), [](Int g) { return g < 0; }))
    return false;
  const Int m = e.order();
  if (gamma.sum() != m) return false;
  for (std::size_t c = 0; c < n; ++c) {
    Int dot = 0;
    for (std::size_t r = 0; r < n; ++r)
      dot = checked::add(dot, checked::mul(gamma[r], e.bprime()(r, c)));
    if (checked::mod(dot, m) != 0) return false;
  }
  return true;
}

TypeSimplexReport enumerate_types(const LatticeEmbedding& e) {
  const std::size_t n = e.dimension();
  const Int m = e.order();
  const IntMatrix& h = e.hnf();
  TypeSimplexReport report;

  // Column j of the HNF only involves gamma_1..gamma_{j+1}, so each column
  // condition is checked as soon as its prefix is fixed.
  IntVector gamma(n + 1, 0);
  std::function<void(std::size_t, Int)> recurse = [&](std::size_t i, Int remaining) {
    if (i == n) {
      gamma[n] = remaining;
      report.all_types.push_back(TypeVector{gamma});
      return;
    }
    for (Int g = remaining; g >= 0; --g) {
      gamma[i] = g;
      Int dot = 0;
      for (std::size_t r = 0; r <= i; ++r) dot = checked::add(dot, checked::mul(gamma[r], h(r, i)));
      if (checked::mod(dot, m) != 0) continue;
      recurse(i + 1, remaining - g);
    }
  };
  recurse(0, m);

  for (const TypeVector& t : report.all_types)
    if (t.positive()) report.positive_types.push_back(t);
  for (int type = 1; type <= static_cast<int>(n) + 1; ++type)
    report.vertices.push_back(TypeVector::trivial(n, m, type));
  report.hollow = report.positive_types.empty();
  return report;
}

std::optional<TypeVector> has_preprojective_cut(const LatticeEmbedding& e) {
  TypeSimplexReport r = enumerate_types(e);
  if (r.positive_types.empty()) return std::nullopt;
  return r.positive_types.front();
}

std::vector<IntVector> juniors_cyclic(const GroupSpec& spec) {
  validate(spec);
  if (spec.generators.size() != 1)
    throw InvalidSpecError("junior enumeration needs exactly one generator, got " +
                           std::to_string(spec.generators.size()));
  const Generator& g = spec.generators.front();
  const Int m = g.order;
  std::set<IntVector> found;
  for (Int k = 1; k < m; ++k) {
    IntVector f(g.weights.size());
    Int sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = checked::mod(checked::mul(k, g.weights[i]), m);
      sum = checked::add(sum, f[i]);
    }
    if (sum == m) found.insert(std::move(f));
  }
  return {found.begin(), found.end()};
}

Int monomial_degree(const LatticeEmbedding& e, std::span<const Int> exponent,
                    const TypeVector& gamma) {
  const std::size_t n = e.dimension();
  if (exponent.size() != n + 1 || gamma.size() != n + 1)
    throw DimensionError("exponent and type vectors must have n+1 entries");
  IntVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = checked::sub(exponent[i], exponent[n]);
  if (!e.contains(y))
    throw std::invalid_argument("monomial with exponent " + to_string(exponent) +
                                " is not invariant");
  Int dot = 0;
  for (std::size_t i = 0; i <= n; ++i) dot = checked::add(dot, checked::mul(exponent[i], gamma[i]));
  if (dot % e.order() != 0)
    throw std::invalid_argument("degree of " + to_string(exponent) + " under type " +
                                to_string(gamma.gamma) + " is not integral");
  return dot / e.order();
}

}  // namespace mckay
