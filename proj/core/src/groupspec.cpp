#include "mckay/groupspec.hpp"

namespace mckay {

namespace {

// Kernel basis of v -> (sum_i w_{j,i} v_i mod m_j)_j, before the order check.
LatticeEmbedding kernel_embedding(const GroupSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t k = spec.generators.size();
  if (k == 0) return LatticeEmbedding::identity(n);

  // Solve [W | -D] (v, t) = 0 and project onto v.
  IntMatrix a(k, n + k);
  for (std::size_t j = 0; j < k; ++j) {
    const Generator& g = spec.generators[j];
    for (std::size_t i = 0; i < n; ++i) a(j, i) = checked::mod(g.weights[i], g.order);
    a(j, n + j) = checked::neg(g.order);
  }
  const IntMatrix kernel = integer_kernel(a);
  IntMatrix gens(n, kernel.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kernel.cols(); ++c) gens(r, c) = kernel(r, c);
  return LatticeEmbedding(hnf_basis(gens));
}

}  // namespace

void validate(const GroupSpec& spec) {
  if (spec.n < 1) throw InvalidSpecError("n must be at least 1");
  for (std::size_t j = 0; j < spec.generators.size(); ++j) {
    const Generator& g = spec.generators[j];
    const std::string where = "generator " + std::to_string(j);
    if (g.order < 1) throw InvalidSpecError(where + ": order must be positive");
    if (g.weights.size() != spec.n + 1)
      throw InvalidSpecError(where + ": expected " + std::to_string(spec.n + 1) +
                             " weights, got " + std::to_string(g.weights.size()));
    Int sum = 0;
    for (Int w : g.weights) sum = checked::add(sum, w);
    if (checked::mod(sum, g.order) != 0)
      throw InvalidSpecError(where + ": weights " + to_string(g.weights) +
                             " do not sum to 0 mod " + std::to_string(g.order) +
                             " (determinant is not 1)");
  }
}

LatticeEmbedding embedding_from_spec(const GroupSpec& spec) {
  validate(spec);
  LatticeEmbedding e = kernel_embedding(spec);
  Int declared = 1;
  for (const Generator& g : spec.generators) declared = checked::mul(declared, g.order);
  if (declared != e.order())
    throw InvalidSpecError("non-faithful or redundant generating data: declared order " +
                           std::to_string(declared) + ", index [L0:L1] = " +
                           std::to_string(e.order()));
  // Store the canonical basis as B'.
  return LatticeEmbedding(e.hnf());
}

Int group_order(const GroupSpec& spec) { return embedding_from_spec(spec).order(); }

}  // namespace mckay
