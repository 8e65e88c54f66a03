#pragma once

#include <vector>

#include "ncgeom/calculus.hpp"

namespace ncgeom {

/// Ad-invariant bilinear form η^{ab} = δ_ab + μ on the class.
struct Metric {
  mpq_class mu;
  int n = 0;
  ExactMatrix eta;
  ExactMatrix eta_inv;
};

/// Throws SingularMetricError when μ = -1/n.
Metric metric(int class_size, const mpq_class& mu);

/// e^{*a} = Σ_b e_b η^{ba}.
std::vector<OneForm> coframe(const Calculus& calc, const Metric& m);

/// g = Σ_a e_a ⊗ e_a + μ θ ⊗ θ.
TensorForm metric_tensor(const Calculus& calc, const Metric& m);

/// η^{Ad_{g⁻¹}(a), b} = η^{a, Ad_g(b)} for every g in the group.
bool is_ad_invariant(const ConjClass& c, const Metric& m);

}  // namespace ncgeom
