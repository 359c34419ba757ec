// Quartics through a five-line star configuration: the tangent space has
// dimension 14 rather than the expected 15, so these curves form a
// hypersurface in the 14-dimensional space of plane quartics.

#include <iostream>
#include <vector>

#include "starconf/certificate.hpp"
#include "starconf/poly_io.hpp"
#include "starconf/reference_forms.hpp"
#include "starconf/tangent.hpp"

int main() {
  using namespace starconf;
  const RationalField q;
  const auto star = build_star(luroth_forms(q));

  std::cout << "lines:\n";
  for (std::size_t i = 1; i <= star.size(); ++i) std::cout << "  L" << i << " = " << format_poly(star.line(i)) << '\n';
  std::cout << "points:\n";
  for (const auto& [label, p] : star.points()) {
    std::cout << "  p" << label.i << label.j << " = (";
    for (std::size_t k = 0; k < 3; ++k) std::cout << (k ? " : " : "") << p.coordinates()[k];
    std::cout << ")\n";
  }

  const std::vector<HomogeneousPoly<RationalField>> ones(5, HomogeneousPoly<RationalField>::one(q, 3));
  const auto problem = make_tangent_problem(star, 4, ones);
  std::cout << "Q1 = " << format_poly(problem.q_forms[0]) << '\n';
  std::cout << "dim I_4 (coefficient matrix) = " << tangent_dim_direct(problem) << '\n';
  std::cout << "dim I_4 (point evaluation)   = " << tangent_dim_points(problem) << '\n';

  SamplingOptions<RationalField> opts;
  opts.fixed_forms = luroth_forms(q);
  opts.multipliers = MultiplierPolicy::Structured;
  std::cout << to_json(certify(4, 5, q, 1, 0, opts)).dump(2) << '\n';
}
