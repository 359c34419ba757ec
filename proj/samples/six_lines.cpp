// Zero pattern and rank of the 12 x 12 evaluation matrix for six lines, for
// the three kinds of multipliers (d = 5, d = 6, d >= 7).

#include <iostream>

#include "starconf/reference_forms.hpp"
#include "starconf/tangent.hpp"

int main() {
  using namespace starconf;
  const RationalField q;
  const auto rows = six_line_rows();
  const auto cols = six_line_columns();

  for (unsigned d : {5U, 6U, 7U, 8U}) {
    auto star = build_star(six_line_forms(q));
    auto m = theorem41_multipliers(star, d);
    const auto p = make_tangent_problem(std::move(star), d, std::move(m));
    const auto mat = labelled_matrix(p, rows, cols);

    std::cout << "d = " << d << "\n        ";
    for (const auto& c : cols) std::cout << 'L' << c.form << 'Q' << c.q << ' ';
    std::cout << '\n';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      std::cout << "  p" << rows[r].i << rows[r].j << "   ";
      for (std::size_t c = 0; c < mat.cols(); ++c) std::cout << "  " << (mat(r, c).is_zero() ? '0' : '*') << "  ";
      std::cout << '\n';
    }
    std::cout << "  rank " << rank(mat) << "\n\n";
  }
}
