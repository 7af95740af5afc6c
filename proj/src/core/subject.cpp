#include "gnorm/subject.hpp"

#include <cmath>

#include "gnorm/constructions.hpp"
#include "gnorm/norms.hpp"

namespace gnorm {

void Subject::fill_entrywise() {
  l1_ = entrywise_norm(matrix_, 1.0);
  l2_ = entrywise_norm(matrix_, 2.0);
  linf_ = entrywise_norm(matrix_, kEntrywiseInfinity);
  nonnegative_ = is_nonnegative(matrix_);
  zero_one_ = is_zero_one(matrix_);
}

Subject Subject::from_graph(Graph g) {
  Subject s(g.adjacency_matrix());
  s.eigen_ = symmetric_eigenvalues(g.adjacency_real(), static_cast<std::size_t>(g.order()));
  s.sigma_ = singular_values_from_eigen(*s.eigen_);
  s.edges_ = g.edge_count();
  if (g.order() <= kMaxExactChromaticOrder) s.chromatic_ = chromatic_number(g);
  s.graph_ = std::move(g);
  s.fill_entrywise();
  return s;
}

Subject Subject::from_matrix(CMatrix a) {
  Subject s(std::move(a));
  s.fill_entrywise();
  if (s.matrix_.is_square() &&
      s.matrix_.hermitian_defect() <= 1e-12 * (1.0 + s.linf_)) {
    s.eigen_ = hermitian_eigenvalues(s.matrix_);
    s.sigma_ = singular_values_from_eigen(*s.eigen_);
  } else {
    s.sigma_ = singular_values(s.matrix_);
  }
  return s;
}

}  // namespace gnorm
