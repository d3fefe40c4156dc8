#ifndef KTYPE_MODLAB_HPP
#define KTYPE_MODLAB_HPP

#include <vector>

#include "ktype/affhecke.hpp"
#include "ktype/linalg.hpp"

namespace ktype {

// Unital matrix algebra generated by a module's action operators, stored as
// a canonical (RREF of vectorized matrices) basis.
class EnvelopingAlgebra {
  public:
    EnvelopingAlgebra(int ambient_dim, std::vector<Matrix> basis)
        : d_(ambient_dim), basis_(std::move(basis)) {}

    int ambient_dim() const { return d_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Matrix>& basis() const { return basis_; }
    bool is_full_matrix_algebra() const { return dim() == d_ * d_; }

  private:
    int d_;
    std::vector<Matrix> basis_;
};

// Closure of {identity} under left multiplication by the module's action
// matrices, spun breadth-first in the d^2-dimensional matrix space.
EnvelopingAlgebra envelope(const AlgebraModule& m);

// Jacobson radical by the characteristic-zero trace-form criterion:
// J = {x in A : tr(x y) = 0 for all y in A}.  Returned in coordinates of
// the algebra basis.
Subspace radical(const EnvelopingAlgebra& a);

// The radical as explicit matrices.
std::vector<Matrix> radical_matrices(const EnvelopingAlgebra& a);

// Quotient of a module by an invariant subspace, with projection/section
// data relating it to the parent.
struct QuotientModule {
    AlgebraModule module;
    Matrix projection;  // quotient_dim x parent_dim
    Matrix section;     // parent_dim x quotient_dim, projection * section = id
    int parent_dim = 0;
};

// Head m / (rad(envelope(m)) . m).  For modules tagged InducedStandard the
// result must be irreducible (theory guarantees it); a reducible head
// raises internal_error instead of being returned.
QuotientModule cosocle(const AlgebraModule& m);

// radical(envelope(m)) kills m AND the commutant is scalars.  Correct for
// the absolutely irreducible, rationally defined modules this artifact
// produces.
bool is_irreducible(const AlgebraModule& m);

// Space of linear maps m1 -> m2 intertwining every shared generator.  Both
// modules must present the same generator arity (restrict both to the T
// part for K-type work).
Subspace hom_space(const AlgebraModule& m1, const AlgebraModule& m2);

}  // namespace ktype

#endif
