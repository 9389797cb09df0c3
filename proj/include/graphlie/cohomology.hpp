#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphlie/lie_algebra.hpp"
#include "graphlie/linalg.hpp"

namespace graphlie {

/// Coordinate conventions for cochains on V = Q^n.
///
///   Hom(V,V):      f(e_a) = sum_b f_{ab} e_b          column a*n + b
///   Hom(L^2 V,V):  sigma(e_a,e_b) = sum_c s_{ab,c} e_c  column pair(a,b)*n + c, a<b
///   delta2 target: (x<y<z, d)                          row triple(x,y,z)*n + d
///   eta2 target:   (x<y, z, d), alternating in x,y only row (pair(x,y)*n + z)*n + d
struct CochainCoordinates {
  std::size_t n;

  std::size_t pairs() const { return n * (n - 1) / 2; }
  std::size_t triples() const { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
  std::size_t pair_index(std::size_t a, std::size_t b) const;  ///< a < b
  std::size_t triple_index(std::size_t x, std::size_t y, std::size_t z) const;  ///< x < y < z

  std::size_t hom1_dim() const { return n * n; }
  std::size_t hom2_dim() const { return pairs() * n; }
  std::size_t delta2_rows() const { return triples() * n; }
  std::size_t eta2_rows() const { return pairs() * n * n; }

  std::size_t hom1_index(std::size_t a, std::size_t b) const { return a * n + b; }
  std::size_t hom2_index(std::size_t a, std::size_t b, std::size_t c) const {
    return pair_index(a, b) * n + c;
  }
};

/// delta1 f(x,y) = [f(x),y] + [x,f(y)] - f([x,y])
RatMatrix delta1_matrix(const LieAlgebra& a);

/// delta2 s(x,y,z) = [x,s(y,z)] - [y,s(x,z)] + [z,s(x,y)]
///                   - s([x,y],z) + s([x,z],y) - s([y,z],x)
RatMatrix delta2_matrix(const LieAlgebra& a);

/// eta2 s(x,y,z) = [s(x,y),z] + s([x,y],z). Requires a at most 2-step.
RatMatrix eta2_matrix(const LieAlgebra& a);

/// 2-cochain coordinates of an alternating map.
Vector cochain_vector(const AlternatingMap& s);
AlternatingMap cochain_map(const Vector& coords, std::size_t n);

struct H2NilReport {
  std::size_t dim_hom2 = 0;
  std::size_t dim_ker_eta2 = 0;
  std::size_t dim_ker_delta2 = 0;
  std::size_t dim_intersection = 0;
  std::size_t dim_im_delta1 = 0;
  std::size_t h2_dim = 0;
  bool eta2_subset_delta2 = false;
  std::size_t blocks = 1;  ///< weight blocks the computation was split into

  friend bool operator==(const H2NilReport&, const H2NilReport&) = default;
};

/// H^2_{2-nil} = (ker delta2 cap ker eta2) / Im delta1 for an at most 2-step algebra.
///
/// When `weights` is given (one integer tuple per basis vector, additive under
/// the bracket, e.g. multidegrees) all three maps preserve the weight shift of
/// a cochain and every rank is computed block by block. A weight assignment the
/// bracket does not respect is rejected. Aborts with InvariantViolation if
/// delta2 delta1 != 0 or Im delta1 is not inside ker eta2.
H2NilReport h2_nil(const LieAlgebra& a, std::span<const MultiDegree> weights = {});

/// Uses the multidegree labels when present.
H2NilReport h2_nil(const GradedLieAlgebra& a);

}  // namespace graphlie
