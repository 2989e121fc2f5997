#pragma once

#include "lsplacto/root_ops.h"

#include <vector>

namespace lsplacto {

struct CrystalEdge {
  std::size_t from;
  int index;
  std::size_t to;

  friend bool operator==(const CrystalEdge &, const CrystalEdge &) = default;
};

/// Crystal component of a highest monomial.  Vertices are numbered in BFS
/// discovery order (children visited by increasing root index); vertex 0 is
/// the seed.
struct CrystalGraph {
  std::vector<Monomial> vertices;
  std::vector<CrystalEdge> edges;
  std::size_t source = 0;
};

/// Straight path t -> t * lambda as a one-factor monomial of shape lambda.
Monomial straight_monomial(const RootSystem &rs, const Weight &lambda);

/// Throws NonHighestSeed unless every e_i vanishes on the seed.
CrystalGraph generate_crystal(const RootSystem &rs, const Monomial &seed);

/// L-S paths of shape w_k, in BFS order from the straight path.
std::vector<Path> ls_paths(const RootSystem &rs, int k);

/// a_1 copies of pi_{w_1}, then a_2 copies of pi_{w_2}, ...
Monomial dominant_monomial(const RootSystem &rs, const Weight &shape);

/// Fundamental index k when `shape` is w_k, otherwise 0.
int fundamental_index(const Weight &shape);

/// True when `path` lies in the crystal of the straight path of `shape`.
bool is_ls_path(const RootSystem &rs, const Path &path, const Weight &shape);

/// Monomial with every factor checked to be an L-S path of its shape.
/// Throws InvalidData otherwise.
Monomial make_monomial(const RootSystem &rs, std::vector<Factor> factors);

/// Young tableau ordering of fundamental shapes, and the monomial lies in
/// the crystal of the dominant monomial of its shape.
bool is_standard(const RootSystem &rs, const Monomial &m);

/// Plactic equivalence: equal highest weights, and transporting m1 along
/// its raising log onto the highest element of m2's component lands on m2.
bool equivalent(const RootSystem &rs, const Monomial &m1, const Monomial &m2);

} // namespace lsplacto
