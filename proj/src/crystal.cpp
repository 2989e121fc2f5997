#include "lsplacto/crystal.h"

#include "lsplacto/error.h"

#include <deque>
#include <map>

namespace lsplacto {

Monomial straight_monomial(const RootSystem &rs, const Weight &lambda) {
  if (!lambda.is_dominant() ||
      lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::NonDominantWeight, to_string(lambda));
  return single_factor(lambda, Path::straight(lambda.to_rational()));
}

CrystalGraph generate_crystal(const RootSystem &rs, const Monomial &seed) {
  if (!is_highest(rs, seed))
    throw Error(ErrorCode::NonHighestSeed,
                "seed is not a highest element of its crystal");

  // Vertex identity is the factor shape list plus the concatenated path.
  using Key = std::pair<std::vector<Weight>, Path>;
  auto key_of = [](const Monomial &m) {
    std::vector<Weight> shapes;
    for (const auto &f : m.factors())
      shapes.push_back(f.shape);
    return Key{std::move(shapes), m.concatenation()};
  };

  CrystalGraph graph;
  std::map<Key, std::size_t> index;
  graph.vertices.push_back(seed);
  index.emplace(key_of(seed), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      auto child = apply_op_mono(rs, graph.vertices[u], i, Direction::Lower);
      if (!child)
        continue;
      auto [it, inserted] = index.emplace(key_of(*child), graph.vertices.size());
      if (inserted) {
        graph.vertices.push_back(std::move(*child));
        queue.push_back(it->second);
      }
      graph.edges.push_back({u, i, it->second});
    }
  }
  return graph;
}

std::vector<Path> ls_paths(const RootSystem &rs, int k) {
  rs.check_index(k);
  auto graph = generate_crystal(
      rs, straight_monomial(rs, rs.fundamental_weight(k)));
  std::vector<Path> out;
  out.reserve(graph.vertices.size());
  for (auto &v : graph.vertices)
    out.push_back(v.concatenation());
  return out;
}

Monomial dominant_monomial(const RootSystem &rs, const Weight &shape) {
  if (!shape.is_dominant() ||
      shape.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::NonDominantWeight, to_string(shape));
  std::vector<Factor> factors;
  for (int k = 1; k <= rs.rank(); ++k) {
    Weight omega = rs.fundamental_weight(k);
    for (std::int64_t c = 0; c < shape.coords[k - 1]; ++c)
      factors.push_back({omega, Path::straight(omega.to_rational())});
  }
  return Monomial(shape.rank(), std::move(factors));
}

int fundamental_index(const Weight &shape) {
  int found = 0;
  for (std::size_t i = 0; i < shape.rank(); ++i) {
    if (shape.coords[i] == 0)
      continue;
    if (shape.coords[i] != 1 || found)
      return 0;
    found = static_cast<int>(i) + 1;
  }
  return found;
}

bool is_ls_path(const RootSystem &rs, const Path &path, const Weight &shape) {
  if (!shape.is_dominant() || path.rank() != shape.rank())
    return false;
  Monomial m = single_factor(shape, path);
  try {
    auto top = raise_to_highest(rs, m);
    return top.highest.concatenation() == Path::straight(shape.to_rational());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::IntegralityViolation)
      return false;
    throw;
  }
}

Monomial make_monomial(const RootSystem &rs, std::vector<Factor> factors) {
  for (std::size_t f = 0; f < factors.size(); ++f)
    if (!is_ls_path(rs, factors[f].path, factors[f].shape))
      throw Error(ErrorCode::InvalidData,
                  "factor " + std::to_string(f) + " is not an L-S path of shape " +
                      to_string(factors[f].shape));
  return Monomial(static_cast<std::size_t>(rs.rank()), std::move(factors));
}

bool is_standard(const RootSystem &rs, const Monomial &m) {
  int previous = 0;
  for (const auto &f : m.factors()) {
    int k = fundamental_index(f.shape);
    if (k == 0 || k < previous)
      return false;
    previous = k;
  }
  auto top = raise_to_highest(rs, m);
  return top.highest == dominant_monomial(rs, m.shape());
}

bool equivalent(const RootSystem &rs, const Monomial &m1, const Monomial &m2) {
  auto top1 = raise_to_highest(rs, m1);
  auto top2 = raise_to_highest(rs, m2);
  if (top1.highest.weight() != top2.highest.weight())
    return false;
  auto image = lower_by_log(rs, top2.highest, top1.log);
  return image && image->concatenation() == m2.concatenation();
}

} // namespace lsplacto
