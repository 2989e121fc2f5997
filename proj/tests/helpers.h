#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lsplacto/crystal.h"
#include "lsplacto/error.h"
#include "lsplacto/plactic.h"
#include "lsplacto/root_system.h"
#include "lsplacto/typea_oracle.h"

namespace lsplacto::test {

inline RootSystem a2() { return build_root_system(TypeLabel::A, 2); }

inline RationalWeight rw(std::initializer_list<Rational> c) {
  return RationalWeight(c);
}

inline Weight w(std::vector<std::int64_t> c) { return Weight{std::move(c)}; }

// Sum of epsilon_x over `letters`, in A_{n-1} coordinates.
inline RationalWeight eps(const RootSystem &rs,
                          std::initializer_list<int> letters) {
  RationalWeight v(rs.rank());
  for (int x : letters)
    v += epsilon(rs, x);
  return v;
}

// Straight factor of fundamental shape w_k ending at `end`.
inline Factor column(const RootSystem &rs, int k, const RationalWeight &end) {
  return Factor{Weight::fundamental(rs.rank(), k), Path::straight(end)};
}

inline Monomial mono(const RootSystem &rs, std::vector<Factor> factors) {
  return make_monomial(rs, std::move(factors));
}

inline Word random_word(std::mt19937_64 &rng, std::size_t alphabet,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet - 1);
  Word out(len(rng));
  for (auto &x : out)
    x = letter(rng);
  return out;
}

inline std::vector<Weight> dominant_weights(std::size_t rank, int max_sum) {
  std::vector<Weight> out;
  std::vector<std::int64_t> c(rank, 0);
  while (true) {
    out.push_back(Weight{c});
    std::size_t i = 0;
    for (; i < rank; ++i) {
      ++c[i];
      std::int64_t s = 0;
      for (auto x : c)
        s += x;
      if (s <= max_sum)
        break;
      c[i] = 0;
    }
    if (i == rank)
      break;
  }
  return out;
}

} // namespace lsplacto::test

namespace lsplacto::test {

// Code of the Error thrown by f, or nullopt if it returns normally.
template <typename F> std::optional<ErrorCode> error_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace lsplacto::test
