#pragma once

#include "lsplacto/crystal.h"

#include <set>
#include <string>
#include <vector>

namespace lsplacto {

/// Word over the alphabet {1, ..., n}.
using BoxWord = std::vector<int>;

BoxWord parse_box_word(const std::string &digits);
std::string to_string(const BoxWord &w);

/// Congruence class of a box word under the relations
///   (a) xzy = zxy  for x < y <= z,
///   (b) yxz = yzx  for x <= y < z,
///   (c) 1 2 ... n = empty,
/// explored by breadth-first search over words of length at most
/// `max_word_length`.
std::set<BoxWord> knuth_class(int n, const BoxWord &w,
                              std::size_t max_word_length);

constexpr std::size_t kKnuthLengthBudget = 6;

/// Throws BudgetExceeded when either word is longer than `budget`; the
/// closure explores words up to budget + n letters.
bool knuth_equiv(int n, const BoxWord &w1, const BoxWord &w2,
                 std::size_t budget = kKnuthLengthBudget);

/// Letter x maps to the straight path to epsilon_x, a generator of shape
/// w_1.  Requires a type A root system of rank n - 1.
Monomial box_to_monomial(const RootSystem &rs, const BoxWord &w);

/// epsilon_x in fundamental-weight coordinates of A_{n-1}.
RationalWeight epsilon(const RootSystem &rs, int x);

struct OracleMismatch {
  BoxWord first;
  BoxWord second;
  bool knuth;
  bool path_model;
};

struct OracleReport {
  int n = 0;
  std::size_t max_len = 0;
  std::size_t words = 0;
  std::size_t classes_path_model = 0;
  std::size_t classes_knuth = 0;
  std::vector<std::size_t> class_sizes_path_model; // sorted
  std::vector<std::size_t> class_sizes_knuth;      // sorted
  std::vector<OracleMismatch> mismatches;
  /// Reading of single-row normal forms observed for the letter order.
  std::string row_reading;
};

/// Compares Knuth congruence with path-model equivalence on every pair of
/// box words of length 1 to max_len.
OracleReport cross_check(int n, std::size_t max_len);

} // namespace lsplacto
