#pragma once

#include "lsplacto/crystal.h"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lsplacto {

struct Generator {
  std::string id; // "w<k>.<ordinal>"
  int shape_index;
  Path path;
};

/// The alphabet: L-S paths of every fundamental shape, grouped by shape
/// index and in BFS order within a group.
class GeneratorTable {
public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<Generator> entries);

  std::size_t size() const { return entries_.size(); }
  const Generator &operator[](std::size_t index) const {
    return entries_[index];
  }
  const std::vector<Generator> &entries() const { return entries_; }

  std::optional<std::size_t> find(int shape_index, const Path &path) const;
  std::optional<std::size_t> find(const std::string &id) const;

  /// Number of generators of shape w_k.
  std::size_t count_of_shape(int k) const;

private:
  std::vector<Generator> entries_;
  std::map<std::pair<int, Path>, std::size_t> by_path_;
  std::map<std::string, std::size_t> by_id_;
};

/// Sequence of generator-table indices.
using Word = std::vector<std::size_t>;

struct Rule {
  std::size_t lhs[2];
  Word rhs;
  Weight lhs_shape;
  Weight rhs_shape;
};

class RewriteSystem {
public:
  RewriteSystem(const RootSystem &rs, GeneratorTable table,
                std::vector<Rule> rules);

  const RootSystem &root_system() const { return rs_; }
  const GeneratorTable &table() const { return table_; }
  const std::vector<Rule> &rules() const { return rules_; }

  /// Rule with left-hand side (a, b), if any.
  const Rule *rule_for(std::size_t a, std::size_t b) const;

private:
  RootSystem rs_;
  GeneratorTable table_;
  std::vector<Rule> rules_;
  std::vector<int> lookup_;
};

GeneratorTable build_generators(const RootSystem &rs);

Monomial word_monomial(const RootSystem &rs, const GeneratorTable &table,
                       const Word &word);

/// Sum of the generator weights.
RationalWeight word_weight(const RootSystem &rs, const GeneratorTable &table,
                           const Word &word);

std::vector<std::string> word_ids(const GeneratorTable &table,
                                  const Word &word);

/// Parses generator ids separated by whitespace; throws UnknownGenerator.
Word parse_word(const GeneratorTable &table, const std::string &text);

/// Factorizes a monomial whose factors are fundamental L-S paths; throws
/// UnknownGenerator.
Word monomial_word(const GeneratorTable &table, const Monomial &m);

/// The unique standard tableau in the plactic class of m.
Word standard_form(const RootSystem &rs, const GeneratorTable &table,
                   const Monomial &m);

/// Smallest fundamental index b such that every w_k lies weakly below some
/// multiple c_k * w_b in the dominance order, with the multiples c_k; used to
/// decompose columns into boxes.  nullopt when no such b exists.
struct BoxDecomposition {
  int box_index;
  std::vector<std::int64_t> boxes_per_shape; // c_k for k = 1..n
};
std::optional<BoxDecomposition> box_decomposition(const RootSystem &rs);

/// Shape used by the termination order for a monomial with the given factor
/// shape indices: the sum of the shapes for a Young tableau (weakly
/// increasing indices), otherwise the box decomposition  (sum c_k) w_b.
Weight order_shape(const RootSystem &rs, std::span<const int> shape_indices);

RewriteSystem build_rules(const RootSystem &rs, std::size_t threads = 1);

constexpr std::size_t kNormalizeBudget = 1000000;

/// Leftmost-first rewriting to the normal form; throws BudgetExceeded.
Word normalize(const RewriteSystem &system, const Word &word,
               std::size_t budget = kNormalizeBudget);

/// Single leftmost rewriting step, or nullopt on a normal form.
std::optional<Word> rewrite_step(const RewriteSystem &system, const Word &word);

struct TerminationFailure {
  std::size_t lhs[2];
  Weight lhs_shape;
  Weight rhs_shape;
};

struct TerminationReport {
  bool pass = true;
  std::size_t rules_checked = 0;
  std::size_t max_rhs_length = 0;
  std::vector<TerminationFailure> failures;
};

TerminationReport audit_termination(const RootSystem &rs,
                                     std::span<const Rule> rules);
TerminationReport audit_termination(const RootSystem &rs,
                                    const RewriteSystem &system);

struct ConfluenceFailure {
  std::size_t triple[3];
  Word left;  // normal form after rewriting c1 c2 first
  Word right; // normal form after rewriting c2 c3 first
};

struct ConfluenceReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::vector<ConfluenceFailure> failures;
};

ConfluenceReport audit_local_confluence(const RootSystem &rs,
                                        const RewriteSystem &system,
                                        std::size_t threads = 1);

} // namespace lsplacto
