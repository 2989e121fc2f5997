#include "lsplacto/plactic.h"

#include "lsplacto/error.h"
#include "lsplacto/parallel.h"

#include <algorithm>
#include <sstream>

namespace lsplacto {

GeneratorTable::GeneratorTable(std::vector<Generator> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    by_path_.emplace(std::pair{entries_[i].shape_index, entries_[i].path}, i);
    by_id_.emplace(entries_[i].id, i);
  }
}

std::optional<std::size_t> GeneratorTable::find(int shape_index,
                                                const Path &path) const {
  auto it = by_path_.find({shape_index, path});
  if (it == by_path_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GeneratorTable::find(const std::string &id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end())
    return std::nullopt;
  return it->second;
}

std::size_t GeneratorTable::count_of_shape(int k) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [k](const Generator &g) { return g.shape_index == k; }));
}

RewriteSystem::RewriteSystem(const RootSystem &rs, GeneratorTable table,
                             std::vector<Rule> rules)
    : rs_(rs), table_(std::move(table)), rules_(std::move(rules)),
      lookup_(table_.size() * table_.size(), -1) {
  for (std::size_t r = 0; r < rules_.size(); ++r)
    lookup_[rules_[r].lhs[0] * table_.size() + rules_[r].lhs[1]] =
        static_cast<int>(r);
}

const Rule *RewriteSystem::rule_for(std::size_t a, std::size_t b) const {
  int r = lookup_[a * table_.size() + b];
  return r < 0 ? nullptr : &rules_[static_cast<std::size_t>(r)];
}

GeneratorTable build_generators(const RootSystem &rs) {
  std::vector<Generator> entries;
  for (int k = 1; k <= rs.rank(); ++k) {
    auto paths = ls_paths(rs, k);
    for (std::size_t ordinal = 0; ordinal < paths.size(); ++ordinal)
      entries.push_back({"w" + std::to_string(k) + "." + std::to_string(ordinal),
                         k, std::move(paths[ordinal])});
  }
  return GeneratorTable(std::move(entries));
}

Monomial word_monomial(const RootSystem &rs, const GeneratorTable &table,
                       const Word &word) {
  const auto rank = static_cast<std::size_t>(rs.rank());
  std::vector<Factor> factors;
  factors.reserve(word.size());
  for (auto g : word)
    factors.push_back(
        {Weight::fundamental(rank, table[g].shape_index), table[g].path});
  return Monomial(rank, std::move(factors));
}

RationalWeight word_weight(const RootSystem &rs, const GeneratorTable &table,
                           const Word &word) {
  RationalWeight total(static_cast<std::size_t>(rs.rank()));
  for (auto g : word)
    total += table[g].path.weight();
  return total;
}

std::vector<std::string> word_ids(const GeneratorTable &table,
                                  const Word &word) {
  std::vector<std::string> ids;
  ids.reserve(word.size());
  for (auto g : word)
    ids.push_back(table[g].id);
  return ids;
}

Word parse_word(const GeneratorTable &table, const std::string &text) {
  std::istringstream in(text);
  Word word;
  std::string id;
  while (in >> id) {
    auto g = table.find(id);
    if (!g)
      throw Error(ErrorCode::UnknownGenerator, "no generator named '" + id + "'");
    word.push_back(*g);
  }
  return word;
}

Word monomial_word(const GeneratorTable &table, const Monomial &m) {
  Word word;
  word.reserve(m.size());
  for (const auto &f : m.factors()) {
    int k = fundamental_index(f.shape);
    auto g = k ? table.find(k, f.path) : std::nullopt;
    if (!g)
      throw Error(ErrorCode::UnknownGenerator,
                  "factor of shape " + to_string(f.shape) +
                      " is not a generator");
    word.push_back(*g);
  }
  return word;
}

Word standard_form(const RootSystem &rs, const GeneratorTable &table,
                   const Monomial &m) {
  auto top = raise_to_highest(rs, m);
  Weight mu = to_weight(top.highest.weight());
  auto lowered = lower_by_log(rs, dominant_monomial(rs, mu), top.log);
  if (!lowered)
    throw Error(ErrorCode::UnknownGenerator,
                "raising log does not replay on the dominant monomial of " +
                    to_string(mu));
  return monomial_word(table, *lowered);
}

std::optional<BoxDecomposition> box_decomposition(const RootSystem &rs) {
  const int n = rs.rank();
  // Dimensions grow quickly with the multiple; a box count this large never
  // occurs for the supported ranks.
  const std::int64_t max_boxes = 4 * n + 4;
  for (int b = 1; b <= n; ++b) {
    BoxDecomposition d{b, {}};
    Weight box = rs.fundamental_weight(b);
    for (int k = 1; k <= n && static_cast<int>(d.boxes_per_shape.size()) == k - 1;
         ++k) {
      Weight omega = rs.fundamental_weight(k);
      for (std::int64_t c = 1; c <= max_boxes; ++c) {
        Weight multiple = Weight::zero(static_cast<std::size_t>(n));
        multiple.coords[b - 1] = c;
        if (rs.precedes_or_equal(omega, multiple)) {
          d.boxes_per_shape.push_back(c);
          break;
        }
      }
    }
    if (static_cast<int>(d.boxes_per_shape.size()) == n)
      return d;
  }
  return std::nullopt;
}

Weight order_shape(const RootSystem &rs, std::span<const int> shape_indices) {
  const auto rank = static_cast<std::size_t>(rs.rank());
  Weight total = Weight::zero(rank);
  bool tableau = std::is_sorted(shape_indices.begin(), shape_indices.end());
  auto boxes = tableau ? std::nullopt : box_decomposition(rs);
  for (int k : shape_indices) {
    if (boxes)
      total.coords[boxes->box_index - 1] += boxes->boxes_per_shape[k - 1];
    else
      total.coords[k - 1] += 1;
  }
  return total;
}

namespace {

Weight word_shape(const RootSystem &rs, const GeneratorTable &table,
                  const Word &word) {
  Weight total = Weight::zero(static_cast<std::size_t>(rs.rank()));
  for (auto g : word)
    total.coords[table[g].shape_index - 1] += 1;
  return total;
}

} // namespace

RewriteSystem build_rules(const RootSystem &rs, std::size_t threads) {
  GeneratorTable table = build_generators(rs);
  const std::size_t n = table.size();
  std::vector<std::optional<Rule>> slots(n * n);
  parallel_for(n * n, threads, [&](std::size_t idx) {
    std::size_t a = idx / n, b = idx % n;
    Word lhs{a, b};
    Monomial m = word_monomial(rs, table, lhs);
    if (is_standard(rs, m))
      return;
    Rule rule;
    rule.lhs[0] = a;
    rule.lhs[1] = b;
    rule.rhs = standard_form(rs, table, m);
    int indices[2] = {table[a].shape_index, table[b].shape_index};
    rule.lhs_shape = order_shape(rs, indices);
    rule.rhs_shape = word_shape(rs, table, rule.rhs);
    slots[idx] = std::move(rule);
  });
  std::vector<Rule> rules;
  for (auto &slot : slots)
    if (slot)
      rules.push_back(std::move(*slot));
  return RewriteSystem(rs, std::move(table), std::move(rules));
}

std::optional<Word> rewrite_step(const RewriteSystem &system,
                                 const Word &word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (const Rule *rule = system.rule_for(word[i], word[i + 1])) {
      Word out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(out.end(), rule->rhs.begin(), rule->rhs.end());
      out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                 word.end());
      return out;
    }
  }
  return std::nullopt;
}

Word normalize(const RewriteSystem &system, const Word &word,
               std::size_t budget) {
  Word w = word;
  std::size_t i = 0, steps = 0;
  while (i + 1 < w.size()) {
    const Rule *rule = system.rule_for(w[i], w[i + 1]);
    if (!rule) {
      ++i;
      continue;
    }
    if (++steps > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "normalize exceeded " + std::to_string(budget) + " steps");
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
            w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), rule->rhs.begin(),
             rule->rhs.end());
    // Only the pair straddling the left edge of the replacement can have
    // become a redex before position i.
    i = i > 0 ? i - 1 : 0;
  }
  return w;
}

TerminationReport audit_termination(const RootSystem &rs,
                                    std::span<const Rule> rules) {
  TerminationReport report;
  for (const auto &rule : rules) {
    ++report.rules_checked;
    report.max_rhs_length = std::max(report.max_rhs_length, rule.rhs.size());
    if (!rs.precedes(rule.rhs_shape, rule.lhs_shape)) {
      report.pass = false;
      report.failures.push_back(
          {{rule.lhs[0], rule.lhs[1]}, rule.lhs_shape, rule.rhs_shape});
    }
  }
  return report;
}

TerminationReport audit_termination(const RootSystem &rs,
                                    const RewriteSystem &system) {
  return audit_termination(rs, std::span<const Rule>(system.rules()));
}

ConfluenceReport audit_local_confluence(const RootSystem &rs,
                                        const RewriteSystem &system,
                                        std::size_t threads) {
  (void)rs;
  const std::size_t n = system.table().size();
  struct Slot {
    bool overlap = false;
    std::optional<ConfluenceFailure> failure;
  };
  std::vector<Slot> slots(n * n * n);
  parallel_for(n * n * n, threads, [&](std::size_t idx) {
    std::size_t a = idx / (n * n), b = (idx / n) % n, c = idx % n;
    const Rule *first = system.rule_for(a, b);
    const Rule *second = system.rule_for(b, c);
    if (!first || !second)
      return;
    slots[idx].overlap = true;
    Word left = first->rhs;
    left.push_back(c);
    Word right{a};
    right.insert(right.end(), second->rhs.begin(), second->rhs.end());
    Word left_nf = normalize(system, left);
    Word right_nf = normalize(system, right);
    if (left_nf != right_nf)
      slots[idx].failure =
          ConfluenceFailure{{a, b, c}, std::move(left_nf), std::move(right_nf)};
  });
  ConfluenceReport report;
  for (auto &slot : slots) {
    if (!slot.overlap)
      continue;
    ++report.triples_checked;
    if (slot.failure) {
      report.pass = false;
      report.failures.push_back(std::move(*slot.failure));
    }
  }
  return report;
}

} // namespace lsplacto
