#include "lsplacto/typea_oracle.h"

#include "lsplacto/error.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lsplacto {

BoxWord parse_box_word(const std::string &digits) {
  BoxWord w;
  for (char ch : digits) {
    if (ch == ' ' || ch == ',')
      continue;
    if (ch < '1' || ch > '9')
      throw Error(ErrorCode::LetterOutOfRange,
                  std::string("box letter '") + ch + "'");
    w.push_back(ch - '0');
  }
  return w;
}

std::string to_string(const BoxWord &w) {
  std::string out;
  for (int x : w)
    out += std::to_string(x);
  return out;
}

namespace {

void push_neighbors(int n, const BoxWord &w, std::size_t max_len,
                    std::vector<BoxWord> &out) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    // (a): x z y <-> z x y with x < y <= z; both sides swap the first two.
    if ((a < c && c <= b) || (b < c && c <= a)) {
      BoxWord v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
    // (b): y x z <-> y z x with x <= y < z; both sides swap the last two.
    if ((b <= a && a < c) || (c <= a && a < b)) {
      BoxWord v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.push_back(std::move(v));
    }
  }
  // (c): the column 1 2 ... n is trivial.
  BoxWord column(static_cast<std::size_t>(n));
  std::iota(column.begin(), column.end(), 1);
  for (std::size_t i = 0; i + column.size() <= w.size(); ++i) {
    if (std::equal(column.begin(), column.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
      BoxWord v = w;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
              v.begin() + static_cast<std::ptrdiff_t>(i + column.size()));
      out.push_back(std::move(v));
    }
  }
  if (w.size() + column.size() <= max_len) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      BoxWord v = w;
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), column.begin(),
               column.end());
      out.push_back(std::move(v));
    }
  }
}

void check_letters(int n, const BoxWord &w) {
  for (int x : w)
    if (x < 1 || x > n)
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + std::to_string(x) + " outside 1.." +
                      std::to_string(n));
}

} // namespace

std::set<BoxWord> knuth_class(int n, const BoxWord &w,
                              std::size_t max_word_length) {
  check_letters(n, w);
  std::set<BoxWord> seen{w};
  std::deque<BoxWord> queue{w};
  std::vector<BoxWord> next;
  while (!queue.empty()) {
    BoxWord u = std::move(queue.front());
    queue.pop_front();
    next.clear();
    push_neighbors(n, u, max_word_length, next);
    for (auto &v : next)
      if (seen.insert(v).second)
        queue.push_back(std::move(v));
  }
  return seen;
}

bool knuth_equiv(int n, const BoxWord &w1, const BoxWord &w2,
                 std::size_t budget) {
  if (w1.size() > budget || w2.size() > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "box words longer than " + std::to_string(budget));
  check_letters(n, w2);
  return knuth_class(n, w1, budget + static_cast<std::size_t>(n)).contains(w2);
}

RationalWeight epsilon(const RootSystem &rs, int x) {
  const int rank = rs.rank();
  if (rs.label() != TypeLabel::A)
    throw Error(ErrorCode::UnsupportedType, "box letters need type A");
  if (x < 1 || x > rank + 1)
    throw Error(ErrorCode::LetterOutOfRange,
                "letter " + std::to_string(x) + " outside 1.." +
                    std::to_string(rank + 1));
  // epsilon_x = w_x - w_{x-1}, with w_0 = w_{rank+1} = 0.
  RationalWeight e(static_cast<std::size_t>(rank));
  if (x <= rank)
    e[x - 1] += 1;
  if (x >= 2)
    e[x - 2] -= 1;
  return e;
}

Monomial box_to_monomial(const RootSystem &rs, const BoxWord &w) {
  const auto rank = static_cast<std::size_t>(rs.rank());
  Weight omega1 = Weight::fundamental(rank, 1);
  std::vector<Factor> factors;
  factors.reserve(w.size());
  for (int x : w)
    factors.push_back({omega1, Path::straight(epsilon(rs, x))});
  return Monomial(rank, std::move(factors));
}

namespace {

std::vector<BoxWord> all_words(int n, std::size_t max_len) {
  std::vector<BoxWord> words;
  std::vector<BoxWord> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<BoxWord> grown;
    for (const auto &w : layer)
      for (int x = 1; x <= n; ++x) {
        BoxWord v = w;
        v.push_back(x);
        grown.push_back(std::move(v));
      }
    words.insert(words.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return words;
}

/// Class sizes of the partition induced by an equivalence given pairwise.
std::vector<std::size_t>
partition_sizes(const std::vector<std::vector<bool>> &related) {
  const std::size_t n = related.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (related[i][j])
        parent[find(j)] = find(i);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    ++count[find(i)];
  std::vector<std::size_t> sizes;
  for (auto c : count)
    if (c)
      sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

OracleReport cross_check(int n, std::size_t max_len) {
  if (n < 2 || n > 4)
    throw Error(ErrorCode::UnsupportedType,
                "oracle alphabet size " + std::to_string(n));
  RootSystem rs = build_root_system(TypeLabel::A, n - 1);
  auto words = all_words(n, max_len);
  const std::size_t count = words.size();

  std::vector<std::set<BoxWord>> classes;
  classes.reserve(count);
  for (const auto &w : words)
    classes.push_back(knuth_class(n, w, max_len + static_cast<std::size_t>(n)));
  std::vector<Monomial> monomials;
  monomials.reserve(count);
  for (const auto &w : words)
    monomials.push_back(box_to_monomial(rs, w));

  OracleReport report;
  report.n = n;
  report.max_len = max_len;
  report.words = count;
  std::vector<std::vector<bool>> knuth(count, std::vector<bool>(count));
  std::vector<std::vector<bool>> path(count, std::vector<bool>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      knuth[i][j] = classes[i].contains(words[j]);
      path[i][j] = equivalent(rs, monomials[i], monomials[j]);
      if (knuth[i][j] != path[i][j])
        report.mismatches.push_back(
            {words[i], words[j], knuth[i][j], path[i][j]});
    }
  }
  report.class_sizes_knuth = partition_sizes(knuth);
  report.class_sizes_path_model = partition_sizes(path);
  report.classes_knuth = report.class_sizes_knuth.size();
  report.classes_path_model = report.class_sizes_path_model.size();

  bool descending = is_standard(rs, box_to_monomial(rs, {2, 1}));
  bool ascending = is_standard(rs, box_to_monomial(rs, {1, 2}));
  if (descending && !ascending)
    report.row_reading = "right-to-left";
  else if (ascending && !descending)
    report.row_reading = "left-to-right";
  else
    report.row_reading = "inconsistent";
  return report;
}

} // namespace lsplacto
