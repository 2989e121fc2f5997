#include "lsplacto/root_system.h"

#include "lsplacto/error.h"
#include "root_data_embedded.h"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace lsplacto {

std::string_view to_string(TypeLabel label) {
  switch (label) {
  case TypeLabel::A:
    return "A";
  case TypeLabel::B:
    return "B";
  case TypeLabel::C:
    return "C";
  case TypeLabel::D:
    return "D";
  case TypeLabel::G2:
    return "G2";
  }
  return "?";
}

TypeLabel parse_type_label(std::string_view text) {
  if (text == "A")
    return TypeLabel::A;
  if (text == "B")
    return TypeLabel::B;
  if (text == "C")
    return TypeLabel::C;
  if (text == "D")
    return TypeLabel::D;
  if (text == "G2" || text == "G")
    return TypeLabel::G2;
  throw Error(ErrorCode::UnsupportedType,
              "unknown type label '" + std::string(text) + "'");
}

Weight Weight::fundamental(std::size_t rank, int k) {
  Weight w = zero(rank);
  if (k < 1 || static_cast<std::size_t>(k) > rank)
    throw Error(ErrorCode::IndexOutOfRange,
                "fundamental weight index " + std::to_string(k));
  w.coords[k - 1] = 1;
  return w;
}

bool Weight::is_dominant() const {
  for (auto c : coords)
    if (c < 0)
      return false;
  return true;
}

Weight &Weight::operator+=(const Weight &other) {
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] += other.coords[i];
  return *this;
}

Weight operator-(Weight a, const Weight &b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    a.coords[i] -= b.coords[i];
  return a;
}

std::string to_string(const Weight &w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(w.coords[i]);
  }
  return out + ")";
}

Weight to_weight(const RationalWeight &v) {
  Weight w = Weight::zero(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (!is_integer(v[i]))
      throw Error(ErrorCode::IntegralityViolation,
                  "non-integral weight " + to_string(v));
    w.coords[i] = v[i].numerator();
  }
  return w;
}

bool is_dominant(const RationalWeight &v) {
  for (const auto &c : v.coords())
    if (c < 0)
      return false;
  return true;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse; returns empty on singular input.
Matrix invert(const Matrix &m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      return {};
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j)
        a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

[[noreturn]] void invalid(const std::string &what) {
  throw Error(ErrorCode::InvalidData, what);
}

} // namespace

RootSystem::RootSystem(TypeLabel label, int rank,
                       std::vector<std::vector<std::int64_t>> cartan,
                       std::vector<std::int64_t> symmetrizer,
                       std::vector<std::vector<std::int64_t>> positive_coroots)
    : label_(label), rank_(rank), cartan_(std::move(cartan)),
      symmetrizer_(std::move(symmetrizer)),
      positive_coroots_(std::move(positive_coroots)) {
  const auto n = static_cast<std::size_t>(rank_);
  if (rank_ < 1 || cartan_.size() != n || symmetrizer_.size() != n)
    invalid("dimension mismatch in root data for " + name());
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n)
      invalid("cartan row size mismatch for " + name());
    if (symmetrizer_[i] <= 0)
      invalid("non-positive symmetrizer for " + name());
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? cartan_[i][j] != 2 : cartan_[i][j] > 0)
        invalid("cartan entry out of range for " + name());
      if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
        invalid("symmetrizer does not symmetrize cartan for " + name());
    }
  }
  // Positive definiteness via leading principal minors of diag(d) * cartan.
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        minor[i][j] = Rational(symmetrizer_[i] * cartan_[i][j]);
    if (determinant(minor) <= 0)
      invalid("symmetrized cartan not positive definite for " + name());
  }
  if (positive_coroots_.size() != expected_positive_root_count(label_, rank_))
    invalid("positive coroot count mismatch for " + name());
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto &c : positive_coroots_) {
      if (c.size() != n)
        invalid("coroot length mismatch for " + name());
      bool unit = true;
      for (std::size_t j = 0; j < n; ++j)
        unit = unit && c[j] == (i == j ? 1 : 0);
      found = found || unit;
    }
    if (!found)
      invalid("simple coroot missing from positive coroots for " + name());
  }

  for (std::size_t j = 0; j < n; ++j) {
    RationalWeight alpha(n);
    for (std::size_t i = 0; i < n; ++i)
      alpha[i] = Rational(cartan_[i][j]);
    simple_roots_.push_back(std::move(alpha));
  }
  Matrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Rational(cartan_[i][j]);
  cartan_inverse_ = invert(a);
}

std::string RootSystem::name() const {
  if (label_ == TypeLabel::G2)
    return "G2";
  return std::string(to_string(label_)) + std::to_string(rank_);
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw Error(ErrorCode::IndexOutOfRange,
                "root index " + std::to_string(i) + " not in 1.." +
                    std::to_string(rank_));
}

std::int64_t RootSystem::cartan(int i, int j) const {
  check_index(i);
  check_index(j);
  return cartan_[i - 1][j - 1];
}

const RationalWeight &RootSystem::simple_root(int j) const {
  check_index(j);
  return simple_roots_[j - 1];
}

Weight RootSystem::fundamental_weight(int k) const {
  check_index(k);
  return Weight::fundamental(rank_, k);
}

Rational RootSystem::pairing(const RationalWeight &v, int i) const {
  check_index(i);
  return v[i - 1];
}

RationalWeight RootSystem::reflect(int i, const RationalWeight &v) const {
  Rational p = pairing(v, i);
  return v - p * simple_roots_[i - 1];
}

std::vector<Rational>
RootSystem::to_simple_root_coords(const RationalWeight &v) const {
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x[i] += cartan_inverse_[i][j] * v[j];
  return x;
}

Rational RootSystem::norm_squared(const RationalWeight &v) const {
  auto x = to_simple_root_coords(v);
  Rational total = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      total += x[i] * x[j] * Rational(symmetrizer_[i] * cartan_[i][j]);
  return total;
}

bool RootSystem::precedes_or_equal(const Weight &mu,
                                   const Weight &lambda) const {
  auto x = to_simple_root_coords((lambda - mu).to_rational());
  for (const auto &c : x)
    if (!is_integer(c) || c < 0)
      return false;
  return true;
}

bool RootSystem::precedes(const Weight &mu, const Weight &lambda) const {
  return mu != lambda && precedes_or_equal(mu, lambda);
}

std::int64_t RootSystem::weyl_dim(const Weight &lambda) const {
  if (!lambda.is_dominant())
    throw Error(ErrorCode::NonDominantWeight,
                "weyl_dim needs a dominant weight, got " + to_string(lambda));
  Rational dim = 1;
  for (const auto &coroot : positive_coroots_) {
    std::int64_t num = 0, den = 0;
    for (int i = 0; i < rank_; ++i) {
      num += coroot[i] * (lambda.coords[i] + 1);
      den += coroot[i];
    }
    dim *= Rational(num, den);
  }
  if (!is_integer(dim))
    throw Error(ErrorCode::InvalidData, "non-integral Weyl dimension");
  return dim.numerator();
}

std::size_t RootSystem::expected_positive_root_count(TypeLabel label,
                                                     int rank) {
  const auto n = static_cast<std::size_t>(rank);
  switch (label) {
  case TypeLabel::A:
    return n * (n + 1) / 2;
  case TypeLabel::B:
  case TypeLabel::C:
    return n * n;
  case TypeLabel::D:
    return n * (n - 1);
  case TypeLabel::G2:
    return 6;
  }
  return 0;
}

std::string_view embedded_root_data() { return kEmbeddedRootData; }

bool is_supported(TypeLabel label, int rank) {
  switch (label) {
  case TypeLabel::A:
    return rank >= 1 && rank <= 4;
  case TypeLabel::B:
  case TypeLabel::C:
    return rank >= 2 && rank <= 4;
  case TypeLabel::D:
    return rank >= 3 && rank <= 4;
  case TypeLabel::G2:
    return rank == 2;
  }
  return false;
}

RootSystem root_system_from_json(std::string_view json_text, TypeLabel label,
                                 int rank) {
  if (!is_supported(label, rank))
    throw Error(ErrorCode::UnsupportedType,
                std::string(to_string(label)) + " of rank " +
                    std::to_string(rank));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
    for (const auto &entry : doc.at("root_systems")) {
      if (entry.at("label").get<std::string>() != to_string(label) ||
          entry.at("rank").get<int>() != rank)
        continue;
      return RootSystem(
          label, rank,
          entry.at("cartan").get<std::vector<std::vector<std::int64_t>>>(),
          entry.at("symmetrizer").get<std::vector<std::int64_t>>(),
          entry.at("positive_coroots")
              .get<std::vector<std::vector<std::int64_t>>>());
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::InvalidData,
                std::string("root data: ") + e.what());
  }
  throw Error(ErrorCode::UnsupportedType,
              std::string(to_string(label)) + std::to_string(rank) +
                  " missing from root data");
}

RootSystem build_root_system(TypeLabel label, int rank) {
  return root_system_from_json(embedded_root_data(), label, rank);
}

RootSystem build_root_system(TypeLabel label, int rank,
                             const std::filesystem::path &data_file) {
  std::ifstream in(data_file);
  if (!in)
    throw Error(ErrorCode::InvalidData,
                "cannot open root data file " + data_file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return root_system_from_json(text.str(), label, rank);
}

} // namespace lsplacto
