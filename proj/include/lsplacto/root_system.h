#pragma once

#include "lsplacto/rational.h"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lsplacto {

enum class TypeLabel { A, B, C, D, G2 };

std::string_view to_string(TypeLabel label);
TypeLabel parse_type_label(std::string_view text);

/// Integral weight in fundamental-weight coordinates; coordinate i is the
/// pairing with the i-th simple coroot.  A dominant Weight doubles as a
/// tableau shape a_1 w_1 + ... + a_n w_n.
struct Weight {
  std::vector<std::int64_t> coords;

  static Weight zero(std::size_t rank) { return {std::vector<std::int64_t>(rank, 0)}; }
  static Weight fundamental(std::size_t rank, int k);

  std::size_t rank() const { return coords.size(); }
  bool is_dominant() const;
  RationalWeight to_rational() const {
    return RationalWeight::from_integers(coords);
  }

  Weight &operator+=(const Weight &other);
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b);

  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &, const Weight &) = default;
};

std::string to_string(const Weight &w);

/// Exact integral weight of a rational point, when every coordinate is
/// an integer.
Weight to_weight(const RationalWeight &v);

bool is_dominant(const RationalWeight &v);

/// Cartan data of a finite root system.  Root indices are 1-based in the
/// public interface; cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple
/// root alpha_j has fundamental-weight coordinates equal to column j.
class RootSystem {
public:
  RootSystem(TypeLabel label, int rank,
             std::vector<std::vector<std::int64_t>> cartan,
             std::vector<std::int64_t> symmetrizer,
             std::vector<std::vector<std::int64_t>> positive_coroots);

  TypeLabel label() const { return label_; }
  int rank() const { return rank_; }
  std::string name() const;

  std::int64_t cartan(int i, int j) const;
  const std::vector<std::vector<std::int64_t>> &cartan_matrix() const {
    return cartan_;
  }
  const std::vector<std::int64_t> &symmetrizer() const { return symmetrizer_; }
  const std::vector<std::vector<std::int64_t>> &positive_coroots() const {
    return positive_coroots_;
  }
  const RationalWeight &simple_root(int j) const;
  Weight rho() const { return {std::vector<std::int64_t>(rank_, 1)}; }
  Weight fundamental_weight(int k) const;

  /// <v, alpha_i^vee>, i.e. coordinate i.
  Rational pairing(const RationalWeight &v, int i) const;

  /// Simple reflection s_i(v) = v - <v, alpha_i^vee> alpha_i.
  RationalWeight reflect(int i, const RationalWeight &v) const;

  /// Expansion of v in the basis of simple roots (solves cartan * x = v).
  std::vector<Rational> to_simple_root_coords(const RationalWeight &v) const;

  /// Squared length of v in the invariant form normalized so that
  /// (alpha_i, alpha_j) = d_i * cartan(i, j).
  Rational norm_squared(const RationalWeight &v) const;

  /// Strict dominance: lambda - mu is a nonzero N-combination of simple
  /// roots.
  bool precedes(const Weight &mu, const Weight &lambda) const;

  /// Weak version of precedes (allows mu == lambda).
  bool precedes_or_equal(const Weight &mu, const Weight &lambda) const;

  /// Weyl dimension formula; throws NonDominantWeight.
  std::int64_t weyl_dim(const Weight &lambda) const;

  /// Number of positive roots expected for the type and rank.
  static std::size_t expected_positive_root_count(TypeLabel label, int rank);

  void check_index(int i) const;

private:
  TypeLabel label_;
  int rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<std::vector<std::int64_t>> positive_coroots_;
  std::vector<RationalWeight> simple_roots_;
  std::vector<std::vector<Rational>> cartan_inverse_;
};

/// Root-system data embedded at build time from data/root_systems.json.
std::string_view embedded_root_data();

/// Parses a root-system data file body and returns the entry for
/// (label, rank); throws UnsupportedType when absent.
RootSystem root_system_from_json(std::string_view json_text, TypeLabel label,
                                 int rank);

/// Supported set: A1-A4, B2-B4, C2-C4, D3-D4, G2.
bool is_supported(TypeLabel label, int rank);

/// Builds from the embedded tables.
RootSystem build_root_system(TypeLabel label, int rank);

/// Builds from a data file on disk (same schema as the embedded tables).
RootSystem build_root_system(TypeLabel label, int rank,
                             const std::filesystem::path &data_file);

} // namespace lsplacto
