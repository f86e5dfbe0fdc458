#pragma once

#include <optional>
#include <string>
#include <vector>

namespace greenfn {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the input into decreasing order; rejects nonpositive parts.
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);
  static Partition single_row(int n) { return Partition(std::vector<int>{n}); }
  static Partition single_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Multiplicity of part i.
  int multiplicity(int i) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Lexicographic on the decreasing parts; used only for containers.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order, starting at (n).
std::vector<Partition> partitions_of(int n);

Partition transpose(const Partition& lambda);
/// n(lambda) = sum (i-1) lambda_i.
int n_invariant(const Partition& lambda);
/// True if a dominates b (same size required).
bool dominates(const Partition& a, const Partition& b);
/// lambda / d if d divides every part.
std::optional<Partition> d_quotient(const Partition& lambda, int d);
/// Order of the centralizer in S_m of a permutation of cycle type rho.
long long centralizer_size(const Partition& rho);
long long factorial(int m);

enum class GroupKind { GL, SL };

struct ClassDims {
  int dim_C;
  int dim_Z_of_u;
  int d_u;
};

ClassDims class_dims(int n, const Partition& lambda, GroupKind kind);

/// Order used for solver blocks: increasing class dimension, then dominance,
/// then lexicographic.
bool block_order_less(const Partition& a, const Partition& b);

}  // namespace greenfn
