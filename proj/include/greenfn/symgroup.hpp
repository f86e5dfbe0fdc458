#pragma once

#include <vector>

#include "greenfn/partition.hpp"

namespace greenfn {

/// Permutation of {0, ..., m-1} given by its images.
using Permutation = std::vector<int>;

Permutation identity_permutation(int m);
/// i -> m-1-i.
Permutation longest_element(int m);
/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Partition cycle_type(const Permutation& p);
/// A fixed permutation with the given cycle type (consecutive cycles).
Permutation permutation_of_type(const Partition& rho);
/// All m! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int m);

/// Irreducible characters of S_m. Rows and columns are both indexed by
/// partitions_of(m).
class CharacterTable {
 public:
  explicit CharacterTable(int m);
  int degree() const { return m_; }
  const std::vector<Partition>& labels() const { return labels_; }
  long value(const Partition& mu, const Partition& rho) const;
  long value(std::size_t mu_index, std::size_t rho_index) const { return values_[mu_index][rho_index]; }
  std::size_t index_of(const Partition& p) const;

 private:
  int m_;
  std::vector<Partition> labels_;
  std::vector<std::vector<long>> values_;
};

/// Shared table for S_m, built once on first use.
const CharacterTable& character_table(int m);

/// chi^mu(rho) by Murnaghan-Nakayama.
long character_value(const Partition& mu, const Partition& rho);
/// a-function of the irreducible labelled by mu, n(mu).
int a_value(const Partition& mu);

/// Trace of w*sigma on the preferred extension of chi^mu. Untwisted: chi^mu(rho).
/// Twisted: rho is read as the cycle type of w*w0 and the value is
/// (-1)^a(mu) chi^mu(rho).
long twisted_trace(const Partition& mu, const Partition& rho, bool twisted, int m);
/// Same with an explicit permutation w.
long twisted_trace(const Partition& mu, const Permutation& w, bool twisted);

/// Multiplicity of the outer product of factors in chi^mu restricted to the
/// Young subgroup S_{m_1} x ... x S_{m_k}.
long restriction_multiplicity(const Partition& mu, const std::vector<Partition>& factors);

}  // namespace greenfn
