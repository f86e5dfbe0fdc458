#pragma once

#include <vector>

#include "greenfn/partition.hpp"
#include "greenfn/qpoly.hpp"

namespace greenfn {

/// Semistandard tableaux of shape lambda and content mu, as rows.
std::vector<std::vector<std::vector<int>>> semistandard_tableaux(const Partition& lambda, const Partition& mu);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
int charge(const std::vector<int>& word);

/// Row reading word: rows from bottom to top, each left to right.
std::vector<int> reading_word(const std::vector<std::vector<int>>& tableau);

/// K_{lambda,mu}(t) = sum of t^charge over semistandard tableaux, t written as q.
LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

}  // namespace greenfn
