#include "greenfn/kostka.hpp"

#include <functional>

#include "greenfn/errors.hpp"

namespace greenfn {

std::vector<std::vector<std::vector<int>>> semistandard_tableaux(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("shape and content have different sizes");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  // Letter k fills a horizontal strip of size mu_k.
  std::function<void(std::size_t)> place = [&](std::size_t letter) {
    if (letter == mu.parts().size()) {
      out.push_back(rows);
      return;
    }
    int need = mu.parts()[letter];
    std::vector<int> before(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) before[r] = static_cast<int>(rows[r].size());
    std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
      if (r == rows.size()) {
        if (left == 0) place(letter + 1);
        return;
      }
      int cap = lambda.parts()[r] - before[r];
      if (r > 0) cap = std::min(cap, before[r - 1] - before[r]);
      for (int k = std::min(cap, left); k >= 0; --k) {
        for (int i = 0; i < k; ++i) rows[r].push_back(static_cast<int>(letter) + 1);
        strip(r + 1, left - k);
        rows[r].resize(static_cast<std::size_t>(before[r]));
      }
    };
    strip(0, need);
  };
  place(0);
  return out;
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& tableau) {
  std::vector<int> word;
  for (std::size_t r = tableau.size(); r-- > 0;) word.insert(word.end(), tableau[r].begin(), tableau[r].end());
  return word;
}

int charge(const std::vector<int>& word) {
  std::size_t len = word.size();
  std::vector<bool> used(len, false);
  std::size_t remaining = len;
  int total = 0;
  while (remaining > 0) {
    std::size_t pos = len;
    int letter = 1;
    int index = 0;
    while (true) {
      std::size_t found = len;
      for (std::size_t step = 1; step <= len; ++step) {
        std::size_t i = (pos + len - step) % len;
        if (!used[i] && word[i] == letter) {
          found = i;
          break;
        }
      }
      if (found == len) break;
      if (letter > 1 && found > pos) ++index;
      total += index;
      used[found] = true;
      --remaining;
      pos = found;
      ++letter;
    }
    if (letter == 1) throw ValidationError("word content is not a partition");
  }
  return total;
}

LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  LaurentPoly out;
  for (const auto& t : semistandard_tableaux(lambda, mu)) out += LaurentPoly::monomial(charge(reading_word(t)));
  return out;
}

}  // namespace greenfn
