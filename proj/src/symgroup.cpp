#include "greenfn/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include <gmpxx.h>

#include "greenfn/errors.hpp"

namespace greenfn {

Permutation identity_permutation(int m) {
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation longest_element(int m) {
  Permutation p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = m - 1 - i;
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("composing permutations of different degree");
  Permutation r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

Permutation permutation_of_type(const Partition& rho) {
  Permutation p(static_cast<std::size_t>(rho.size()));
  int start = 0;
  for (int c : rho.parts()) {
    for (int k = 0; k < c; ++k) p[static_cast<std::size_t>(start + k)] = start + (k + 1) % c;
    start += c;
  }
  return p;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Murnaghan-Nakayama on beta-sets; rim hooks of length k correspond to
// moving one bead down k positions.
long mn_value(std::vector<int> beta, const std::vector<int>& rho, std::size_t next) {
  if (next == rho.size()) return 1;
  int k = rho[next];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int t = b - k;
    if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int x : beta) between += (x > t && x < b) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[i] = t;
    long sub = mn_value(moved, rho, next + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long character_value(const Partition& mu, const Partition& rho) {
  if (mu.size() != rho.size()) throw ValidationError("character_value: |mu| != |rho|");
  std::vector<int> beta;
  int len = mu.length();
  for (int i = 0; i < len; ++i) beta.push_back(mu.parts()[static_cast<std::size_t>(i)] + (len - 1 - i));
  return mn_value(beta, rho.parts(), 0);
}

CharacterTable::CharacterTable(int m) : m_(m), labels_(partitions_of(m)) {
  values_.resize(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (const auto& rho : labels_) values_[i].push_back(character_value(labels_[i], rho));
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::find(labels_.begin(), labels_.end(), p);
  if (it == labels_.end()) throw ValidationError("partition " + p.to_string() + " is not a label of S_" + std::to_string(m_));
  return static_cast<std::size_t>(it - labels_.begin());
}

long CharacterTable::value(const Partition& mu, const Partition& rho) const {
  return values_[index_of(mu)][index_of(rho)];
}

const CharacterTable& character_table(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<CharacterTable>(m);
  return *slot;
}

int a_value(const Partition& mu) { return n_invariant(mu); }

long twisted_trace(const Partition& mu, const Partition& rho, bool twisted, int m) {
  if (mu.size() != m || rho.size() != m) throw ValidationError("twisted_trace: size mismatch");
  long chi = character_table(m).value(mu, rho);
  if (!twisted) return chi;
  return a_value(mu) % 2 == 0 ? chi : -chi;
}

long twisted_trace(const Partition& mu, const Permutation& w, bool twisted) {
  int m = static_cast<int>(w.size());
  if (!twisted) return twisted_trace(mu, cycle_type(w), false, m);
  return twisted_trace(mu, cycle_type(compose(w, longest_element(m))), true, m);
}

long restriction_multiplicity(const Partition& mu, const std::vector<Partition>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.size();
  if (total != mu.size()) throw ValidationError("restriction_multiplicity: sizes do not add up");
  // <Res chi^mu, prod chi^nu_j> = sum over class tuples of prod chi/z.
  mpq_class acc = 0;
  std::vector<Partition> chosen(factors.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == factors.size()) {
      std::vector<int> all;
      mpq_class term = 1;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        mpq_class f(mpz_class(character_value(factors[k], chosen[k])), mpz_class(static_cast<long>(centralizer_size(chosen[k]))));
        f.canonicalize();
        term *= f;
        all.insert(all.end(), chosen[k].parts().begin(), chosen[k].parts().end());
      }
      acc += term * character_value(mu, Partition(all));
      return;
    }
    for (const auto& rho : partitions_of(factors[j].size())) {
      chosen[j] = rho;
      rec(j + 1);
    }
  };
  rec(0);
  if (acc.get_den() != 1) throw ConsistencyError("non-integral restriction multiplicity");
  return acc.get_num().get_si();
}

}  // namespace greenfn
