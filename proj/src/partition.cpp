#include "greenfn/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "greenfn/errors.hpp"

namespace greenfn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw ValidationError("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw ValidationError("empty part in partition '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad part '" + item + "' in partition '" + text + "'");
    }
    if (used != item.size()) throw ValidationError("bad part '" + item + "' in partition '" + text + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw ValidationError("empty partition");
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ValidationError("negative partition size");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  for (int j = 1; j <= lambda[0]; ++j) {
    int c = 0;
    for (int p : lambda.parts()) c += p >= j ? 1 : 0;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

int n_invariant(const Partition& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) s += static_cast<int>(i) * lambda.parts()[i];
  return s;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ValidationError("dominance needs partitions of equal size");
  int sa = 0;
  int sb = 0;
  std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

std::optional<Partition> d_quotient(const Partition& lambda, int d) {
  if (d < 1) throw ValidationError("d must be positive");
  std::vector<int> mu;
  for (int p : lambda.parts()) {
    if (p % d != 0) return std::nullopt;
    mu.push_back(p / d);
  }
  return Partition(std::move(mu));
}

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

long long centralizer_size(const Partition& rho) {
  long long z = 1;
  for (int i = 1; i <= rho.size(); ++i) {
    int mi = rho.multiplicity(i);
    for (int k = 0; k < mi; ++k) z *= i;
    z *= factorial(mi);
  }
  return z;
}

ClassDims class_dims(int n, const Partition& lambda, GroupKind kind) {
  if (lambda.size() != n) throw ValidationError("partition " + lambda.to_string() + " is not of size " + std::to_string(n));
  int z = 0;
  Partition conj = transpose(lambda);
  for (int c : conj.parts()) z += c * c;
  ClassDims out{n * n - z, z, n_invariant(lambda)};
  if (kind == GroupKind::SL) out.dim_Z_of_u -= 1;
  return out;
}

bool block_order_less(const Partition& a, const Partition& b) {
  int da = class_dims(a.size(), a, GroupKind::GL).dim_C;
  int db = class_dims(b.size(), b, GroupKind::GL).dim_C;
  if (da != db) return da < db;
  if (a == b) return false;
  if (dominates(b, a)) return true;
  if (dominates(a, b)) return false;
  return a < b;
}

}  // namespace greenfn
