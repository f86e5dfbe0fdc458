#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <vector>

#include "test_support.hpp"

namespace greenfn::testing {

namespace {
std::uint64_t g_seed = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t seed() { return g_seed; }

std::mt19937_64 rng(const std::string& salt) {
  return std::mt19937_64(g_seed ^ std::hash<std::string>{}(salt));
}

LaurentPoly random_laurent(std::mt19937_64& g, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> expo(-2, 4);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPoly p;
  int k = terms(g);
  for (int i = 0; i < k; ++i) p += LaurentPoly(mpq_class(coef(g), den(g)), expo(g));
  return p;
}

RatQ random_ratq(std::mt19937_64& g) {
  LaurentPoly num = random_laurent(g);
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(g, 3);
  return RatQ(num, den);
}

}  // namespace greenfn::testing

int main(int argc, char** argv) {
  if (const char* env = std::getenv("GREENFN_TEST_SEED")) {
    greenfn::testing::g_seed = std::strtoull(env, nullptr, 0);
  }
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      greenfn::testing::g_seed = std::strtoull(argv[i] + 7, nullptr, 0);
      continue;
    }
    rest.push_back(argv[i]);
  }
  std::cout << "property seed " << greenfn::testing::g_seed << "\n";
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
