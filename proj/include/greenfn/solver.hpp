#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenfn/qpoly.hpp"
#include "greenfn/reductive.hpp"
#include "greenfn/springer.hpp"

namespace greenfn {

using RatMatrix = std::vector<std::vector<RatQ>>;

struct SystemIndex {
  std::string label;
  int dim_C = 0;
  int block = 0;
};

struct OmegaSystem {
  std::string series;
  std::vector<SystemIndex> indices;
  std::vector<SpringerDatum> data;  // empty for external systems
  RatMatrix omega;
  std::optional<RatMatrix> P;
  std::optional<RatMatrix> Lambda;
};

RatMatrix identity_matrix(std::size_t n);
RatMatrix transpose(const RatMatrix& a);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
/// Inverse by Gauss-Jordan; throws ValidationError if singular.
RatMatrix inverse(const RatMatrix& a);

/// Omega matrix of a series block.
OmegaSystem omega_matrix(const GroupSpec& spec, const SeriesLabel& series);

/// Solves tP Lambda P = Omega by block elimination; result is verified.
OmegaSystem solve(OmegaSystem system);

bool satisfies_equation(const OmegaSystem& system);
/// Throws ConsistencyError unless every entry of P and Lambda is a polynomial
/// in q with integer coefficients.
void check_integrality(const OmegaSystem& system);

/// Ranges [begin, end) of the blocks in index order.
std::vector<std::pair<std::size_t, std::size_t>> block_ranges(const OmegaSystem& system);

nlohmann::json to_json(const OmegaSystem& system);
/// Parses and validates an "omega-system/v1" document.
OmegaSystem load_external_system(const nlohmann::json& document);

}  // namespace greenfn
