#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orso/modulus.hpp"

namespace orso::examples {

// One closed-form asymptotic row of the worked examples: a Young function, a
// smoothness pair, the relevant end, and the expected sigma shape
// r^pow_r * L^pow_log * (log L)^pow_loglog with L = log(1+1/r) toward zero
// and log(1+r) toward infinity.
struct Target {
  double pow_r = 0.0;
  double pow_log = 0.0;
  double pow_loglog = 0.0;
  double operator()(double r, modulus::End end) const;
};

struct Row {
  std::string id;
  std::string young_spec;
  int n = 1;
  double s = 0.5;
  modulus::End end = modulus::End::NearZero;
  enum class Expect { Embedding, NoEmbedding, Inadmissible } expect = Expect::Embedding;
  std::optional<Target> target;
  int decades = 0;  // per-row equivalence-grid override (0 = config default)
};

struct RowResult {
  Row row;
  bool pass = false;
  std::string detail;
  modulus::EquivalenceReport equivalence;  // valid for embedding rows
};

std::vector<Row> load_manifest(const std::string& path);  // "" => built-in copy
std::string builtin_manifest_json();

RowResult run_row(const Row& row, const modulus::EquivalenceConfig& cfg = {});
std::vector<RowResult> run_all(const std::vector<Row>& rows,
                               const modulus::EquivalenceConfig& cfg = {});

}  // namespace orso::examples
