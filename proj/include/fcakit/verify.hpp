#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcakit/analysis.hpp"
#include "fcakit/error.hpp"

namespace fca {

// Independent concept-count oracle: closes every object subset and counts
// distinct closures, using its own naive derivation loops. Guarded at 20
// objects.
std::uint64_t oracle_concept_count(const FormalContext&);

// The a-by-b context whose incidence bits are the binary digits of `code`
// in row-major order. Guarded at a*b <= 16 cells.
FormalContext context_from_code(int objects, int attributes, std::uint64_t code);
std::uint64_t context_code_count(int objects, int attributes);

template <typename Fn>
void enumerate_contexts(int objects, int attributes, Fn&& fn) {
  const std::uint64_t total = context_code_count(objects, attributes);
  for (std::uint64_t code = 0; code < total; ++code)
    fn(context_from_code(objects, attributes, code));
}

// Reproducible: the same arguments always yield the same context, on any
// platform.
FormalContext random_context(int objects, int attributes, double density, std::uint64_t seed);

struct VerificationReport {
  std::string property;
  std::string universe;
  bool pass = true;
  std::string counterexample_cxt;  // empty when passing
  std::string details;
  std::uint64_t seed = 0;
};

struct Scope {
  int max_a = 4;           // exhaustive sweeps cover all shapes up to max_a x max_b
  int max_b = 4;
  int samples = 1000;      // seeded 5x5 samples where a property uses sampling
  std::uint64_t seed = 0;
  int jobs = 0;            // 0 = hardware parallelism
};

std::vector<std::string> property_names();
std::vector<std::string> property_groups();

// Runs the registered properties ("all", a group name, or one property
// name). Every report must pass on the default scope. Failing reports carry
// a shrunk counterexample as context file text.
std::vector<VerificationReport> run_property_suite(const Scope&,
                                                   const std::string& selection = "all");

struct ExtremalReport {
  int objects = 0;
  int attributes = 0;
  int scale = 0;  // forbidden contranominal size c
  std::uint64_t max_concepts = 0;
  std::uint64_t extremal_count = 0;
  bool witness_has_smaller_scale = false;  // some extremal context contains a scale of size c-1
  FormalContext witness;
  std::uint64_t binomial_bound = 0;  // sum of C(objects, i) for i < c
  bool bound_holds = false;
};

// Enumerates every a-by-b context without a contranominal scale of size c,
// finds the maximum concept count, and reports whether some maximizer
// contains a scale of size c-1.
ExtremalReport extremal_search(int objects, int attributes, int scale, int jobs = 0);

// No context on `objects` objects (any attribute count up to max_attributes)
// that avoids a contranominal scale of size `scale` may exceed
// sum_{i<scale} C(objects, i) concepts.
VerificationReport check_binomial_bound(int objects, int scale, int max_attributes = 4,
                                        int jobs = 0);

std::uint64_t binomial_sum(int n, int upto_exclusive);

// Best-effort minimization: repeatedly descends to the first pair-deletion
// child that still fails `check`.
FormalContext shrink_counterexample(
    FormalContext failing,
    const std::function<std::optional<std::string>(const FormalContext&)>& check);

}  // namespace fca
