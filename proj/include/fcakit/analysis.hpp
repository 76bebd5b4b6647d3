#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fcakit/mixgen.hpp"

namespace fca {

struct SelectionCount {
  int object = -1;
  std::uint64_t containing = 0;
  std::uint64_t omitting = 0;
};

// Outcome of choosing the op object for one attribute. The counts split the
// g-independent class B ∪ CnotR by membership of each candidate object; a
// candidate is valid when at least as many members omit it as contain it,
// which makes the row/column fill edit concept-count non-decreasing.
struct ObjectSelection {
  int attribute = -1;
  std::vector<SelectionCount> counts;  // one per object of the co-extent, ascending
  int selected = -1;

  std::vector<int> valid_objects() const;
};

// Requires a representative system with the semi-downset property for the
// co-extent of `attribute`; the attribute must not be a full column. A valid
// object always exists; failure to find one is an internal error.
ObjectSelection select_op_object(const FormalContext&, int attribute, const MixgenSystem&);

// A non-incident pair is rich when deleting both keeps at least half of the
// concepts. Requires a non-incident pair.
bool is_rich_pair(const FormalContext&, int g, int m);

// Finds a rich non-incident pair, or nullopt when the context is full (or
// has an empty side). Scans attributes by ascending co-extent size, selects
// the object via select_op_object and re-verifies richness before returning.
std::optional<std::pair<int, int>> find_rich_pair(const FormalContext&);

// Size of the largest contranominal scale that appears as a subcontext
// (0 for full contexts and contexts with an empty side). Branch-and-bound
// over object subsets; each chosen object needs an attribute missed by it
// alone within the subset.
int contrast(const FormalContext&);

// Number of splitting pairs (g, m): g misses only m and m is missed only by
// g. Equals the size of the largest contranominal direct summand.
int contranominal_summand_size(const FormalContext&);

struct ContranominalDecomposition {
  FormalContext kernel;
  int summand_size = 0;
  std::vector<std::pair<int, int>> peeled_pairs;  // (object, attribute), original indices
  std::vector<int> kernel_objects;                // original index per kernel row
  std::vector<int> kernel_attributes;             // original index per kernel column
};

// Peels every splitting pair off; the kernel keeps the remaining rows and
// columns and has no splitting pair of its own.
ContranominalDecomposition noncontranominal_kernel(const FormalContext&);

enum class NopCase { FixedPoint, Op, RemoveIncidence };

struct NopStep {
  NopCase kind = NopCase::FixedPoint;
  std::optional<std::pair<int, int>> pair;  // chosen (object, attribute), original indices
  FormalContext result;
};

// One step of the concept-count non-decreasing edit:
//   - kernel has no objects or no attributes: fixed point;
//   - kernel has a non-incidence: the row/column fill edit on a kernel pair
//     whose object is valid per select_op_object within the kernel;
//   - kernel is full: remove one kernel incidence.
// Among valid choices the lexicographically least (object, attribute) pair
// is taken, so steps are reproducible.
NopStep nop_step(const FormalContext&);

struct NopTraceEntry {
  NopCase kind = NopCase::FixedPoint;
  std::optional<std::pair<int, int>> pair;
  FormalContext context;  // after the step
  std::uint64_t concepts = 0;
  int contrast_value = 0;
  int summand = 0;
};

struct NopTrace {
  enum class Stop { FixedPoint, ClassBoundary, StepLimit };

  FormalContext initial;
  std::uint64_t initial_concepts = 0;
  int initial_contrast = 0;
  int initial_summand = 0;
  std::vector<NopTraceEntry> steps;
  Stop stop = Stop::FixedPoint;
};

// Iterates nop_step until a fixed point, or stops right before a step would
// introduce a contranominal scale of size `forbidden_scale`. Requires
// 1 <= forbidden_scale <= min(|G|, |M|) + 1.
NopTrace nop_sequence(const FormalContext&, int forbidden_scale,
                      std::size_t max_steps = static_cast<std::size_t>(-1));

}  // namespace fca
