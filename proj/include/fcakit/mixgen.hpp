#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fcakit/concepts.hpp"

namespace fca {

// A set S is an R-mixed generator of the extent it closes to when
//   i)  removing any element of S ∩ R changes the closure, and
//   ii) adding any element outside S ∪ R changes the closure.
// With R = G the condition is minimal generation; with R = ∅ it is being an
// extent.
bool is_mixed_generator(const FormalContext&, const ObjectSet& r, const ObjectSet& candidate);
bool is_mixed_generator_bits(const FormalContext&, const Bitset& r, const Bitset& candidate);

// S strongly avoids h when some attribute outside {m} that h lacks is common
// to S, i.e. S's derivation rules h out independently of m.
bool strongly_avoids(const FormalContext&, int m, const ObjectSet& s, int h);

// chi(S): the objects of the co-extent of m that S strongly avoids.
// Always evaluated against the incidence of the context passed in.
ObjectSet chi(const FormalContext&, int m, const ObjectSet& s);
ObjectSet chi_bar(const FormalContext&, int m, const ObjectSet& s);
Bitset chi_bits(const FormalContext&, int m, const Bitset& s);

// Lectically least R-mixed generator of a given extent. Searches the
// subsets of the extent in lectic order; exponential in the extent size and
// guarded accordingly.
ObjectSet lex_min_mixgen(const FormalContext&, const ObjectSet& r, const ObjectSet& extent);
Bitset lex_min_mixgen_bits(const FormalContext&, const Bitset& r, const Bitset& extent);

// A family of R-mixed generators with pairwise distinct closures, where R is
// the co-extent of one attribute. `complete` marks that every extent is
// generated; `semi_downset` that the family is closed under removing any
// subset of S ∩ R from a member S.
struct MixgenSystem {
  FormalContext context;
  int attribute = -1;
  ObjectSet r;
  std::vector<ObjectSet> generators;
  bool complete = false;
  bool semi_downset = false;
};

// One generator per extent via lex_min_mixgen. The result is complete and
// has the semi-downset property; both are re-verified before returning.
MixgenSystem build_complete_system(const FormalContext&, int attribute);

// Wraps an explicit family. Every member must be an R-mixed generator and
// closures must be pairwise distinct; completeness and the semi-downset
// property are detected and flagged.
MixgenSystem system_from_generators(const FormalContext&, int attribute,
                                    std::vector<ObjectSet> generators);

// Classes of a complete system under the row/column fill edit for (g, m):
//   N        no longer a mixed generator in the edited context
//   B        intent changed, restored by adding g
//   CR, CnotR intent changed and not restored; split by R ⊆ S
//   A2       image of N under S -> S \ R
//   AchiEqR  survivors with unchanged intent and chi(S) = R
//   A1       remaining survivors with unchanged intent
enum class GenClass { N, A1, A2, AchiEqR, B, CR, CnotR };

inline constexpr std::array<const char*, 7> kGenClassNames = {
    "N", "A1", "A2", "AchiEqR", "B", "CR", "CnotR"};

struct Decomposition {
  MixgenSystem system;
  FormalContext opped;  // the edited context
  int object = -1;      // g
  std::array<std::vector<int>, 7> classes;  // indices into system.generators
  std::vector<GenClass> labels;             // per generator

  const std::vector<int>& members(GenClass c) const {
    return classes[static_cast<size_t>(c)];
  }
};

// Requires a complete system and g in its R; (g, m) is then non-incident by
// construction. Classification uses the literal definitions against the
// edited context; the single-element characterization of N is evaluated as a
// redundant cross-check and any disagreement raises std::logic_error.
Decomposition decompose(const MixgenSystem&, int object);

// Audit of the two injections into the edited context's mixed generators:
// alpha keeps S (classes A and B), beta adds g (classes A2, AchiEqR, B).
struct MapAudit {
  bool applied = false;
  Bitset image;
  bool image_is_mixgen = false;
  Bitset predicted_intent, computed_intent;
  Bitset predicted_extent, computed_extent;
  bool original_intent_expected = false;  // whether the image intent must be an intent of the base context
  bool original_intent_actual = false;
  bool ok = false;
};

struct GeneratorAudit {
  int gen_index = -1;
  GenClass cls = GenClass::N;
  MapAudit alpha, beta;
};

struct DecompositionAudit {
  std::vector<GeneratorAudit> records;
  std::uint64_t base_concepts = 0;
  std::uint64_t op_concepts = 0;
  std::size_t b_size = 0;
  std::size_t cnr_size = 0;
  std::int64_t bound = 0;  // base_concepts + |B| - |CnotR|
  bool intents_distinct = false;
  bool bound_holds = false;
  bool pass = false;
  std::string first_violation;
};

DecompositionAudit audit_decomposition(const Decomposition&);

// True when the g-independent parts of the decomposition really do not
// depend on g (classes AchiEqR, CR and the union B ∪ CnotR), and membership
// in B ∪ C is equivalent to chi(S) being a proper subset of chi(S \ R).
bool check_stability(const MixgenSystem&);

}  // namespace fca
