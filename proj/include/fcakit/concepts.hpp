#pragma once

#include <cstdint>
#include <vector>

#include "fcakit/context.hpp"

namespace fca {

// A formal concept: extent and intent derive to each other.
struct Concept {
  ObjectSet extent;
  AttributeSet intent;
};

// All concepts of one context, extents in strictly increasing lectic order.
struct ConceptSet {
  std::uint64_t context_id = 0;
  std::vector<Concept> items;

  std::size_t size() const { return items.size(); }
};

// Visits every concept as (extent, intent) bit pairs, extents in strictly
// increasing lectic order (NextClosure over objects). A context with an
// empty side still has exactly one concept.
template <typename Fn>
void for_each_concept(const FormalContext& k, Fn&& fn) {
  const int n = k.object_count();
  Bitset intent = k.common_attributes(Bitset(n));
  Bitset cur = k.common_objects(intent);
  fn(static_cast<const Bitset&>(cur), static_cast<const Bitset&>(intent));
  while (true) {
    bool advanced = false;
    Bitset work = cur;
    for (int i = n - 1; i >= 0; --i) {
      if (work.test(i)) {
        work.reset(i);
        continue;
      }
      // Candidate: close the prefix of cur below i together with i. It is
      // the next extent exactly when the closure adds nothing below i.
      Bitset cand = work.with(i);
      Bitset cand_intent = k.common_attributes(cand);
      Bitset cand_extent = k.common_objects(cand_intent);
      if (cand_extent.equal_below(work, i)) {
        fn(static_cast<const Bitset&>(cand_extent),
           static_cast<const Bitset&>(cand_intent));
        cur = std::move(cand_extent);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

// Number of concepts; runs the same traversal as enumerate_concepts but
// keeps only a counter.
std::uint64_t count_concepts(const FormalContext&);

ConceptSet enumerate_concepts(const FormalContext&);

bool is_extent(const FormalContext&, const Bitset& objects);
bool is_intent(const FormalContext&, const Bitset& attributes);

}  // namespace fca
