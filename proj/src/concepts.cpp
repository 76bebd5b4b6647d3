#include "fcakit/concepts.hpp"

namespace fca {

std::uint64_t count_concepts(const FormalContext& k) {
  std::uint64_t n = 0;
  for_each_concept(k, [&](const Bitset&, const Bitset&) { ++n; });
  return n;
}

ConceptSet enumerate_concepts(const FormalContext& k) {
  ConceptSet out;
  out.context_id = k.id();
  for_each_concept(k, [&](const Bitset& extent, const Bitset& intent) {
    out.items.push_back(Concept{{k.id(), extent}, {k.id(), intent}});
  });
  return out;
}

bool is_extent(const FormalContext& k, const Bitset& objects) {
  return k.extent_closure(objects) == objects;
}

bool is_intent(const FormalContext& k, const Bitset& attributes) {
  return k.intent_closure(attributes) == attributes;
}

}  // namespace fca
