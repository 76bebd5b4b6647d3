#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcakit/bitset.hpp"
#include "fcakit/error.hpp"

namespace fca {

// Object-index set bound to one owning context. The token guards against
// mixing sets across contexts that happen to have compatible dimensions.
struct ObjectSet {
  std::uint64_t context_id = 0;
  Bitset bits;

  int count() const { return bits.count(); }
  bool empty() const { return bits.none(); }
  bool contains(int g) const { return bits.test(g); }
  bool operator==(const ObjectSet&) const = default;
};

struct AttributeSet {
  std::uint64_t context_id = 0;
  Bitset bits;

  int count() const { return bits.count(); }
  bool empty() const { return bits.none(); }
  bool contains(int m) const { return bits.test(m); }
  bool operator==(const AttributeSet&) const = default;
};

ObjectSet set_union(const ObjectSet&, const ObjectSet&);
ObjectSet set_intersection(const ObjectSet&, const ObjectSet&);
ObjectSet set_difference(const ObjectSet&, const ObjectSet&);
AttributeSet set_union(const AttributeSet&, const AttributeSet&);
AttributeSet set_intersection(const AttributeSet&, const AttributeSet&);
AttributeSet set_difference(const AttributeSet&, const AttributeSet&);

// A finite formal context: named objects and attributes plus a boolean
// incidence relation. Immutable after construction; every edit returns a new
// context with a fresh identity token. Incidence is stored twice, as bit rows
// per object and bit columns per attribute, so that both derivation
// directions are plain word scans.
class FormalContext {
 public:
  // The 0x0 context.
  FormalContext();

  // rows[g] holds the attribute bits of object g (width = #attributes).
  FormalContext(std::vector<std::string> object_names,
                std::vector<std::string> attribute_names,
                std::vector<Bitset> rows);

  // Rows given as strings of '.' (no incidence) and 'X'.
  static FormalContext from_pattern(std::vector<std::string> object_names,
                                    std::vector<std::string> attribute_names,
                                    const std::vector<std::string>& rows);

  // ({1..n}, {1..n}, !=). Its lattice is the Boolean lattice of rank n.
  static FormalContext contranominal(int n);

  static FormalContext full(int objects, int attributes);
  static FormalContext empty(int objects, int attributes);

  std::uint64_t id() const { return id_; }
  int object_count() const { return static_cast<int>(rows_.size()); }
  int attribute_count() const { return static_cast<int>(cols_.size()); }
  const std::string& object_name(int g) const;
  const std::string& attribute_name(int m) const;
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }
  int object_index(std::string_view name) const;     // -1 when absent
  int attribute_index(std::string_view name) const;  // -1 when absent

  bool incident(int g, int m) const;
  const Bitset& row(int g) const;     // attributes of object g
  const Bitset& column(int m) const;  // objects of attribute m

  bool is_full() const;
  bool has_non_incidence() const { return !is_full(); }
  bool full_column(int m) const;

  // Typed set factories.
  ObjectSet no_objects() const { return {id_, Bitset(object_count())}; }
  ObjectSet all_objects() const { return {id_, Bitset::ones(object_count())}; }
  ObjectSet objects(std::initializer_list<int> members) const;
  ObjectSet objects(Bitset bits) const;
  ObjectSet objects_named(const std::vector<std::string>& names) const;
  AttributeSet no_attributes() const { return {id_, Bitset(attribute_count())}; }
  AttributeSet all_attributes() const { return {id_, Bitset::ones(attribute_count())}; }
  AttributeSet attributes(std::initializer_list<int> members) const;
  AttributeSet attributes(Bitset bits) const;
  AttributeSet attributes_named(const std::vector<std::string>& names) const;

  std::vector<std::string> names(const ObjectSet&) const;
  std::vector<std::string> names(const AttributeSet&) const;

  // Derivation. derive(S) is the set of attributes common to all of S;
  // derive(B) dually; close(S) = derive(derive(S)). derive of the empty set
  // is the full opposite side.
  AttributeSet derive(const ObjectSet&) const;
  ObjectSet derive(const AttributeSet&) const;
  ObjectSet close(const ObjectSet&) const;
  AttributeSet co_intent(int g) const;  // attributes object g lacks
  ObjectSet co_extent(int m) const;     // objects lacking attribute m

  // Raw bit-level derivation; no ownership token involved.
  Bitset common_attributes(const Bitset& objects) const;
  Bitset common_objects(const Bitset& attributes) const;
  Bitset extent_closure(const Bitset& objects) const;
  Bitset intent_closure(const Bitset& attributes) const;
  Bitset co_intent_bits(int g) const;
  Bitset co_extent_bits(int m) const;

  // Pure edits; the receiver is unchanged.
  FormalContext delete_pair(int g, int m) const;
  // Fills row g except at m and column m except at g. Requires g and m
  // non-incident; afterwards (g, m) is the unique miss of both lines.
  FormalContext apply_op(int g, int m) const;
  FormalContext remove_incidence(int g, int m) const;
  FormalContext subcontext(const Bitset& objects, const Bitset& attributes) const;

  void require_owned(const ObjectSet&) const;
  void require_owned(const AttributeSet&) const;
  void require_object(int g) const;
  void require_attribute(int m) const;

 private:
  std::uint64_t id_ = 0;
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::vector<Bitset> rows_;  // per object, width = #attributes
  std::vector<Bitset> cols_;  // per attribute, width = #objects
};

// Disjoint union with full incidence between the two parts. The concept
// lattice of the sum is the direct product, so concept counts multiply.
// Colliding names get "_1"/"_2" suffixes.
FormalContext direct_sum(const FormalContext&, const FormalContext&);

// Same dimensions and same incidence matrix; names ignored.
bool same_incidence(const FormalContext&, const FormalContext&);

}  // namespace fca
