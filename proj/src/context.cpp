#include "fcakit/context.hpp"

#include <atomic>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace fca {
namespace {

std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void require_same_context(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw UsageError("sets belong to different contexts");
}

void check_distinct(const std::vector<std::string>& names, const char* side) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw UsageError(std::string("duplicate ") + side + " name: \"" + n + "\"");
  }
}

}  // namespace

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, a.bits | b.bits};
}

ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, a.bits & b.bits};
}

ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, difference(a.bits, b.bits)};
}

AttributeSet set_union(const AttributeSet& a, const AttributeSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, a.bits | b.bits};
}

AttributeSet set_intersection(const AttributeSet& a, const AttributeSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, a.bits & b.bits};
}

AttributeSet set_difference(const AttributeSet& a, const AttributeSet& b) {
  require_same_context(a.context_id, b.context_id);
  return {a.context_id, difference(a.bits, b.bits)};
}

FormalContext::FormalContext() : id_(next_context_id()) {}

FormalContext::FormalContext(std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names,
                             std::vector<Bitset> rows)
    : id_(next_context_id()),
      object_names_(std::move(object_names)),
      attribute_names_(std::move(attribute_names)),
      rows_(std::move(rows)) {
  if (rows_.size() != object_names_.size())
    throw UsageError("row count does not match object count");
  const int m = static_cast<int>(attribute_names_.size());
  for (const Bitset& r : rows_) {
    if (r.size() != m) throw UsageError("row width does not match attribute count");
  }
  check_distinct(object_names_, "object");
  check_distinct(attribute_names_, "attribute");
  const int g = object_count();
  cols_.assign(static_cast<size_t>(m), Bitset(g));
  for (int i = 0; i < g; ++i) {
    rows_[i].for_each([&](int j) { cols_[static_cast<size_t>(j)].set(i); });
  }
}

FormalContext FormalContext::from_pattern(std::vector<std::string> object_names,
                                          std::vector<std::string> attribute_names,
                                          const std::vector<std::string>& rows) {
  const int m = static_cast<int>(attribute_names.size());
  std::vector<Bitset> bits;
  bits.reserve(rows.size());
  for (const std::string& r : rows) {
    if (static_cast<int>(r.size()) != m)
      throw UsageError("pattern row width does not match attribute count");
    Bitset b(m);
    for (int j = 0; j < m; ++j) {
      if (r[static_cast<size_t>(j)] == 'X')
        b.set(j);
      else if (r[static_cast<size_t>(j)] != '.')
        throw UsageError("pattern rows may contain only '.' and 'X'");
    }
    bits.push_back(std::move(b));
  }
  return FormalContext(std::move(object_names), std::move(attribute_names), std::move(bits));
}

FormalContext FormalContext::contranominal(int n) {
  if (n < 0) throw UsageError("negative scale size");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<Bitset> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Bitset r = Bitset::ones(n);
    r.reset(i);
    rows.push_back(std::move(r));
  }
  return FormalContext(names, names, std::move(rows));
}

namespace {
std::vector<std::string> numbered(const char* prefix, int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}
}  // namespace

FormalContext FormalContext::full(int objects, int attributes) {
  if (objects < 0 || attributes < 0) throw UsageError("negative dimension");
  std::vector<Bitset> rows(static_cast<size_t>(objects), Bitset::ones(attributes));
  return FormalContext(numbered("g", objects), numbered("m", attributes), std::move(rows));
}

FormalContext FormalContext::empty(int objects, int attributes) {
  if (objects < 0 || attributes < 0) throw UsageError("negative dimension");
  std::vector<Bitset> rows(static_cast<size_t>(objects), Bitset(attributes));
  return FormalContext(numbered("g", objects), numbered("m", attributes), std::move(rows));
}

const std::string& FormalContext::object_name(int g) const {
  require_object(g);
  return object_names_[static_cast<size_t>(g)];
}

const std::string& FormalContext::attribute_name(int m) const {
  require_attribute(m);
  return attribute_names_[static_cast<size_t>(m)];
}

int FormalContext::object_index(std::string_view name) const {
  for (size_t i = 0; i < object_names_.size(); ++i)
    if (object_names_[i] == name) return static_cast<int>(i);
  return -1;
}

int FormalContext::attribute_index(std::string_view name) const {
  for (size_t i = 0; i < attribute_names_.size(); ++i)
    if (attribute_names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool FormalContext::incident(int g, int m) const {
  require_object(g);
  require_attribute(m);
  return rows_[static_cast<size_t>(g)].test(m);
}

const Bitset& FormalContext::row(int g) const {
  require_object(g);
  return rows_[static_cast<size_t>(g)];
}

const Bitset& FormalContext::column(int m) const {
  require_attribute(m);
  return cols_[static_cast<size_t>(m)];
}

bool FormalContext::is_full() const {
  const int m = attribute_count();
  for (const Bitset& r : rows_)
    if (r.count() != m) return false;
  return true;
}

bool FormalContext::full_column(int m) const {
  require_attribute(m);
  return cols_[static_cast<size_t>(m)].count() == object_count();
}

ObjectSet FormalContext::objects(std::initializer_list<int> members) const {
  ObjectSet s = no_objects();
  for (int g : members) {
    require_object(g);
    s.bits.set(g);
  }
  return s;
}

ObjectSet FormalContext::objects(Bitset bits) const {
  if (bits.size() != object_count()) throw UsageError("object set width mismatch");
  return {id_, std::move(bits)};
}

ObjectSet FormalContext::objects_named(const std::vector<std::string>& names) const {
  ObjectSet s = no_objects();
  for (const std::string& n : names) {
    int g = object_index(n);
    if (g < 0) throw UsageError("unknown object name: \"" + n + "\"");
    s.bits.set(g);
  }
  return s;
}

AttributeSet FormalContext::attributes(std::initializer_list<int> members) const {
  AttributeSet s = no_attributes();
  for (int m : members) {
    require_attribute(m);
    s.bits.set(m);
  }
  return s;
}

AttributeSet FormalContext::attributes(Bitset bits) const {
  if (bits.size() != attribute_count()) throw UsageError("attribute set width mismatch");
  return {id_, std::move(bits)};
}

AttributeSet FormalContext::attributes_named(const std::vector<std::string>& names) const {
  AttributeSet s = no_attributes();
  for (const std::string& n : names) {
    int m = attribute_index(n);
    if (m < 0) throw UsageError("unknown attribute name: \"" + n + "\"");
    s.bits.set(m);
  }
  return s;
}

std::vector<std::string> FormalContext::names(const ObjectSet& s) const {
  require_owned(s);
  std::vector<std::string> out;
  s.bits.for_each([&](int g) { out.push_back(object_names_[static_cast<size_t>(g)]); });
  return out;
}

std::vector<std::string> FormalContext::names(const AttributeSet& s) const {
  require_owned(s);
  std::vector<std::string> out;
  s.bits.for_each([&](int m) { out.push_back(attribute_names_[static_cast<size_t>(m)]); });
  return out;
}

AttributeSet FormalContext::derive(const ObjectSet& s) const {
  require_owned(s);
  return {id_, common_attributes(s.bits)};
}

ObjectSet FormalContext::derive(const AttributeSet& s) const {
  require_owned(s);
  return {id_, common_objects(s.bits)};
}

ObjectSet FormalContext::close(const ObjectSet& s) const {
  require_owned(s);
  return {id_, extent_closure(s.bits)};
}

AttributeSet FormalContext::co_intent(int g) const { return {id_, co_intent_bits(g)}; }

ObjectSet FormalContext::co_extent(int m) const { return {id_, co_extent_bits(m)}; }

Bitset FormalContext::common_attributes(const Bitset& objects) const {
  Bitset out = Bitset::ones(attribute_count());
  objects.for_each([&](int g) { out &= rows_[static_cast<size_t>(g)]; });
  return out;
}

Bitset FormalContext::common_objects(const Bitset& attributes) const {
  Bitset out = Bitset::ones(object_count());
  attributes.for_each([&](int m) { out &= cols_[static_cast<size_t>(m)]; });
  return out;
}

Bitset FormalContext::extent_closure(const Bitset& objects) const {
  return common_objects(common_attributes(objects));
}

Bitset FormalContext::intent_closure(const Bitset& attributes) const {
  return common_attributes(common_objects(attributes));
}

Bitset FormalContext::co_intent_bits(int g) const {
  require_object(g);
  return rows_[static_cast<size_t>(g)].complemented();
}

Bitset FormalContext::co_extent_bits(int m) const {
  require_attribute(m);
  return cols_[static_cast<size_t>(m)].complemented();
}

FormalContext FormalContext::delete_pair(int g, int m) const {
  if (object_count() == 0 || attribute_count() == 0)
    throw DomainError("cannot delete a pair from a context with an empty side");
  require_object(g);
  require_attribute(m);
  Bitset objs = Bitset::ones(object_count());
  objs.reset(g);
  Bitset attrs = Bitset::ones(attribute_count());
  attrs.reset(m);
  return subcontext(objs, attrs);
}

FormalContext FormalContext::apply_op(int g, int m) const {
  require_object(g);
  require_attribute(m);
  if (incident(g, m))
    throw DomainError("the row/column fill edit requires a non-incident pair");
  std::vector<Bitset> rows = rows_;
  for (int h = 0; h < object_count(); ++h)
    if (h != g) rows[static_cast<size_t>(h)].set(m);
  rows[static_cast<size_t>(g)] = Bitset::ones(attribute_count());
  rows[static_cast<size_t>(g)].reset(m);
  return FormalContext(object_names_, attribute_names_, std::move(rows));
}

FormalContext FormalContext::remove_incidence(int g, int m) const {
  require_object(g);
  require_attribute(m);
  if (!incident(g, m)) throw DomainError("the pair is already non-incident");
  std::vector<Bitset> rows = rows_;
  rows[static_cast<size_t>(g)].reset(m);
  return FormalContext(object_names_, attribute_names_, std::move(rows));
}

FormalContext FormalContext::subcontext(const Bitset& objects, const Bitset& attributes) const {
  if (objects.size() != object_count() || attributes.size() != attribute_count())
    throw UsageError("subcontext mask width mismatch");
  std::vector<std::string> onames;
  std::vector<std::string> anames;
  std::vector<int> acols = attributes.members();
  attributes.for_each([&](int m) { anames.push_back(attribute_names_[static_cast<size_t>(m)]); });
  std::vector<Bitset> rows;
  objects.for_each([&](int g) {
    onames.push_back(object_names_[static_cast<size_t>(g)]);
    Bitset r(static_cast<int>(acols.size()));
    for (size_t j = 0; j < acols.size(); ++j)
      if (rows_[static_cast<size_t>(g)].test(acols[j])) r.set(static_cast<int>(j));
    rows.push_back(std::move(r));
  });
  return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

void FormalContext::require_owned(const ObjectSet& s) const {
  if (s.context_id != id_) throw UsageError("object set belongs to a different context");
  if (s.bits.size() != object_count()) throw UsageError("object set width mismatch");
}

void FormalContext::require_owned(const AttributeSet& s) const {
  if (s.context_id != id_) throw UsageError("attribute set belongs to a different context");
  if (s.bits.size() != attribute_count()) throw UsageError("attribute set width mismatch");
}

void FormalContext::require_object(int g) const {
  if (g < 0 || g >= object_count()) throw UsageError("object index out of range");
}

void FormalContext::require_attribute(int m) const {
  if (m < 0 || m >= attribute_count()) throw UsageError("attribute index out of range");
}

namespace {

// Renames colliding entries between the two sides of a direct sum. A name
// present in both inputs becomes name_1 on the first side and name_2 on the
// second; suffixes repeat if the result still collides.
void resolve_collisions(std::vector<std::string>& first, std::vector<std::string>& second) {
  std::unordered_set<std::string> in_first(first.begin(), first.end());
  std::unordered_set<std::string> in_second(second.begin(), second.end());
  std::unordered_set<std::string> all(in_first);
  all.insert(in_second.begin(), in_second.end());
  auto rename = [&all](std::string& name, const char* suffix) {
    std::string candidate = name;
    do {
      candidate += suffix;
    } while (all.count(candidate));
    all.insert(candidate);
    name = candidate;
  };
  for (auto& n : first)
    if (in_second.count(n)) rename(n, "_1");
  for (auto& n : second)
    if (in_first.count(n)) rename(n, "_2");
}

Bitset concat_bits(const Bitset& a, const Bitset& b) {
  Bitset out(a.size() + b.size());
  a.for_each([&](int i) { out.set(i); });
  b.for_each([&](int i) { out.set(a.size() + i); });
  return out;
}

}  // namespace

FormalContext direct_sum(const FormalContext& a, const FormalContext& b) {
  std::vector<std::string> onames_a = a.object_names();
  std::vector<std::string> onames_b = b.object_names();
  std::vector<std::string> anames_a = a.attribute_names();
  std::vector<std::string> anames_b = b.attribute_names();
  resolve_collisions(onames_a, onames_b);
  resolve_collisions(anames_a, anames_b);
  std::vector<std::string> onames = std::move(onames_a);
  onames.insert(onames.end(), onames_b.begin(), onames_b.end());
  std::vector<std::string> anames = std::move(anames_a);
  anames.insert(anames.end(), anames_b.begin(), anames_b.end());

  std::vector<Bitset> rows;
  rows.reserve(static_cast<size_t>(a.object_count() + b.object_count()));
  for (int g = 0; g < a.object_count(); ++g)
    rows.push_back(concat_bits(a.row(g), Bitset::ones(b.attribute_count())));
  for (int g = 0; g < b.object_count(); ++g)
    rows.push_back(concat_bits(Bitset::ones(a.attribute_count()), b.row(g)));
  return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

bool same_incidence(const FormalContext& a, const FormalContext& b) {
  if (a.object_count() != b.object_count() || a.attribute_count() != b.attribute_count())
    return false;
  for (int g = 0; g < a.object_count(); ++g)
    if (!(a.row(g) == b.row(g))) return false;
  return true;
}

}  // namespace fca
