#include "relalg/relation.hpp"

#include <algorithm>
#include <set>

namespace relalg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string type_name(const Relation& r) {
  return r.src().name() + "~" + r.dst().name();
}

void require_same_type(const Relation& r, const Relation& s, const char* op) {
  if (!same_type(r, s)) {
    throw TypeError(std::string(op) + ": carrier mismatch " + type_name(r) + " vs " + type_name(s));
  }
}

}  // namespace

Carrier::Carrier(std::string name, std::size_t size) : Carrier(std::move(name), default_labels(size)) {}

Carrier::Carrier(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  if (labels_.size() > kMaxCarrierSize) {
    throw std::length_error("carrier '" + name_ + "' has " + std::to_string(labels_.size()) +
                            " elements; at most " + std::to_string(kMaxCarrierSize) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("carrier '" + name_ + "': duplicate label '" + l + "'");
    }
  }
}

CarrierPtr make_carrier(std::string name, std::size_t size) {
  return std::make_shared<const Carrier>(std::move(name), size);
}

CarrierPtr make_carrier(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(name), std::move(labels));
}

Relation::Relation(CarrierPtr src, CarrierPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (!src_ || !dst_) throw std::invalid_argument("relation: null carrier");
}

Relation Relation::bottom(CarrierPtr src, CarrierPtr dst) {
  return Relation(std::move(src), std::move(dst));
}

Relation Relation::top(CarrierPtr src, CarrierPtr dst) {
  Relation r(std::move(src), std::move(dst));
  const Row m = r.column_mask();
  for (std::size_t i = 0; i < r.rows(); ++i) r.rows_[i] = m;
  return r;
}

Relation Relation::identity(CarrierPtr carrier) {
  Relation r(carrier, carrier);
  for (std::size_t i = 0; i < r.rows(); ++i) r.rows_[i] = Row{1} << i;
  return r;
}

Relation Relation::from_pairs(CarrierPtr src, CarrierPtr dst, std::span<const Pair> pairs) {
  Relation r(std::move(src), std::move(dst));
  for (const auto& [i, j] : pairs) r.insert(i, j);
  return r;
}

Relation Relation::from_code(CarrierPtr src, CarrierPtr dst, std::uint64_t code) {
  Relation r(std::move(src), std::move(dst));
  const std::size_t n = r.cols();
  if (n == 0) return r;
  const Row m = r.column_mask();
  for (std::size_t i = 0; i < r.rows() && code != 0; ++i) {
    r.rows_[i] = code & m;
    code = n >= 64 ? 0 : code >> n;
  }
  return r;
}

bool Relation::contains(std::size_t i, std::size_t j) const {
  if (i >= rows() || j >= cols()) throw std::out_of_range("relation: pair out of range");
  return (rows_[i] >> j) & 1U;
}

void Relation::insert(std::size_t i, std::size_t j) {
  if (i >= rows() || j >= cols()) {
    throw std::out_of_range("relation: pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + type_name(*this));
  }
  rows_[i] |= Row{1} << j;
}

void Relation::erase(std::size_t i, std::size_t j) {
  if (i >= rows() || j >= cols()) throw std::out_of_range("relation: pair out of range");
  rows_[i] &= ~(Row{1} << j);
}

std::size_t Relation::count() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows(); ++i) n += static_cast<std::size_t>(std::popcount(rows_[i]));
  return n;
}

bool Relation::empty() const noexcept {
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i] != 0) return false;
  }
  return true;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (auto j : bits_of(rows_[i])) out.emplace_back(i, j);
  }
  return out;
}

std::uint64_t Relation::code() const {
  const std::size_t n = cols();
  if (rows() * n > 64) throw std::length_error("relation: too many bits for a 64-bit code");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < rows(); ++i) code |= rows_[i] << (i * n);
  return code;
}

bool operator==(const Relation& a, const Relation& b) noexcept {
  if (!same_type(a, b)) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + static_cast<std::ptrdiff_t>(a.rows()), b.rows_.begin());
}

Coreflexive::Coreflexive(Relation r) : rel_(std::move(r)) {
  if (!is_coreflexive(rel_)) throw TypeError("coreflexive: relation is not contained in the identity");
}

bool same_type(const Relation& r, const Relation& s) noexcept {
  return r.src() == s.src() && r.dst() == s.dst();
}

Relation compose(const Relation& r, const Relation& s) {
  if (!(r.dst() == s.src())) {
    throw TypeError("compose: " + type_name(r) + " cannot be followed by " + type_name(s));
  }
  Relation out(r.src_ptr(), s.dst_ptr());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Relation::Row acc = 0;
    for (Relation::Row bits = r.row(i); bits != 0; bits &= bits - 1) {
      acc |= s.row(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    out.set_row(i, acc);
  }
  return out;
}

Relation converse(const Relation& r) {
  Relation out(r.dst_ptr(), r.src_ptr());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const Relation::Row bit = Relation::Row{1} << i;
    for (Relation::Row bits = r.row(i); bits != 0; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      out.set_row(j, out.row(j) | bit);
    }
  }
  return out;
}

Relation unite(const Relation& r, const Relation& s) {
  require_same_type(r, s, "union");
  Relation out = r;
  for (std::size_t i = 0; i < r.rows(); ++i) out.set_row(i, r.row(i) | s.row(i));
  return out;
}

Relation intersect(const Relation& r, const Relation& s) {
  require_same_type(r, s, "intersect");
  Relation out = r;
  for (std::size_t i = 0; i < r.rows(); ++i) out.set_row(i, r.row(i) & s.row(i));
  return out;
}

Relation complement(const Relation& r) {
  Relation out = r;
  for (std::size_t i = 0; i < r.rows(); ++i) out.set_row(i, ~r.row(i));
  return out;
}

bool is_subset(const Relation& r, const Relation& s) {
  require_same_type(r, s, "subset");
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if ((r.row(i) & ~s.row(i)) != 0) return false;
  }
  return true;
}

bool is_coreflexive(const Relation& r) noexcept {
  if (!r.is_homogeneous()) return false;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if ((r.row(i) & ~(Relation::Row{1} << i)) != 0) return false;
  }
  return true;
}

bool is_symmetric(const Relation& r) noexcept {
  return r.is_homogeneous() && converse(r) == r;
}

DedekindResult dedekind_check(const Relation& r, const Relation& s, const Relation& t) {
  if (!(r.dst() == s.src()) || !(r.src() == t.src()) || !(s.dst() == t.dst())) {
    throw TypeError("dedekind: expected R: A~B, S: B~C, T: A~C; got " + type_name(r) + ", " +
                    type_name(s) + ", " + type_name(t));
  }
  const Relation lhs = intersect(compose(r, s), t);
  DedekindResult res;
  res.modular = is_subset(lhs, compose(r, intersect(s, compose(converse(r), t))));
  res.modular_dual = is_subset(lhs, compose(intersect(r, compose(t, converse(s))), s));
  return res;
}

bool cone_check(const Relation& r) {
  const auto top_left = Relation::top(r.src_ptr(), r.src_ptr());
  const auto top_right = Relation::top(r.dst_ptr(), r.dst_ptr());
  return r.empty() || compose(top_left, r, top_right) == Relation::top(r.src_ptr(), r.dst_ptr());
}

RelationEnumeration::RelationEnumeration(CarrierPtr src, CarrierPtr dst, std::size_t max_bits)
    : src_(std::move(src)), dst_(std::move(dst)) {
  const std::size_t bits = src_->size() * dst_->size();
  if (bits > max_bits || bits >= 64) {
    throw EnumerationBoundError("enumerate_relations: " + src_->name() + "~" + dst_->name() + " has " +
                                std::to_string(bits) + " bits; the bound is " + std::to_string(max_bits));
  }
  count_ = std::uint64_t{1} << bits;
}

std::vector<std::size_t> bits_of(Relation::Row row) {
  std::vector<std::size_t> out;
  for (; row != 0; row &= row - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(row)));
  return out;
}

}  // namespace relalg
