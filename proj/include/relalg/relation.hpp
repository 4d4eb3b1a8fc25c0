#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relalg {

// Carriers are limited to one machine word of columns per row.
inline constexpr std::size_t kMaxCarrierSize = 64;

class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A named finite type. Two carriers denote the same type iff name and size agree;
// labels are presentation only.
class Carrier {
 public:
  Carrier(std::string name, std::size_t size);
  Carrier(std::string name, std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const Carrier& a, const Carrier& b) noexcept {
    return a.name_ == b.name_ && a.size() == b.size();
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::string name, std::size_t size);
CarrierPtr make_carrier(std::string name, std::vector<std::string> labels);

using Pair = std::pair<std::size_t, std::size_t>;

// A concrete heterogeneous relation src ~ dst stored as packed bit rows.
// Immutable in practice: every operation below returns a fresh value.
class Relation {
 public:
  using Row = std::uint64_t;

  Relation(CarrierPtr src, CarrierPtr dst);

  static Relation bottom(CarrierPtr src, CarrierPtr dst);
  static Relation top(CarrierPtr src, CarrierPtr dst);
  static Relation identity(CarrierPtr carrier);
  static Relation from_pairs(CarrierPtr src, CarrierPtr dst, std::span<const Pair> pairs);
  // Bit k of `code` is the pair (k / |dst|, k % |dst|).
  static Relation from_code(CarrierPtr src, CarrierPtr dst, std::uint64_t code);

  const Carrier& src() const noexcept { return *src_; }
  const Carrier& dst() const noexcept { return *dst_; }
  const CarrierPtr& src_ptr() const noexcept { return src_; }
  const CarrierPtr& dst_ptr() const noexcept { return dst_; }
  std::size_t rows() const noexcept { return src_->size(); }
  std::size_t cols() const noexcept { return dst_->size(); }
  Row column_mask() const noexcept { return mask_for(cols()); }

  bool contains(std::size_t i, std::size_t j) const;
  void insert(std::size_t i, std::size_t j);
  void erase(std::size_t i, std::size_t j);
  Row row(std::size_t i) const noexcept { return rows_[i]; }
  void set_row(std::size_t i, Row bits) noexcept { rows_[i] = bits & column_mask(); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_homogeneous() const noexcept { return *src_ == *dst_; }
  std::vector<Pair> pairs() const;
  // Inverse of from_code; requires rows()*cols() <= 64.
  std::uint64_t code() const;

  friend bool operator==(const Relation& a, const Relation& b) noexcept;

  static Row mask_for(std::size_t n) noexcept {
    return n >= 64 ? ~Row{0} : ((Row{1} << n) - 1);
  }

 private:
  CarrierPtr src_;
  CarrierPtr dst_;
  std::array<Row, kMaxCarrierSize> rows_{};
};

// Strong type for relations contained in the identity.
class Coreflexive {
 public:
  explicit Coreflexive(Relation r);
  const Relation& relation() const noexcept { return rel_; }
  operator const Relation&() const noexcept { return rel_; }
  friend bool operator==(const Coreflexive& a, const Coreflexive& b) noexcept {
    return a.rel_ == b.rel_;
  }

 private:
  Relation rel_;
};

bool same_type(const Relation& r, const Relation& s) noexcept;

Relation compose(const Relation& r, const Relation& s);
Relation converse(const Relation& r);
Relation unite(const Relation& r, const Relation& s);
Relation intersect(const Relation& r, const Relation& s);
Relation complement(const Relation& r);
bool is_subset(const Relation& r, const Relation& s);

// Convenience: R ∘ S ∘ T.
inline Relation compose(const Relation& r, const Relation& s, const Relation& t) {
  return compose(compose(r, s), t);
}

bool is_coreflexive(const Relation& r) noexcept;
bool is_symmetric(const Relation& r) noexcept;

// R∘S ∩ T ⊆ R∘(S ∩ R°∘T) and its mirror R∘S ∩ T ⊆ (R ∩ T∘S°)∘S,
// for R: A~B, S: B~C, T: A~C.
struct DedekindResult {
  bool modular = false;
  bool modular_dual = false;
  bool holds() const noexcept { return modular && modular_dual; }
};
DedekindResult dedekind_check(const Relation& r, const Relation& s, const Relation& t);

// ⊤∘R∘⊤ = ⊤ ∨ R = ⊥
bool cone_check(const Relation& r);

class EnumerationBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// All 2^(|src|·|dst|) relations in increasing code order.
class RelationEnumeration {
 public:
  static constexpr std::size_t kDefaultMaxBits = 12;

  RelationEnumeration(CarrierPtr src, CarrierPtr dst, std::size_t max_bits = kDefaultMaxBits);

  class iterator {
   public:
    using value_type = Relation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const RelationEnumeration* owner, std::uint64_t code) : owner_(owner), code_(code) {}
    Relation operator*() const {
      return Relation::from_code(owner_->src_, owner_->dst_, code_);
    }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++code_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.code_ == b.code_;
    }

   private:
    const RelationEnumeration* owner_ = nullptr;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  CarrierPtr src_;
  CarrierPtr dst_;
  std::uint64_t count_;
};

inline RelationEnumeration enumerate_relations(CarrierPtr src, CarrierPtr dst,
                                               std::size_t max_bits = RelationEnumeration::kDefaultMaxBits) {
  return RelationEnumeration(std::move(src), std::move(dst), max_bits);
}

// Indices set in a row, ascending.
std::vector<std::size_t> bits_of(Relation::Row row);

}  // namespace relalg
