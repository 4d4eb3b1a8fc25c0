#include "relalg/isomorph.hpp"

#include <algorithm>

#include "relalg/domains.hpp"

namespace relalg {

namespace {

std::vector<std::size_t> support_rows(const Relation& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (r.row(i) != 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> sorted_degrees(const Relation& r, const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> d;
  d.reserve(rows.size());
  for (auto i : rows) d.push_back(static_cast<std::size_t>(std::popcount(r.row(i))));
  std::sort(d.begin(), d.end());
  return d;
}

class Search {
 public:
  Search(const Relation& r, const Relation& s) : r_(r), s_(s), rt_(converse(r)), st_(converse(s)) {}

  std::optional<IsoWitness> run(std::size_t max_points) {
    rows_r_ = support_rows(r_);
    rows_s_ = support_rows(s_);
    cols_r_ = support_rows(rt_);
    cols_s_ = support_rows(st_);
    if (rows_r_.size() != rows_s_.size() || cols_r_.size() != cols_s_.size()) return std::nullopt;
    if (rows_r_.size() > max_points || cols_r_.size() > max_points) {
      throw SearchBoundExceeded("find_isomorphism: domains have " + std::to_string(rows_r_.size()) + " and " +
                                std::to_string(cols_r_.size()) + " points; the bound is " +
                                std::to_string(max_points));
    }
    if (sorted_degrees(r_, rows_r_) != sorted_degrees(s_, rows_s_)) return std::nullopt;
    if (sorted_degrees(rt_, cols_r_) != sorted_degrees(st_, cols_s_)) return std::nullopt;

    std::stable_sort(rows_r_.begin(), rows_r_.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(r_.row(a)) > std::popcount(r_.row(b));
    });
    assign_.assign(rows_r_.size(), 0);
    used_.assign(rows_s_.size(), false);
    if (!extend(0)) return std::nullopt;
    return build();
  }

 private:
  // Column profiles over the first k assigned rows must agree as multisets.
  bool profiles_match(std::size_t k) const {
    return profiles(rt_, cols_r_, k, true) == profiles(st_, cols_s_, k, false);
  }

  std::vector<std::uint64_t> profiles(const Relation& t, const std::vector<std::size_t>& cols, std::size_t k,
                                      bool left) const {
    std::vector<std::uint64_t> out;
    out.reserve(cols.size());
    for (auto c : cols) {
      std::uint64_t p = 0;
      for (std::size_t step = 0; step < k; ++step) {
        const std::size_t row = left ? rows_r_[step] : rows_s_[assign_[step]];
        if ((t.row(c) >> row) & 1U) p |= std::uint64_t{1} << step;
      }
      out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool extend(std::size_t k) {
    if (k == rows_r_.size()) return true;
    const int deg = std::popcount(r_.row(rows_r_[k]));
    for (std::size_t j = 0; j < rows_s_.size(); ++j) {
      if (used_[j] || std::popcount(s_.row(rows_s_[j])) != deg) continue;
      assign_[k] = j;
      used_[j] = true;
      if (profiles_match(k + 1) && extend(k + 1)) return true;
      used_[j] = false;
    }
    return false;
  }

  std::uint64_t profile_of(const Relation& t, std::size_t c, bool left) const {
    std::uint64_t p = 0;
    for (std::size_t step = 0; step < rows_r_.size(); ++step) {
      const std::size_t row = left ? rows_r_[step] : rows_s_[assign_[step]];
      if ((t.row(c) >> row) & 1U) p |= std::uint64_t{1} << step;
    }
    return p;
  }

  IsoWitness build() const {
    Relation phi(r_.src_ptr(), s_.src_ptr());
    for (std::size_t step = 0; step < rows_r_.size(); ++step) phi.insert(rows_r_[step], rows_s_[assign_[step]]);
    Relation psi(r_.dst_ptr(), s_.dst_ptr());
    std::vector<bool> taken(cols_s_.size(), false);
    for (auto b : cols_r_) {
      const auto p = profile_of(rt_, b, true);
      for (std::size_t j = 0; j < cols_s_.size(); ++j) {
        if (!taken[j] && profile_of(st_, cols_s_[j], false) == p) {
          taken[j] = true;
          psi.insert(b, cols_s_[j]);
          break;
        }
      }
    }
    return {phi, psi};
  }

  const Relation& r_;
  const Relation& s_;
  Relation rt_;
  Relation st_;
  std::vector<std::size_t> rows_r_, rows_s_, cols_r_, cols_s_;
  std::vector<std::size_t> assign_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const Relation& r, const Relation& s, std::size_t max_points) {
  Search search(r, s);
  auto w = search.run(max_points);
  if (w && !verify_witness(r, s, *w)) {
    throw std::logic_error("find_isomorphism: constructed witness failed verification");
  }
  return w;
}

WitnessChecks check_witness(const Relation& r, const Relation& s, const IsoWitness& w) {
  const auto& phi = w.phi;
  const auto& psi = w.psi;
  if (!(phi.src() == r.src()) || !(phi.dst() == s.src()) || !(psi.src() == r.dst()) || !(psi.dst() == s.dst())) {
    throw TypeError("check_witness: expected φ: " + r.src().name() + "~" + s.src().name() + " and ψ: " +
                    r.dst().name() + "~" + s.dst().name());
  }
  WitnessChecks c;
  c.phi_left = compose(phi, converse(phi)) == ldom(r).relation();
  c.phi_right = compose(converse(phi), phi) == ldom(s).relation();
  c.psi_left = compose(psi, converse(psi)) == rdom(r).relation();
  c.psi_right = compose(converse(psi), psi) == rdom(s).relation();
  c.forward = r == compose(phi, s, converse(psi));
  c.backward = compose(converse(phi), r, psi) == s;
  return c;
}

bool verify_witness(const Relation& r, const Relation& s, const IsoWitness& w) {
  try {
    return check_witness(r, s, w).all();
  } catch (const TypeError&) {
    return false;
  }
}

IsoWitness reverse_witness(const IsoWitness& w) { return {converse(w.phi), converse(w.psi)}; }

IsoWitness chain_witness(const IsoWitness& rs, const IsoWitness& st) {
  return {compose(rs.phi, st.phi), compose(rs.psi, st.psi)};
}

}  // namespace relalg
