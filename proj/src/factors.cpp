#include "relalg/factors.hpp"

namespace relalg {

Relation left_residual(const Relation& r, const Relation& s) {
  if (!(r.src() == s.src())) {
    throw TypeError("left_residual: sources differ (" + r.src().name() + " vs " + s.src().name() + ")");
  }
  const Relation rc = converse(r);
  Relation out(r.dst_ptr(), s.dst_ptr());
  const Relation::Row full = out.column_mask();
  for (std::size_t b = 0; b < rc.rows(); ++b) {
    Relation::Row acc = full;
    for (Relation::Row bits = rc.row(b); bits != 0; bits &= bits - 1) {
      acc &= s.row(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    out.set_row(b, acc);
  }
  return out;
}

Relation right_residual(const Relation& r, const Relation& s) {
  if (!(r.dst() == s.dst())) {
    throw TypeError("right_residual: targets differ (" + r.dst().name() + " vs " + s.dst().name() + ")");
  }
  Relation out(r.src_ptr(), s.src_ptr());
  for (std::size_t a = 0; a < r.rows(); ++a) {
    Relation::Row acc = 0;
    for (std::size_t c = 0; c < s.rows(); ++c) {
      if ((s.row(c) & ~r.row(a)) == 0) acc |= Relation::Row{1} << c;
    }
    out.set_row(a, acc);
  }
  return out;
}

Relation sym_right_div(const Relation& r, const Relation& s) {
  return intersect(left_residual(r, s), converse(left_residual(s, r)));
}

Relation sym_left_div(const Relation& r, const Relation& s) {
  return intersect(right_residual(r, s), converse(right_residual(s, r)));
}

}  // namespace relalg
