#pragma once

#include "relalg/relation.hpp"

namespace relalg {

// R\S for R: A~B, S: A~C, giving B~C. (b,c) holds iff every a related to b by R
// is related to c by S.
Relation left_residual(const Relation& r, const Relation& s);

// R/S for R: A~B, S: C~B, giving A~C. (a,c) holds iff every b reached from c by S
// is reached from a by R.
Relation right_residual(const Relation& r, const Relation& s);

// R\\S = R\S ∩ (S\R)°, for R: A~B, S: A~C.
Relation sym_right_div(const Relation& r, const Relation& s);

// R//S = R/S ∩ (S/R)°, for R: B~A, S: C~A.
Relation sym_left_div(const Relation& r, const Relation& s);

}  // namespace relalg
