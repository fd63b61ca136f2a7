#pragma once

#include "pi1lat/abelian_group.hpp"

// Two-term complexes in degrees 0 and 1 with free degree-0 part, their
// Ext^0 against Z via an explicit free replacement, and three-term
// cocharacter complexes in degrees -2, -1, 0.

namespace pi1lat {

// [c0 -> c1> with c0 in degree 0. c0 must be torsion-free; internally it is
// re-presented as a plain lattice and the differential lifted accordingly.
class TwoTermComplex {
 public:
  TwoTermComplex(const FgAbGroup& degree0, const FgAbGroup& degree1,
                 const AbMap& differential);

  const FgAbGroup& degree0() const { return c0_; }  // plain lattice
  const FgAbGroup& degree1() const { return c1_; }
  // Differential on ambient lattices: degree1.gens x degree0.gens.
  const IntMatrix& lift() const { return lift_; }
  AbMap differential() const { return AbMap(c0_, c1_, lift_); }

 private:
  FgAbGroup c0_;
  FgAbGroup c1_;
  IntMatrix lift_;
};

// Ext^0_Z(C, Z) computed as coker(d^T) for the free replacement
// [Z^g + Z^m --(F|R)--> Z^n] of C, which is a quasi-isomorphism because the
// normalized relation matrix R is injective.
FgAbGroup ext0_to_z(const TwoTermComplex& c);

// The computable pieces of the long exact sequence obtained from
// 0 -> [0 -> c1> -> [c0 -> c1> -> [c0 -> 0> -> 0, plus a bookkeeping bit
// relating them to ext0_to_z.
struct LongExactPieces {
  FgAbGroup hom_c1;   // Hom(c1, Z)
  FgAbGroup hom_c0;   // Hom(c0, Z)
  AbMap dual;         // Hom(d, Z): hom_c1 -> hom_c0
  FgAbGroup ext1_c1;  // Ext^1(c1, Z)
  bool connecting_check;
};
LongExactPieces long_exact_pieces(const TwoTermComplex& c);

// <a -> b -> c] with c in degree 0; all three terms must be torsion-free
// lattices and the composite must vanish.
class CocharComplex {
 public:
  CocharComplex(const FgAbGroup& a, const FgAbGroup& b, const FgAbGroup& c,
                const AbMap& f, const AbMap& g);

  const FgAbGroup& term_minus2() const { return a_; }
  const FgAbGroup& term_minus1() const { return b_; }
  const FgAbGroup& term_zero() const { return c_; }
  const IntMatrix& map_f() const { return f_; }  // b.gens x a.gens
  const IntMatrix& map_g() const { return g_; }  // c.gens x b.gens

 private:
  FgAbGroup a_;
  FgAbGroup b_;
  FgAbGroup c_;
  IntMatrix f_;
  IntMatrix g_;
};

// ker(g) / im(f), via the canonical kernel basis and one exact solve.
FgAbGroup h_minus_one(const CocharComplex& c);

// degree in {-2, -1, 0}.
FgAbGroup cohomology_at(const CocharComplex& c, int degree);

}  // namespace pi1lat
