#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pi1lat/normal_form.hpp"

// Finitely generated abelian groups as presented cokernels, maps between
// them, and the Hom(-,Z) / Ext^1(-,Z) / torsion / prime-to-p functors.
// Groups are immutable; equality of groups means equality of invariants.

namespace pi1lat {

struct InvariantFactors {
  Index rank = 0;
  std::vector<Int> factors;  // divisibility chain, each factor > 1

  bool operator==(const InvariantFactors&) const = default;
  bool is_trivial() const { return rank == 0 && factors.empty(); }
  Int torsion_order() const;
  std::string to_string() const;  // e.g. "Z^2 + Z/3", "0" when trivial
};

// Cokernel of rels: Z^m -> Z^gens. The presentation is normalized on
// construction: relation columns are replaced by the column Hermite form
// with zero columns dropped, so rels always has full column rank.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // the trivial group
  FgAbGroup(Index gens, const IntMatrix& rels);

  static FgAbGroup free_lattice(Index n);
  // Canonical presentation of Z^rank + sum Z/factors[i].
  static FgAbGroup from_invariants(Index rank, const std::vector<Int>& factors);

  Index gens() const { return gens_; }
  const IntMatrix& rels() const { return rels_; }
  const InvariantFactors& invariants() const { return inv_; }
  Index rank() const { return inv_.rank; }
  const std::vector<Int>& torsion_factors() const { return inv_.factors; }
  bool is_trivial() const { return inv_.is_trivial(); }
  bool is_torsion_free() const { return inv_.factors.empty(); }
  // True when the presentation is the plain lattice Z^gens (no relations).
  bool is_lattice() const { return rels_.cols() == 0; }

 private:
  Index gens_ = 0;
  IntMatrix rels_ = IntMatrix(0, 0);
  InvariantFactors inv_;
};

inline const InvariantFactors& invariant_factors(const FgAbGroup& a) {
  return a.invariants();
}
inline bool same_invariants(const FgAbGroup& a, const FgAbGroup& b) {
  return a.invariants() == b.invariants();
}

// Homomorphism between presented groups, given on ambient generators.
// Construction verifies well-definedness: every relation of the source must
// land in the relation span of the destination.
class AbMap {
 public:
  AbMap(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& matrix);

  static AbMap identity(const FgAbGroup& g);
  static AbMap zero(const FgAbGroup& src, const FgAbGroup& dst);

  const FgAbGroup& src() const { return src_; }
  const FgAbGroup& dst() const { return dst_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  FgAbGroup src_;
  FgAbGroup dst_;
  IntMatrix matrix_;
};

AbMap compose(const AbMap& f, const AbMap& g);  // f after g
bool is_zero_map(const AbMap& f);

FgAbGroup torsion_subgroup(const FgAbGroup& a);
// Ext^1(A, Z): finite, with the same invariant factors as the torsion of A;
// the canonical invariant-factor representative is returned.
FgAbGroup ext1_to_z(const FgAbGroup& a);

// Hom(A, Z) together with the sublattice of ambient functionals realizing
// it: basis columns span { phi in Hom(Z^gens, Z) : phi . rels = 0 }.
struct HomToZ {
  FgAbGroup group;  // free of rank = rank(A)
  IntMatrix basis;  // gens x rank, one functional per column
};
HomToZ hom_to_z(const FgAbGroup& a);

// Hom(f, Z) in the canonical hom_to_z bases: Hom(dst, Z) -> Hom(src, Z).
AbMap hom_dual_map(const AbMap& f);

FgAbGroup cokernel(const AbMap& f);

struct KernelPair {
  FgAbGroup group;
  AbMap inclusion;  // monomorphism into f.src()
};
KernelPair kernel(const AbMap& f);

// A (x) Z_(p'): rank kept, p-parts stripped from every invariant factor.
struct PrimeToPAbGroup {
  Int p = 0;
  Index rank = 0;
  std::vector<Int> torsion;

  bool operator==(const PrimeToPAbGroup&) const = default;
  std::string to_string() const;
};
PrimeToPAbGroup tensor_prime_to_p(const FgAbGroup& a, const Int& p);

// For a torsion-free group: an isomorphism with the plain lattice Z^rank.
// project * rels = 0, project * section = identity, and section followed by
// the quotient map is inverse to project on classes.
struct FreeBasis {
  IntMatrix project;  // rank x gens
  IntMatrix section;  // gens x rank
};
FreeBasis free_presentation(const FgAbGroup& a);

}  // namespace pi1lat
