#include "pi1lat/complexes.hpp"

#include <stdexcept>

namespace pi1lat {

namespace {

// Re-present a torsion-free group as a plain lattice; returns the projection
// used to transport maps.
FgAbGroup as_lattice(const FgAbGroup& g, FreeBasis* basis_out) {
  if (g.is_lattice()) {
    if (basis_out) {
      basis_out->project = IntMatrix::Identity(g.gens(), g.gens());
      basis_out->section = IntMatrix::Identity(g.gens(), g.gens());
    }
    return g;
  }
  FreeBasis fb = free_presentation(g);
  if (basis_out) *basis_out = fb;
  return FgAbGroup::free_lattice(g.rank());
}

}  // namespace

TwoTermComplex::TwoTermComplex(const FgAbGroup& degree0, const FgAbGroup& degree1,
                               const AbMap& differential)
    : c1_(degree1) {
  if (!degree0.is_torsion_free())
    throw std::invalid_argument("TwoTermComplex: degree-0 term has torsion");
  if (differential.src().gens() != degree0.gens() ||
      differential.dst().gens() != degree1.gens())
    throw std::invalid_argument("TwoTermComplex: differential does not match the terms");
  FreeBasis fb;
  c0_ = as_lattice(degree0, &fb);
  lift_ = differential.matrix() * fb.section;
}

FgAbGroup ext0_to_z(const TwoTermComplex& c) {
  const IntMatrix& f = c.lift();
  const IntMatrix& r = c.degree1().rels();
  const Index n = c.degree1().gens();
  IntMatrix d(n, f.cols() + r.cols());
  d.leftCols(f.cols()) = f;
  d.rightCols(r.cols()) = r;
  const IntMatrix d_t = d.transpose();
  return FgAbGroup(d.cols(), d_t);
}

LongExactPieces long_exact_pieces(const TwoTermComplex& c) {
  LongExactPieces out{hom_to_z(c.degree1()).group, hom_to_z(c.degree0()).group,
                      hom_dual_map(c.differential()), ext1_to_z(c.degree1()), false};

  const FgAbGroup ext0 = ext0_to_z(c);
  const FgAbGroup coker_dual = cokernel(out.dual);
  const bool rank_ok = ext0.rank() == coker_dual.rank();
  const Int bound = coker_dual.invariants().torsion_order() *
                    out.ext1_c1.invariants().torsion_order();
  const bool torsion_ok = divides(ext0.invariants().torsion_order(), bound);
  out.connecting_check = rank_ok && torsion_ok;
  return out;
}

CocharComplex::CocharComplex(const FgAbGroup& a, const FgAbGroup& b, const FgAbGroup& c,
                             const AbMap& f, const AbMap& g) {
  if (!a.is_torsion_free() || !b.is_torsion_free() || !c.is_torsion_free())
    throw std::invalid_argument("CocharComplex: all terms must be torsion-free");
  if (f.src().gens() != a.gens() || f.dst().gens() != b.gens())
    throw std::invalid_argument("CocharComplex: map f does not match the terms");
  if (g.src().gens() != b.gens() || g.dst().gens() != c.gens())
    throw std::invalid_argument("CocharComplex: map g does not match the terms");

  FreeBasis fa, fbb, fc;
  a_ = as_lattice(a, &fa);
  b_ = as_lattice(b, &fbb);
  c_ = as_lattice(c, &fc);
  f_ = fbb.project * f.matrix() * fa.section;
  g_ = fc.project * g.matrix() * fbb.section;

  const IntMatrix composite = g_ * f_;
  if (!is_zero_matrix<Int>(composite))
    throw std::invalid_argument("CocharComplex: composite differential is nonzero");
}

FgAbGroup h_minus_one(const CocharComplex& c) {
  const IntMatrix k = kernel_basis<Int>(c.map_g());
  const auto coords = solve_columns<Int>(k, c.map_f());
  if (!coords)
    throw std::logic_error("h_minus_one: image of f escaped ker(g); the complex is corrupt");
  return FgAbGroup(k.cols(), *coords);
}

FgAbGroup cohomology_at(const CocharComplex& c, int degree) {
  switch (degree) {
    case -2:
      return FgAbGroup::free_lattice(kernel_basis<Int>(c.map_f()).cols());
    case -1:
      return h_minus_one(c);
    case 0:
      return FgAbGroup(c.term_zero().gens(), c.map_g());
    default:
      throw std::invalid_argument("cohomology_at: degree must be -2, -1, or 0");
  }
}

}  // namespace pi1lat
