#include "pi1lat/abelian_group.hpp"

#include <stdexcept>

namespace pi1lat {

Int InvariantFactors::torsion_order() const {
  Int o(1);
  for (const Int& d : factors) o *= d;
  return o;
}

std::string InvariantFactors::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (rank > 0) s = "Z^" + std::to_string(rank);
  for (const Int& d : factors) {
    if (!s.empty()) s += " + ";
    s += "Z/" + to_decimal(d);
  }
  return s;
}

FgAbGroup::FgAbGroup(Index gens, const IntMatrix& rels) : gens_(gens) {
  if (gens < 0) throw std::invalid_argument("FgAbGroup: negative generator count");
  if (rels.rows() != gens)
    throw std::invalid_argument("FgAbGroup: relation matrix must have one row per generator");

  const IntMatrix h = column_hermite_form<Int>(rels).hermite;
  Index nonzero = h.cols();
  while (nonzero > 0 && is_zero_matrix<Int>(h.col(nonzero - 1))) --nonzero;
  rels_ = h.leftCols(nonzero);

  const auto s = smith_normal_form<Int>(rels_);
  inv_.rank = gens_ - rels_.cols();
  inv_.factors.clear();
  for (Index i = 0; i < rels_.cols(); ++i)
    if (s.diagonal(i, i) > 1) inv_.factors.push_back(s.diagonal(i, i));
}

FgAbGroup FgAbGroup::free_lattice(Index n) { return FgAbGroup(n, IntMatrix(n, 0)); }

FgAbGroup FgAbGroup::from_invariants(Index rank, const std::vector<Int>& factors) {
  if (rank < 0) throw std::invalid_argument("from_invariants: negative rank");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] <= 1) throw std::invalid_argument("from_invariants: factors must exceed 1");
    if (i > 0 && !divides(factors[i - 1], factors[i]))
      throw std::invalid_argument("from_invariants: factors must form a divisibility chain");
  }
  const Index k = static_cast<Index>(factors.size());
  IntMatrix rels = IntMatrix::Zero(rank + k, k);
  for (Index i = 0; i < k; ++i) rels(i, i) = factors[static_cast<std::size_t>(i)];
  return FgAbGroup(rank + k, rels);
}

AbMap::AbMap(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& matrix)
    : src_(src), dst_(dst), matrix_(matrix) {
  if (matrix.rows() != dst.gens() || matrix.cols() != src.gens())
    throw std::invalid_argument("AbMap: matrix shape does not match the presentations");
  const IntMatrix image_of_rels = matrix_ * src_.rels();
  if (!solve_columns<Int>(dst_.rels(), image_of_rels))
    throw std::invalid_argument("AbMap: matrix does not map source relations into destination relations");
}

AbMap AbMap::identity(const FgAbGroup& g) {
  return AbMap(g, g, IntMatrix::Identity(g.gens(), g.gens()));
}

AbMap AbMap::zero(const FgAbGroup& src, const FgAbGroup& dst) {
  return AbMap(src, dst, IntMatrix::Zero(dst.gens(), src.gens()));
}

AbMap compose(const AbMap& f, const AbMap& g) {
  if (g.dst().gens() != f.src().gens())
    throw std::invalid_argument("compose: inner generator counts do not match");
  return AbMap(g.src(), f.dst(), f.matrix() * g.matrix());
}

bool is_zero_map(const AbMap& f) {
  return solve_columns<Int>(f.dst().rels(), f.matrix()).has_value();
}

FgAbGroup torsion_subgroup(const FgAbGroup& a) {
  return FgAbGroup::from_invariants(0, a.torsion_factors());
}

FgAbGroup ext1_to_z(const FgAbGroup& a) {
  // Hom(A_tors, Q/Z) has the invariant factors of A_tors.
  return FgAbGroup::from_invariants(0, a.torsion_factors());
}

HomToZ hom_to_z(const FgAbGroup& a) {
  const IntMatrix rels_t = a.rels().transpose();
  IntMatrix basis = kernel_basis<Int>(rels_t);
  return HomToZ{FgAbGroup::free_lattice(basis.cols()), std::move(basis)};
}

AbMap hom_dual_map(const AbMap& f) {
  const HomToZ hom_dst = hom_to_z(f.dst());
  const HomToZ hom_src = hom_to_z(f.src());
  const IntMatrix pulled = f.matrix().transpose() * hom_dst.basis;
  const auto coords = solve_columns<Int>(hom_src.basis, pulled);
  if (!coords)
    throw std::logic_error("hom_dual_map: pulled-back functional left the hom lattice");
  return AbMap(hom_dst.group, hom_src.group, *coords);
}

FgAbGroup cokernel(const AbMap& f) {
  const IntMatrix& rels = f.dst().rels();
  IntMatrix aug(f.dst().gens(), rels.cols() + f.matrix().cols());
  aug.leftCols(rels.cols()) = rels;
  aug.rightCols(f.matrix().cols()) = f.matrix();
  return FgAbGroup(f.dst().gens(), aug);
}

KernelPair kernel(const AbMap& f) {
  // Lift to ambient lattices: the kernel is carried by
  // L = { x : f.matrix x in im(dst.rels) } modulo im(src.rels).
  const Index n_src = f.src().gens();
  IntMatrix block(f.dst().gens(), n_src + f.dst().rels().cols());
  block.leftCols(n_src) = f.matrix();
  block.rightCols(f.dst().rels().cols()) = f.dst().rels();
  const IntMatrix kb = kernel_basis<Int>(block);
  // dst.rels is injective, so projecting to the source block is one-to-one.
  const IntMatrix lattice = kb.topRows(n_src);
  const auto rel_coords = solve_columns<Int>(lattice, f.src().rels());
  if (!rel_coords)
    throw std::logic_error("kernel: source relations escaped the kernel lattice");
  FgAbGroup group(lattice.cols(), *rel_coords);
  return KernelPair{group, AbMap(group, f.src(), lattice)};
}

std::string PrimeToPAbGroup::to_string() const {
  InvariantFactors inv{rank, torsion};
  return inv.to_string();
}

PrimeToPAbGroup tensor_prime_to_p(const FgAbGroup& a, const Int& p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("tensor_prime_to_p: p must be zero or a prime");
  PrimeToPAbGroup out;
  out.p = p;
  out.rank = a.rank();
  for (Int d : a.torsion_factors()) {
    if (p != 0)
      while (divides(p, d)) d /= p;
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

FreeBasis free_presentation(const FgAbGroup& a) {
  if (!a.is_torsion_free())
    throw std::invalid_argument("free_presentation: group has torsion");
  const Index n = a.gens();
  const Index r = a.rels().cols();
  const auto s = smith_normal_form<Int>(a.rels());
  FreeBasis out;
  out.project = s.left.bottomRows(n - r);
  const auto left_inv = solve_columns<Int>(s.left, IntMatrix::Identity(n, n));
  if (!left_inv) throw std::logic_error("free_presentation: unimodular factor not invertible");
  out.section = left_inv->rightCols(n - r);
  return out;
}

}  // namespace pi1lat
