#include "pi1lat/catalog.hpp"

#include <stdexcept>

namespace pi1lat {

namespace {

void require_positive(Index n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

HypothesisFlags all_flags() { return HypothesisFlags{true, true, true, true}; }

// Cocharacter complex of a pair (G, H) with H a torus mapping to G^tor:
// <0 -> H_* -> G^tor_*].
CocharComplex torus_stabilizer_cochar(Index h_rank, const IntMatrix& to_g_tor) {
  const FgAbGroup zero = FgAbGroup::free_lattice(0);
  const FgAbGroup middle = FgAbGroup::free_lattice(h_rank);
  const FgAbGroup right = FgAbGroup::free_lattice(to_g_tor.rows());
  return CocharComplex(zero, middle, right, AbMap::zero(zero, middle),
                       AbMap(middle, right, to_g_tor));
}

}  // namespace

GroupData torus(Index n) {
  require_positive(n, "torus");
  return GroupData{"T^" + std::to_string(n), FgAbGroup::free_lattice(n), true};
}

GroupData gl(Index n) {
  require_positive(n, "gl");
  return GroupData{"GL" + std::to_string(n), FgAbGroup::free_lattice(1), true};
}

GroupData sl(Index n) {
  require_positive(n, "sl");
  return GroupData{"SL" + std::to_string(n), FgAbGroup::free_lattice(0), true};
}

GroupData sp(Index n) {
  require_positive(n, "sp");
  return GroupData{"Sp" + std::to_string(2 * n), FgAbGroup::free_lattice(0), true};
}

HomSpaceInput torus_torsor(Index n) {
  const GroupData g = torus(n);
  const FgAbGroup h_hat;  // trivial stabilizer
  return HomSpaceInput(g.char_group, h_hat, AbMap::zero(g.char_group, h_hat), all_flags(),
                       torus_stabilizer_cochar(0, IntMatrix(n, 0)));
}

HomSpaceInput mu_in_gm(Index n) {
  require_positive(n, "mu_in_gm");
  const GroupData g = torus(1);
  IntMatrix rels(1, 1);
  rels(0, 0) = Int(n);
  const FgAbGroup h_hat(1, rels);
  const AbMap restriction(g.char_group, h_hat, IntMatrix::Identity(1, 1));
  HypothesisFlags flags = all_flags();
  flags.h_connected = (n == 1);
  std::optional<CocharComplex> cochar;
  if (n == 1) cochar = torus_stabilizer_cochar(0, IntMatrix(1, 0));
  return HomSpaceInput(g.char_group, h_hat, restriction, flags, cochar);
}

HomSpaceInput diagonal_torus_in_sl(Index n) {
  if (n < 2) throw std::invalid_argument("diagonal_torus_in_sl: n must be at least 2");
  const GroupData g = sl(n);
  const FgAbGroup h_hat = FgAbGroup::free_lattice(n - 1);
  // SL_n has no characters and trivial toric quotient.
  return HomSpaceInput(g.char_group, h_hat, AbMap::zero(g.char_group, h_hat), all_flags(),
                       torus_stabilizer_cochar(n - 1, IntMatrix(0, n - 1)));
}

HomSpaceInput sl_in_gl(Index n) {
  if (n < 2) throw std::invalid_argument("sl_in_gl: n must be at least 2");
  const GroupData g = gl(n);
  const FgAbGroup h_hat = FgAbGroup::free_lattice(0);
  // H = SL_n: H^sc = H^red = SL_n with identical maximal tori, and the
  // composite of its cocharacters with det is zero.
  const FgAbGroup t = FgAbGroup::free_lattice(n - 1);
  const FgAbGroup g_tor = FgAbGroup::free_lattice(1);
  const CocharComplex cochar(t, t, g_tor, AbMap::identity(t),
                             AbMap::zero(t, g_tor));
  return HomSpaceInput(g.char_group, h_hat, AbMap::zero(g.char_group, h_hat), all_flags(),
                       cochar);
}

HomSpaceInput diagonal_torus_in_gl(Index n) {
  require_positive(n, "diagonal_torus_in_gl");
  const GroupData g = gl(n);
  const FgAbGroup h_hat = FgAbGroup::free_lattice(n);
  // det restricted to the diagonal torus is the sum of the coordinates.
  IntMatrix restriction = IntMatrix::Zero(n, 1);
  for (Index i = 0; i < n; ++i) restriction(i, 0) = 1;
  IntMatrix to_g_tor(1, n);
  for (Index i = 0; i < n; ++i) to_g_tor(0, i) = 1;
  return HomSpaceInput(g.char_group, h_hat, AbMap(g.char_group, h_hat, restriction),
                       all_flags(), torus_stabilizer_cochar(n, to_g_tor));
}

HomSpaceInput split_component_example() {
  const FgAbGroup g_hat = FgAbGroup::free_lattice(2);
  IntMatrix rels(2, 1);
  rels(0, 0) = 0;
  rels(1, 0) = 2;
  const FgAbGroup h_hat(2, rels);
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 0;
  m(1, 0) = 0;
  m(1, 1) = 1;
  HypothesisFlags flags = all_flags();
  flags.h_connected = false;
  return HomSpaceInput(g_hat, h_hat, AbMap(g_hat, h_hat, m), flags);
}

std::vector<NamedExample> worked_examples() {
  std::vector<NamedExample> out;
  const InvariantFactors trivial{};

  for (Index n : {Index(1), Index(2), Index(5)}) {
    out.push_back(NamedExample{
        "torus_torsor_" + std::to_string(n), torus_torsor(n),
        InvariantFactors{n, {}}, InvariantFactors{},
        trivial, "torsor under a torus: pi1 is the cocharacter lattice"});
  }
  for (Index n : {Index(2), Index(3), Index(4), Index(6)}) {
    out.push_back(NamedExample{
        "gm_mod_mu" + std::to_string(n), mu_in_gm(n),
        InvariantFactors{1, {}}, std::nullopt,
        InvariantFactors{0, {Int(n)}},
        "X is G_m again, via the n-th power map"});
  }
  out.push_back(NamedExample{
      "sl2_mod_torus", diagonal_torus_in_sl(2),
      InvariantFactors{0, {}}, InvariantFactors{1, {}},
      trivial, "fibration SL2 -> X with fiber C^x and simply connected total space"});
  for (Index n : {Index(2), Index(3)}) {
    out.push_back(NamedExample{
        "gl" + std::to_string(n) + "_mod_sl" + std::to_string(n), sl_in_gl(n),
        InvariantFactors{1, {}}, InvariantFactors{0, {}},
        trivial, "X is G_m via det"});
  }
  out.push_back(NamedExample{
      "gl2_mod_torus", diagonal_torus_in_gl(2),
      InvariantFactors{0, {}}, InvariantFactors{1, {}},
      trivial, "same space as sl2_mod_torus, reached through GL2"});
  out.push_back(NamedExample{
      "split_component", split_component_example(),
      InvariantFactors{1, {Int(2)}}, std::nullopt,
      InvariantFactors{0, {Int(2)}},
      "frozen after the direct route and the auxiliary pipeline agreed"});
  return out;
}

}  // namespace pi1lat
