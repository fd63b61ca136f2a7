#pragma once

#include <string>
#include <vector>

#include "pi1lat/homspace.hpp"

// Deterministic builders for standard groups and embeddings, plus the table
// of fully worked examples used by the tests, the docs, and the shipped
// input files.

namespace pi1lat {

struct GroupData {
  std::string name;
  FgAbGroup char_group;  // free
  bool pic_zero;
};

GroupData torus(Index n);  // character lattice Z^n
GroupData gl(Index n);     // character lattice Z, generated by det
GroupData sl(Index n);     // no characters
GroupData sp(Index n);     // Sp_{2n}; no characters

// X = the torus itself acted on by itself (trivial stabilizer).
HomSpaceInput torus_torsor(Index n);
// X = G_m / mu_n.
HomSpaceInput mu_in_gm(Index n);
// X = SL_n / diagonal torus (n >= 2).
HomSpaceInput diagonal_torus_in_sl(Index n);
// X = GL_n / SL_n.
HomSpaceInput sl_in_gl(Index n);
// X = GL_n / diagonal torus.
HomSpaceInput diagonal_torus_in_gl(Index n);
// Disconnected stabilizer with both a free and a torsion part in pi1:
// g_hat = Z^2, h_hat = Z + Z/2.
HomSpaceInput split_component_example();

struct NamedExample {
  std::string name;
  HomSpaceInput input;
  InvariantFactors expected_pi1;
  std::optional<InvariantFactors> expected_pi2;
  InvariantFactors expected_pi0;
  std::string provenance;
};

std::vector<NamedExample> worked_examples();

}  // namespace pi1lat
