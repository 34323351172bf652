// The Coxeter-like complex of (W+, R): nerve of the covering by cosets of the
// maximal standard parabolic subgroups, with exact integer homology.

#ifndef COXALT_COMPLEX_HPP
#define COXALT_COMPLEX_HPP

#include <string>
#include <vector>

#include "coxalt/altgrp.hpp"

namespace coxalt {

struct AltComplex {
  // colors are indices into color_names; vertices are cosets
  std::vector<std::string> color_names;
  std::vector<int> vertex_color;
  std::vector<std::vector<int>> vertex_members;  // plus indices, sorted
  std::vector<std::vector<int>> facets;          // sorted vertex ids

  int dimension() const;  // max facet size - 1
  bool pure() const;
  bool balanced() const;  // one vertex of each color per maximal facet
};

AltComplex build_complex(const AltGroup& alt);
AltComplex type_select(const AltComplex& c, const std::vector<int>& colors);

// One facet per line: sorted "id:color" tags.
std::string complex_facets_text(const AltComplex& c);

struct Homology {
  std::vector<long> reduced_betti;  // index = dimension
  bool torsion_free = true;
};
Homology homology(const AltComplex& c);

// Rank and pivot diagonal of an integer matrix under elementary row/column
// reduction.  The product of the diagonal equals the product of the true
// Smith invariant factors, so "all units" is a sound torsion-freeness test.
struct SmithResult {
  int rank = 0;
  std::vector<Int> diagonal;
};
SmithResult smith_normal_form(std::vector<std::vector<Int>> m);

// The type-selected complex Delta(W,S)_{S minus s0} built from the full
// group, and the check that tau induces a simplicial isomorphism onto
// build_complex(alt).
AltComplex build_w_complex_without_s0(const GroupTable& g);
bool complexes_isomorphic_via_tau(const AltGroup& alt, std::string* detail = nullptr);

}  // namespace coxalt

#endif
