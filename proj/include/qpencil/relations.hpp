// Relation families presenting quotients of free algebras: a named list of
// noncommutative polynomials (graded = homogeneous quadratic, filtered =
// quadratic leading part with lower tails), text-file serialization, and
// helpers mapping polynomials to coordinate vectors over enumerated words.
#pragma once

#include <string>
#include <vector>

#include "qpencil/linalg.hpp"
#include "qpencil/ncpoly.hpp"

namespace qpencil {

enum class FamilyKind { graded, filtered };

std::string family_kind_name(FamilyKind k);

struct RelationFamily {
  std::string name;
  GenSetPtr gens;
  ParamSetPtr ps;
  FamilyKind kind = FamilyKind::graded;
  std::vector<NCPoly> relations;

  // Enforces the kind contract: graded relations are homogeneous of degree
  // 2; filtered relations have max degree 2 and a nonzero degree-2 part.
  void validate() const;
};

// Plain-text serialization (# comments, name/kind/gens headers, one
// "rel:" line per relation).  Loading re-parses against the given parameter
// set; any malformed content raises an error naming the file.
void save_relations(const RelationFamily& f, const std::string& path);
RelationFamily load_relations(const std::string& path, const ParamSetPtr& ps);

// Coordinates of a homogeneous degree-d polynomial over all_words(n, d),
// column = word_rank.
SparseVec nc_homogeneous_vec(const NCPoly& p, int d);
// Span of the degree-2 parts of a family's relations (ambient n^2 words).
Subspace relation_span_deg2(const RelationFamily& f);

}  // namespace qpencil
