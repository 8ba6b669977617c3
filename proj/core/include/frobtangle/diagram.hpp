#pragma once

#include <string>
#include <vector>

#include "frobtangle/term.hpp"

namespace frobtangle {

// One-generator-per-slice layer. A slice at offset k acts on wires
// [k, k+in) of the current level; everything else is a plain wire.
struct Slice {
  Generator gen;
  int offset;
  friend bool operator==(const Slice& a, const Slice& b) {
    return a.gen == b.gen && a.offset == b.offset;
  }
};

// Layered form of a term. Identity slices are erased; dom/cod are carried
// explicitly so Id(n) stay distinct for distinct n.
struct Diagram {
  int dom = 0;
  int cod = 0;
  std::vector<Slice> slices;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.dom == b.dom && a.cod == b.cod && a.slices == b.slices;
  }

  // Level widths: width(0) == dom, width(slices.size()) == cod.
  int width_at(size_t level) const;

  // Compact byte key, usable as a hash-map key. Requires offsets < 64.
  std::string key() const;
};

// Unique layered reading of a well-typed term (not yet canonical).
// Propagates ArityMismatch from typechecking.
Diagram to_diagram(const Term& t);

// Fixpoint of the left-greedy interchange rule: a slice swaps one slice
// earlier whenever its input window lies weakly left of the previous
// slice's output window. Idempotent; two well-typed terms denote the same
// morphism of the free strict monoidal category iff canonical forms match.
Diagram canonicalize(Diagram d);

bool is_canonical(const Diagram& d);

// Equality modulo associativity, identity laws and interchange.
bool structural_eq(const Term& a, const Term& b);

// Rebuilds a term (one slice per Seq step) denoting the same morphism.
Term term_of(const Diagram& d);

}  // namespace frobtangle
