#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frobtangle/term.hpp"

namespace frobtangle {

struct PortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingPort : PortError {
  explicit MissingPort(int p) : PortError("no such open port: " + std::to_string(p)) {}
};
struct PortReuse : PortError {
  explicit PortReuse(int p) : PortError("port glued twice: " + std::to_string(p)) {}
};
struct NonPlanarInternal : std::logic_error {
  explicit NonPlanarInternal(const std::string& m)
      : std::logic_error("non-planar surface from a term (engine defect): " + m) {}
};
struct Unrealizable : std::runtime_error {
  explicit Unrealizable(const std::string& m) : std::runtime_error("unrealizable invariant: " + m) {}
};

// Boundary label of a marked interval: source S(i) or target T(j), 1-based.
struct Label {
  bool target;
  int index;
  friend bool operator==(const Label& a, const Label& b) {
    return a.target == b.target && a.index == b.index;
  }
  friend bool operator<(const Label& a, const Label& b) {
    if (a.target != b.target) return !a.target;
    return a.index < b.index;
  }
};

using CycWord = std::vector<Label>;  // canonical rotation applied

// Diffeomorphism class of one connected piece: genus, the cyclic words of
// its marked boundary circles, and the count of unmarked circles (windows).
struct ComponentKey {
  int genus = 0;
  std::vector<CycWord> words;  // sorted
  int windows = 0;
  friend bool operator==(const ComponentKey& a, const ComponentKey& b) {
    return a.genus == b.genus && a.windows == b.windows && a.words == b.words;
  }
  friend bool operator<(const ComponentKey& a, const ComponentKey& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    if (a.words != b.words) return a.words < b.words;
    return a.windows < b.windows;
  }
};

// Complete invariant of the denoted planar open cobordism.
struct CobInvariant {
  int dom = 0;
  int cod = 0;
  std::vector<ComponentKey> components;  // sorted multiset
  friend bool operator==(const CobInvariant& a, const CobInvariant& b) {
    return a.dom == b.dom && a.cod == b.cod && a.components == b.components;
  }
  friend bool operator!=(const CobInvariant& a, const CobInvariant& b) { return !(a == b); }

  std::string key() const;  // compact string, stable across runs
};

// A surface with boundary assembled by sewing generator disks at marked
// intervals. Circles carry the open ports in boundary order (surface kept
// on the left of the traversal); components track Euler characteristic.
class SurfaceComplex {
 public:
  // Single disk for a generator; in_ports/out_ports expose its boundary
  // interface in left-to-right order.
  static SurfaceComplex generator(Generator g);
  static SurfaceComplex strip();  // identity strip

  const std::vector<int>& in_ports() const { return in_; }
  const std::vector<int>& out_ports() const { return out_; }

  // Disjoint union with `other`, then sew each (port of this, port of other)
  // pair. Every port may be used at most once across the whole life of the
  // complex. The surviving interface keeps this's ports then other's.
  void glue(SurfaceComplex other, const std::vector<std::pair<int, int>>& pairing);

  int component_count() const;
  int total_euler() const;

  // Reads off the invariant, interpreting `sources`/`targets` (port lists)
  // as the S/T markings. All other open ports must already be sewn.
  CobInvariant read_invariant(const std::vector<int>& sources,
                              const std::vector<int>& targets) const;

 private:
  friend CobInvariant invariant(const Term& t);
  SurfaceComplex() = default;
  void sew(int p, int q);
  int circle_of(int port) const;

  std::vector<std::vector<int>> circles_;  // port ids in cyclic order; empty = window
  std::vector<int> circle_comp_;
  std::vector<int> comp_chi_;
  std::vector<char> comp_alive_;
  std::vector<char> circle_alive_;
  std::vector<char> port_used_;  // indexed by port id
  std::vector<int> in_, out_;
  int nports_ = 0;

  int new_component(int chi);
  int new_circle(std::vector<int> ports, int comp);
  void offset_ids(int port_off, int circle_off, int comp_off);
};

// Folds the layered form of `t` through sewing and canonicalizes words.
// Throws NonPlanarInternal if any component of a well-typed term reports
// positive genus.
CobInvariant invariant(const Term& t);

// Equality in the category of thick tangles (Frobenius-axiom equality).
// Throws ArityMismatch when the boundary arities differ.
bool cob_eq(const Term& a, const Term& b);

// Builds a term with invariant(result) == inv, or throws Unrealizable.
Term synthesize(const CobInvariant& inv);

}  // namespace frobtangle
