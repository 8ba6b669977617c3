#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace frobtangle {

// The five generating morphisms. Arities are fixed by kind.
enum class Generator { Mult, Unit, Comult, Counit, Zag };

enum class GenSet { G1, G2 };  // G1 = {m,u,d,e}, G2 = {m,u,g,e}

inline int gen_in(Generator g) {
  switch (g) {
    case Generator::Mult: return 2;
    case Generator::Unit: return 0;
    case Generator::Comult: return 1;
    case Generator::Counit: return 1;
    case Generator::Zag: return 0;
  }
  return 0;
}

inline int gen_out(Generator g) {
  switch (g) {
    case Generator::Mult: return 1;
    case Generator::Unit: return 1;
    case Generator::Comult: return 2;
    case Generator::Counit: return 0;
    case Generator::Zag: return 2;
  }
  return 0;
}

// Single-letter names follow the concrete syntax: m u d e g.
inline char gen_name(Generator g) {
  switch (g) {
    case Generator::Mult: return 'm';
    case Generator::Unit: return 'u';
    case Generator::Comult: return 'd';
    case Generator::Counit: return 'e';
    case Generator::Zag: return 'g';
  }
  return '?';
}

bool gen_in_set(Generator g, GenSet s);
Generator gen_from_name(char c);

struct ArityMismatch : std::runtime_error {
  ArityMismatch(std::string path_, int expected_, int found_)
      : std::runtime_error("arity mismatch at " + path_ + ": expected " +
                           std::to_string(expected_) + ", found " + std::to_string(found_)),
        path(std::move(path_)), expected(expected_), found(found_) {}
  std::string path;
  int expected;
  int found;
};

// Immutable term tree over the generators, closed under sequential (Seq)
// and side-by-side (Par) composition. Trees are unreduced: identity laws,
// associativity and interchange are only identified at the Diagram level.
// Ill-typed Seq nodes are representable; typecheck() reports them.
class Term {
 public:
  enum class Kind { Gen, Id, Seq, Par };

  static Term gen(Generator g);
  static Term id(int width);
  static Term seq(Term first, Term then);
  static Term par(Term left, Term right);

  Kind kind() const { return node_->kind; }
  Generator generator() const { return node_->gen; }
  int id_width() const { return node_->width; }
  const Term& first() const { return node_->a; }
  const Term& then() const { return node_->b; }
  const Term& left() const { return node_->a; }
  const Term& right() const { return node_->b; }

  // Cached arities. Valid for every node; a Seq node caches dom(first),
  // cod(then) even when the inner cut mismatches. Use typecheck() to verify.
  int dom() const { return node_->dom; }
  int cod() const { return node_->cod; }

  bool well_typed() const { return node_->ok; }

  size_t size() const { return node_->size; }  // number of generator leaves

  friend bool operator==(const Term& a, const Term& b);  // syntactic equality

 private:
  struct Node {
    Kind kind;
    Generator gen = Generator::Mult;
    int width = 0;
    Term a{nullptr}, b{nullptr};
    int dom = 0, cod = 0;
    bool ok = true;
    size_t size = 0;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  Term(std::nullptr_t) : node_(nullptr) {}

  std::shared_ptr<const Node> node_;
};

struct TypeInfo {
  int dom;
  int cod;
};

// Total on the term grammar; throws ArityMismatch with the path of the
// offending Seq node ("seq.0", "par.1.seq.0", ...).
TypeInfo typecheck(const Term& t);

// True iff every generator leaf lies in the named set. Requires well-typed input.
bool generator_set(const Term& t, GenSet s);

// Diagrammatic-order printer for the DSL: "f ; g" means g after f.
std::string print_term(const Term& t);

}  // namespace frobtangle
