#include "frobtangle/term.hpp"

namespace frobtangle {

bool gen_in_set(Generator g, GenSet s) {
  if (g == Generator::Comult) return s == GenSet::G1;
  if (g == Generator::Zag) return s == GenSet::G2;
  return true;
}

Generator gen_from_name(char c) {
  switch (c) {
    case 'm': return Generator::Mult;
    case 'u': return Generator::Unit;
    case 'd': return Generator::Comult;
    case 'e': return Generator::Counit;
    case 'g': return Generator::Zag;
  }
  throw std::invalid_argument(std::string("unknown generator '") + c + "'");
}

Term Term::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->gen = g;
  n->dom = gen_in(g);
  n->cod = gen_out(g);
  n->size = 1;
  return Term(std::move(n));
}

Term Term::id(int width) {
  if (width < 0) throw std::invalid_argument("negative identity width");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->width = width;
  n->dom = n->cod = width;
  n->size = 0;
  return Term(std::move(n));
}

Term Term::seq(Term first, Term then) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Seq;
  n->dom = first.dom();
  n->cod = then.cod();
  n->ok = first.well_typed() && then.well_typed() && first.cod() == then.dom();
  n->size = first.size() + then.size();
  n->a = std::move(first);
  n->b = std::move(then);
  return Term(std::move(n));
}

Term Term::par(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->dom = left.dom() + right.dom();
  n->cod = left.cod() + right.cod();
  n->ok = left.well_typed() && right.well_typed();
  n->size = left.size() + right.size();
  n->a = std::move(left);
  n->b = std::move(right);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Gen: return a.generator() == b.generator();
    case Term::Kind::Id: return a.id_width() == b.id_width();
    case Term::Kind::Seq: return a.first() == b.first() && a.then() == b.then();
    case Term::Kind::Par: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void check(const Term& t, const std::string& path) {
  switch (t.kind()) {
    case Term::Kind::Gen:
    case Term::Kind::Id:
      return;
    case Term::Kind::Seq:
      check(t.first(), path + ".seq.0");
      check(t.then(), path + ".seq.1");
      if (t.first().cod() != t.then().dom())
        throw ArityMismatch(path.empty() ? "<root>" : path, t.first().cod(), t.then().dom());
      return;
    case Term::Kind::Par:
      check(t.left(), path + ".par.0");
      check(t.right(), path + ".par.1");
      return;
  }
}

}  // namespace

TypeInfo typecheck(const Term& t) {
  check(t, "");
  return {t.dom(), t.cod()};
}

bool generator_set(const Term& t, GenSet s) {
  switch (t.kind()) {
    case Term::Kind::Gen: return gen_in_set(t.generator(), s);
    case Term::Kind::Id: return true;
    case Term::Kind::Seq: return generator_set(t.first(), s) && generator_set(t.then(), s);
    case Term::Kind::Par: return generator_set(t.left(), s) && generator_set(t.right(), s);
  }
  return true;
}

namespace {

// precedence: ';' binds looser than '*'
void print(const Term& t, int prec, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      out += gen_name(t.generator());
      return;
    case Term::Kind::Id:
      out += "id(" + std::to_string(t.id_width()) + ")";
      return;
    case Term::Kind::Seq: {
      bool paren = prec > 0;
      if (paren) out += '(';
      print(t.first(), 0, out);
      out += " ; ";
      print(t.then(), 0, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::Par: {
      bool paren = prec > 1;
      if (paren) out += '(';
      print(t.left(), 1, out);
      out += " * ";
      print(t.right(), 1, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

}  // namespace frobtangle
