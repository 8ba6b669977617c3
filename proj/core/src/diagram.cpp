#include "frobtangle/diagram.hpp"

#include <stdexcept>

namespace frobtangle {

int Diagram::width_at(size_t level) const {
  int w = dom;
  for (size_t k = 0; k < level && k < slices.size(); ++k)
    w += gen_out(slices[k].gen) - gen_in(slices[k].gen);
  return w;
}

std::string Diagram::key() const {
  std::string k;
  k.reserve(slices.size() + 2);
  k.push_back(char(dom));
  k.push_back(char(cod));
  for (const Slice& s : slices) {
    if (s.offset >= 64) throw std::length_error("diagram too wide for key encoding");
    k.push_back(char(int(s.gen) * 64 + s.offset));
  }
  return k;
}

namespace {

void build(const Term& t, int offset, std::vector<Slice>& out) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      out.push_back({t.generator(), offset});
      return;
    case Term::Kind::Id:
      return;
    case Term::Kind::Seq:
      build(t.first(), offset, out);
      build(t.then(), offset, out);
      return;
    case Term::Kind::Par:
      // Layered reading: run the left factor first (right factor's wires
      // idle), then the right factor shifted by the left factor's codomain.
      build(t.left(), offset, out);
      build(t.right(), offset + t.left().cod(), out);
      return;
  }
}

}  // namespace

Diagram to_diagram(const Term& t) {
  TypeInfo ti = typecheck(t);
  Diagram d;
  d.dom = ti.dom;
  d.cod = ti.cod;
  build(t, 0, d.slices);
  return d;
}

Diagram canonicalize(Diagram d) {
  auto& sl = d.slices;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < sl.size(); ++k) {
      Slice& s1 = sl[k];
      Slice& s2 = sl[k + 1];
      // s2's input window weakly left of s1's output window: swap.
      if (s2.offset + gen_in(s2.gen) <= s1.offset) {
        int shifted = s1.offset + gen_out(s2.gen) - gen_in(s2.gen);
        Slice n1{s2.gen, s2.offset};
        Slice n2{s1.gen, shifted};
        s1 = n1;
        s2 = n2;
        changed = true;
      }
    }
  }
  return d;
}

bool is_canonical(const Diagram& d) {
  for (size_t k = 0; k + 1 < d.slices.size(); ++k)
    if (d.slices[k + 1].offset + gen_in(d.slices[k + 1].gen) <= d.slices[k].offset)
      return false;
  return true;
}

bool structural_eq(const Term& a, const Term& b) {
  return canonicalize(to_diagram(a)) == canonicalize(to_diagram(b));
}

Term term_of(const Diagram& d) {
  if (d.slices.empty()) return Term::id(d.dom);
  Term acc = Term::id(0);  // placeholder until first layer
  int w = d.dom;
  bool haveAcc = false;
  for (const Slice& s : d.slices) {
    Term layer = Term::gen(s.gen);
    int rest = w - s.offset - gen_in(s.gen);
    if (rest < 0) throw std::logic_error("malformed diagram: slice exceeds width");
    if (s.offset > 0) layer = Term::par(Term::id(s.offset), layer);
    if (rest > 0) layer = Term::par(layer, Term::id(rest));
    acc = haveAcc ? Term::seq(acc, layer) : layer;
    haveAcc = true;
    w += gen_out(s.gen) - gen_in(s.gen);
  }
  return acc;
}

}  // namespace frobtangle
