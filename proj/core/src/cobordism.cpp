#include "frobtangle/cobordism.hpp"

#include <algorithm>
#include <map>

#include "frobtangle/diagram.hpp"

namespace frobtangle {

std::string CobInvariant::key() const {
  std::string k = std::to_string(dom) + ">" + std::to_string(cod);
  for (const auto& c : components) {
    k += "|g" + std::to_string(c.genus) + "w" + std::to_string(c.windows);
    for (const auto& w : c.words) {
      k += ":";
      for (const Label& l : w) k += (l.target ? "T" : "S") + std::to_string(l.index);
    }
  }
  return k;
}

int SurfaceComplex::new_component(int chi) {
  comp_chi_.push_back(chi);
  comp_alive_.push_back(1);
  return int(comp_chi_.size()) - 1;
}

int SurfaceComplex::new_circle(std::vector<int> ports, int comp) {
  circles_.push_back(std::move(ports));
  circle_comp_.push_back(comp);
  circle_alive_.push_back(1);
  return int(circles_.size()) - 1;
}

SurfaceComplex SurfaceComplex::generator(Generator g) {
  SurfaceComplex s;
  int a = gen_in(g), b = gen_out(g);
  s.nports_ = a + b;
  s.port_used_.assign(s.nports_, 0);
  for (int i = 0; i < a; ++i) s.in_.push_back(i);
  for (int j = 0; j < b; ++j) s.out_.push_back(a + j);
  int comp = s.new_component(1);
  // Boundary word with the surface on the left of the traversal, sources
  // read left to right. Single-letter conventions that this fixes:
  //   Mult (S1,S2,T1)  Comult (S1,T2,T1)  Unit (T1)  Counit (S1)  Zag (T1,T2)
  std::vector<int> word;
  switch (g) {
    case Generator::Mult: word = {0, 1, 2}; break;
    case Generator::Unit: word = {0}; break;
    case Generator::Comult: word = {0, 2, 1}; break;
    case Generator::Counit: word = {0}; break;
    case Generator::Zag: word = {0, 1}; break;
  }
  s.new_circle(std::move(word), comp);
  return s;
}

SurfaceComplex SurfaceComplex::strip() {
  SurfaceComplex s;
  s.nports_ = 2;
  s.port_used_.assign(2, 0);
  s.in_ = {0};
  s.out_ = {1};
  int comp = s.new_component(1);
  s.new_circle({0, 1}, comp);  // (S1, T1)
  return s;
}

void SurfaceComplex::offset_ids(int port_off, int circle_off, int comp_off) {
  for (auto& c : circles_)
    for (int& p : c) p += port_off;
  for (int& c : circle_comp_) c += comp_off;
  for (int& p : in_) p += port_off;
  for (int& p : out_) p += port_off;
  (void)circle_off;
}

int SurfaceComplex::circle_of(int port) const {
  for (size_t c = 0; c < circles_.size(); ++c) {
    if (!circle_alive_[c]) continue;
    for (int p : circles_[c])
      if (p == port) return int(c);
  }
  return -1;
}

void SurfaceComplex::glue(SurfaceComplex other, const std::vector<std::pair<int, int>>& pairing) {
  int port_off = nports_;
  int comp_off = int(comp_chi_.size());
  other.offset_ids(port_off, int(circles_.size()), comp_off);
  nports_ += other.nports_;
  port_used_.insert(port_used_.end(), other.port_used_.begin(), other.port_used_.end());
  circles_.insert(circles_.end(), other.circles_.begin(), other.circles_.end());
  circle_comp_.insert(circle_comp_.end(), other.circle_comp_.begin(), other.circle_comp_.end());
  circle_alive_.insert(circle_alive_.end(), other.circle_alive_.begin(), other.circle_alive_.end());
  comp_chi_.insert(comp_chi_.end(), other.comp_chi_.begin(), other.comp_chi_.end());
  comp_alive_.insert(comp_alive_.end(), other.comp_alive_.begin(), other.comp_alive_.end());
  in_.insert(in_.end(), other.in_.begin(), other.in_.end());
  out_.insert(out_.end(), other.out_.begin(), other.out_.end());

  for (auto [p, q] : pairing) sew(p, q + port_off);

  auto drop = [&](std::vector<int>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [&](int p) { return port_used_[p]; }), v.end());
  };
  drop(in_);
  drop(out_);
}

// Sews the marked intervals p and q: both arcs are removed and their
// circles spliced. chi drops by one per sewn pair.
void SurfaceComplex::sew(int p, int q) {
  if (p < 0 || p >= nports_ || q < 0 || q >= nports_) throw MissingPort(p < 0 || p >= nports_ ? p : q);
  if (port_used_[p]) throw PortReuse(p);
  if (port_used_[q]) throw PortReuse(q);
  port_used_[p] = port_used_[q] = 1;
  int cp = circle_of(p), cq = circle_of(q);
  if (cp < 0) throw MissingPort(p);
  if (cq < 0) throw MissingPort(q);
  const std::vector<int>& wp = circles_[cp];
  const std::vector<int>& wq = circles_[cq];
  auto chain_after = [](const std::vector<int>& w, int port) {
    size_t i = std::find(w.begin(), w.end(), port) - w.begin();
    std::vector<int> r;
    r.reserve(w.size() - 1);
    for (size_t k = 1; k < w.size(); ++k) r.push_back(w[(i + k) % w.size()]);
    return r;
  };
  int kp = circle_comp_[cp], kq = circle_comp_[cq];
  if (cp != cq) {
    std::vector<int> merged = chain_after(wp, p);
    std::vector<int> rest = chain_after(wq, q);
    merged.insert(merged.end(), rest.begin(), rest.end());
    circle_alive_[cp] = circle_alive_[cq] = 0;
    int comp;
    if (kp != kq) {
      comp = new_component(comp_chi_[kp] + comp_chi_[kq] - 1);
      comp_alive_[kp] = comp_alive_[kq] = 0;
      for (size_t c = 0; c < circles_.size(); ++c)
        if (circle_alive_[c] && (circle_comp_[c] == kp || circle_comp_[c] == kq))
          circle_comp_[c] = comp;
    } else {
      comp = kp;
      comp_chi_[kp] -= 1;
    }
    new_circle(std::move(merged), comp);
  } else {
    // Same circle: it splits in two at the sewn arcs.
    std::vector<int> w = wp;
    size_t ip = std::find(w.begin(), w.end(), p) - w.begin();
    size_t iq = std::find(w.begin(), w.end(), q) - w.begin();
    if (ip > iq) std::swap(ip, iq);
    std::vector<int> c1(w.begin() + ip + 1, w.begin() + iq);
    std::vector<int> c2(w.begin() + iq + 1, w.end());
    c2.insert(c2.end(), w.begin(), w.begin() + ip);
    circle_alive_[cp] = 0;
    comp_chi_[kp] -= 1;
    new_circle(std::move(c1), kp);
    new_circle(std::move(c2), kp);
  }
}

int SurfaceComplex::component_count() const {
  int n = 0;
  for (char a : comp_alive_) n += a;
  return n;
}

int SurfaceComplex::total_euler() const {
  int chi = 0;
  for (size_t k = 0; k < comp_chi_.size(); ++k)
    if (comp_alive_[k]) chi += comp_chi_[k];
  return chi;
}

namespace {

CycWord canonical_rotation(CycWord w) {
  if (w.size() <= 1) return w;
  CycWord best = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

}  // namespace

CobInvariant SurfaceComplex::read_invariant(const std::vector<int>& sources,
                                            const std::vector<int>& targets) const {
  std::map<int, Label> names;
  for (size_t i = 0; i < sources.size(); ++i) names[sources[i]] = Label{false, int(i) + 1};
  for (size_t j = 0; j < targets.size(); ++j) names[targets[j]] = Label{true, int(j) + 1};

  CobInvariant inv;
  inv.dom = int(sources.size());
  inv.cod = int(targets.size());
  std::map<int, ComponentKey> per_comp;
  std::map<int, int> circle_count;
  for (size_t c = 0; c < circles_.size(); ++c) {
    if (!circle_alive_[c]) continue;
    int k = circle_comp_[c];
    circle_count[k] += 1;
    auto& key = per_comp[k];
    if (circles_[c].empty()) {
      key.windows += 1;
      continue;
    }
    CycWord word;
    for (int p : circles_[c]) {
      auto it = names.find(p);
      if (it == names.end())
        throw std::logic_error("open port without a boundary name; interface not fully sewn");
      word.push_back(it->second);
    }
    key.words.push_back(canonical_rotation(std::move(word)));
  }
  for (auto& [k, key] : per_comp) {
    int chi = comp_chi_[k];
    int b = circle_count[k];
    int two_genus = 2 - chi - b;
    if (two_genus < 0 || two_genus % 2 != 0)
      throw std::logic_error("inconsistent Euler bookkeeping");
    key.genus = two_genus / 2;
    std::sort(key.words.begin(), key.words.end());
    inv.components.push_back(std::move(key));
  }
  // Components with no alive circle cannot occur: every sewing keeps b >= 1
  // until a component is closed, and a closed component keeps its windows.
  std::sort(inv.components.begin(), inv.components.end());
  return inv;
}

CobInvariant invariant(const Term& t) {
  Diagram d = to_diagram(t);
  SurfaceComplex s;
  std::vector<int> sources, pending;
  if (d.dom > 0) {
    s = SurfaceComplex::strip();
    sources.push_back(s.in_[0]);
    pending.push_back(s.out_[0]);
    for (int i = 1; i < d.dom; ++i) {
      SurfaceComplex st = SurfaceComplex::strip();
      int base = s.nports_;
      s.glue(std::move(st), {});
      sources.push_back(base + 0);
      pending.push_back(base + 1);
    }
  } else {
    // start from an empty complex: a zero-port placeholder
    s = SurfaceComplex();
  }
  for (const Slice& sl : d.slices) {
    SurfaceComplex gsurf = SurfaceComplex::generator(sl.gen);
    int a = gen_in(sl.gen), b = gen_out(sl.gen);
    int base = s.nports_;
    std::vector<std::pair<int, int>> pairing;
    for (int i = 0; i < a; ++i) pairing.push_back({pending[sl.offset + i], i});
    s.glue(std::move(gsurf), pairing);
    std::vector<int> outs;
    for (int j = 0; j < b; ++j) outs.push_back(base + a + j);
    pending.erase(pending.begin() + sl.offset, pending.begin() + sl.offset + a);
    pending.insert(pending.begin() + sl.offset, outs.begin(), outs.end());
  }
  CobInvariant inv = s.read_invariant(sources, pending);
  for (const auto& c : inv.components)
    if (c.genus != 0) throw NonPlanarInternal("component with genus " + std::to_string(c.genus));
  return inv;
}

bool cob_eq(const Term& a, const Term& b) {
  TypeInfo ta = typecheck(a), tb = typecheck(b);
  if (ta.dom != tb.dom) throw ArityMismatch("cob_eq.dom", ta.dom, tb.dom);
  if (ta.cod != tb.cod) throw ArityMismatch("cob_eq.cod", ta.cod, tb.cod);
  return invariant(a) == invariant(b);
}

}  // namespace frobtangle
