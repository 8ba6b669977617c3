#include <algorithm>
#include <optional>

#include "frobtangle/cobordism.hpp"
#include "frobtangle/diagram.hpp"

namespace frobtangle {

namespace {

struct Piece {
  std::vector<int> srcs;   // ascending source indices
  std::vector<int> tgts;   // ascending target indices
  int windows = 0;
  int id = 0;
  // source-side / target-side nesting
  int src_parent = -1;
  int tgt_parent = -1;
};

CycWord expected_word(const Piece& p) {
  CycWord w;
  for (int s : p.srcs) w.push_back({false, s});
  for (auto it = p.tgts.rbegin(); it != p.tgts.rend(); ++it) w.push_back({true, *it});
  return w;
}

CycWord min_rotation(CycWord w) {
  if (w.size() <= 1) return w;
  CycWord best = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

bool crossing(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) return false;
  int alo = a.front(), ahi = a.back(), blo = b.front(), bhi = b.back();
  bool overlap = !(ahi < blo || bhi < alo);
  if (!overlap) return false;
  bool a_in_b = blo < alo && ahi < bhi;
  bool b_in_a = alo < blo && bhi < ahi;
  return !(a_in_b || b_in_a);
}

// Tightest strictly containing interval wins; -1 for roots.
void build_forest(std::vector<Piece>& ps, bool on_targets) {
  auto set_of = [&](const Piece& p) -> const std::vector<int>& {
    return on_targets ? p.tgts : p.srcs;
  };
  for (auto& c : ps) {
    const auto& cs = set_of(c);
    if (cs.empty()) continue;
    int best = -1;
    for (const auto& p : ps) {
      if (p.id == c.id) continue;
      const auto& pset = set_of(p);
      if (pset.empty()) continue;
      if (crossing(cs, pset)) throw Unrealizable("crossing boundary attachments");
      if (pset.front() < cs.front() && cs.back() < pset.back()) {
        if (best < 0 || set_of(ps[best]).front() < pset.front()) best = p.id;
      }
    }
    (on_targets ? c.tgt_parent : c.src_parent) = best;
  }
}

struct Builder {
  std::vector<Slice> slices;
  // Active wire tags: source index (kind 0), root wire (kind 1, piece id),
  // target index (kind 2).
  struct Tag {
    int kind;
    int val;
  };
  std::vector<Tag> active;

  void emit(Generator g, int off) { slices.push_back({g, off}); }

  int find_src(int s) {
    for (size_t i = 0; i < active.size(); ++i)
      if (active[i].kind == 0 && active[i].val == s) return int(i);
    throw Unrealizable("source wire missing or already consumed");
  }
  int find_root(int id) {
    for (size_t i = 0; i < active.size(); ++i)
      if (active[i].kind == 1 && active[i].val == id) return int(i);
    throw Unrealizable("internal: root wire missing");
  }

  // Merge the piece's sources (must be contiguous) down to one wire at
  // their position; returns the position.
  int comb_sources(const Piece& p) {
    int pos = find_src(p.srcs.front());
    for (size_t k = 0; k < p.srcs.size(); ++k) {
      size_t i = pos + k;
      if (i >= active.size() || active[i].kind != 0 || active[i].val != p.srcs[k])
        throw Unrealizable("nested pieces do not tile the source gaps");
    }
    for (size_t k = 1; k < p.srcs.size(); ++k) emit(Generator::Mult, pos);
    active.erase(active.begin() + pos, active.begin() + pos + p.srcs.size());
    active.insert(active.begin() + pos, Tag{1, p.id});
    return pos;
  }

  void handles(int pos, int n) {
    for (int k = 0; k < n; ++k) {
      emit(Generator::Comult, pos);
      emit(Generator::Mult, pos);
    }
  }

  void cap(int pos) {
    emit(Generator::Counit, pos);
    active.erase(active.begin() + pos);
  }
};

}  // namespace

Term synthesize(const CobInvariant& inv) {
  // Decompose components into attachment data, validating shape.
  std::vector<Piece> ps;
  std::vector<char> seen_s(inv.dom + 1, 0), seen_t(inv.cod + 1, 0);
  for (const auto& comp : inv.components) {
    if (comp.genus != 0) throw Unrealizable("positive genus is not planar");
    if (comp.words.size() > 1)
      throw Unrealizable("marked intervals on two boundary circles of one component");
    Piece p;
    p.id = int(ps.size());
    p.windows = comp.windows;
    if (!comp.words.empty()) {
      for (const Label& l : comp.words[0]) {
        auto& seen = l.target ? seen_t : seen_s;
        int limit = l.target ? inv.cod : inv.dom;
        if (l.index < 1 || l.index > limit || seen[l.index])
          throw Unrealizable("boundary labels must cover each index exactly once");
        seen[l.index] = 1;
        (l.target ? p.tgts : p.srcs).push_back(l.index);
      }
      std::sort(p.srcs.begin(), p.srcs.end());
      std::sort(p.tgts.begin(), p.tgts.end());
      if (min_rotation(expected_word(p)) != min_rotation(comp.words[0]))
        throw Unrealizable("word is not a planar source-run/target-run cycle");
    } else if (comp.windows == 0) {
      throw Unrealizable("component with no boundary circles");
    }
    ps.push_back(std::move(p));
  }
  for (int i = 1; i <= inv.dom; ++i)
    if (!seen_s[i]) throw Unrealizable("missing source label");
  for (int j = 1; j <= inv.cod; ++j)
    if (!seen_t[j]) throw Unrealizable("missing target label");

  build_forest(ps, false);
  build_forest(ps, true);
  for (const auto& p : ps) {
    if (p.src_parent >= 0 && !p.tgts.empty())
      throw Unrealizable("piece nested below another cannot reach the top line");
    if (p.tgt_parent >= 0 && !p.srcs.empty())
      throw Unrealizable("piece nested above another cannot reach the bottom line");
  }

  // Root arrangement: source order and target order must agree.
  std::vector<int> src_roots, tgt_roots;
  for (const auto& p : ps) {
    if (!p.srcs.empty() && p.src_parent < 0) src_roots.push_back(p.id);
    if (!p.tgts.empty() && p.tgt_parent < 0) tgt_roots.push_back(p.id);
  }
  std::sort(src_roots.begin(), src_roots.end(),
            [&](int a, int b) { return ps[a].srcs.front() < ps[b].srcs.front(); });
  std::sort(tgt_roots.begin(), tgt_roots.end(),
            [&](int a, int b) { return ps[a].tgts.front() < ps[b].tgts.front(); });
  {
    std::vector<int> both_by_src, both_by_tgt;
    for (int id : src_roots)
      if (!ps[id].tgts.empty()) both_by_src.push_back(id);
    for (int id : tgt_roots)
      if (!ps[id].srcs.empty()) both_by_tgt.push_back(id);
    if (both_by_src != both_by_tgt)
      throw Unrealizable("pieces cross between the two boundary lines");
  }

  Builder b;
  for (int i = 1; i <= inv.dom; ++i) b.active.push_back({0, i});

  // Closed pieces first: they touch neither line.
  for (const auto& p : ps) {
    if (p.srcs.empty() && p.tgts.empty()) {
      b.emit(Generator::Unit, 0);
      b.active.insert(b.active.begin(), {1, p.id});
      b.handles(0, p.windows - 1);
      b.cap(0);
    }
  }

  // Source-side pockets, deepest first, then source roots.
  std::vector<std::vector<int>> src_children(ps.size());
  for (const auto& p : ps)
    if (p.src_parent >= 0) src_children[p.src_parent].push_back(p.id);
  auto consume_pocket = [&](auto&& self, int id) -> void {
    for (int c : src_children[id]) self(self, c);
    int pos = b.comb_sources(ps[id]);
    b.handles(pos, ps[id].windows);
    b.cap(pos);  // pockets never reach the top line
  };
  for (int id : src_roots) {
    for (int c : src_children[id]) consume_pocket(consume_pocket, c);
    int pos = b.comb_sources(ps[id]);
    b.handles(pos, ps[id].windows);
    if (ps[id].tgts.empty()) b.cap(pos);
  }

  // Target-only roots are born at their arranged position among the other
  // root wires (every source wire is consumed by now).
  for (int id : tgt_roots) {
    if (!ps[id].srcs.empty()) continue;
    int pos = 0;
    for (const auto& t : b.active) {
      if (t.kind != 1) throw Unrealizable("leftover source wire");
      if (!ps[t.val].tgts.empty() && ps[t.val].tgts.front() < ps[id].tgts.front()) ++pos;
    }
    b.emit(Generator::Unit, pos);
    b.active.insert(b.active.begin() + pos, {1, id});
    b.handles(pos, ps[id].windows);
  }

  // Split a root wire into its targets (a comb of Comult).
  auto split_targets = [&](int id) {
    int pos = b.find_root(id);
    const auto& ts = ps[id].tgts;
    for (size_t k = 0; k + 1 < ts.size(); ++k) b.emit(Generator::Comult, pos);
    b.active.erase(b.active.begin() + pos);
    for (size_t k = 0; k < ts.size(); ++k)
      b.active.insert(b.active.begin() + pos + k, {2, ts[k]});
  };
  for (int id : tgt_roots) split_targets(id);

  // Target-side pockets, outermost first (parents create the gaps their
  // children are born into).
  std::vector<int> tgt_pockets;
  for (const auto& p : ps)
    if (p.tgt_parent >= 0) tgt_pockets.push_back(p.id);
  auto depth = [&](int id) {
    int d = 0;
    for (int x = ps[id].tgt_parent; x >= 0; x = ps[x].tgt_parent) ++d;
    return d;
  };
  std::sort(tgt_pockets.begin(), tgt_pockets.end(), [&](int a, int c) {
    int da = depth(a), dc = depth(c);
    if (da != dc) return da < dc;
    return ps[a].tgts.front() < ps[c].tgts.front();
  });
  for (int id : tgt_pockets) {
    int pos = 0;
    for (const auto& t : b.active)
      if (t.kind == 2 && t.val < ps[id].tgts.front()) ++pos;
    b.emit(Generator::Unit, pos);
    b.active.insert(b.active.begin() + pos, {1, id});
    b.handles(pos, ps[id].windows);
    split_targets(id);
  }

  for (size_t i = 0; i < b.active.size(); ++i)
    if (b.active[i].kind != 2 || b.active[i].val != int(i) + 1)
      throw Unrealizable("target wires do not land in order");
  if (int(b.active.size()) != inv.cod) throw Unrealizable("target count mismatch");

  Diagram d;
  d.dom = inv.dom;
  d.cod = inv.cod;
  d.slices = std::move(b.slices);
  Term t = term_of(d);
  if (invariant(t) != inv) throw Unrealizable("no planar term realizes this invariant");
  return t;
}

}  // namespace frobtangle
