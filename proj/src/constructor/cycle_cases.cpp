#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "builder.hpp"

namespace bpham::detail {

namespace {

std::string idx(int i) { return std::to_string(i); }

int first_outside(int m, int h) {
  for (int i : subgraph_indices(m)) {
    if (std::abs(i) != std::abs(h)) return i;
  }
  return 0;
}

Path slice(const Path& p, std::size_t from, std::size_t to) {
  return Path(p.begin() + static_cast<std::ptrdiff_t>(from),
              p.begin() + static_cast<std::ptrdiff_t>(to));
}

// Connection between two path vertices x, y through their out-neighbours;
// `inner` runs from n(x) to n(y) and is empty for a direct edge n(x) = y.
struct Link {
  SP x;
  SP y;
  Path inner;

  Path from(const SP& start) const { return start == x ? inner : reversed(inner); }
};

}  // namespace

Path Builder::cycle_case1(int m, int h, const Obstacles& obs) {
  const int t = first_outside(m, h);
  Scope s(*this, "L18/1", "H=" + idx(h) + " T=" + idx(t));
  const auto all = subgraph_indices(m);
  int tries = 0;
  for (const auto& u : cross_edge_sources(m, h, t)) {
    const SP y = nb(u);
    if (!obs.usable(u, y)) continue;
    if (++tries > kScanAttempts) break;
    Path out;
    if (attempt([&] { out = chain(m, all, u, y, obs); })) return out;
  }
  throw Stuck("L18/1: no usable cross edge");
}

Path Builder::cycle_case2(int m, int h, const Obstacles& obs) {
  const auto all = subgraph_indices(m);
  int i = 0;
  for (int j : all) {
    if (j != h && obs.count_in(j) > 0) {
      i = j;
      break;
    }
  }
  if (i == 0) i = first_outside(m, h);

  if (i != -h) {
    Scope sc(*this, "L18/2.1", "H=" + idx(h) + " i=" + idx(i));
    const Path c1 = sub_cycle(m, h, obs);
    const Path ci = sub_cycle(m, i, obs);
    const CycleView v1(c1);
    const CycleView vi(ci);
    const auto rest = minus(all, {h, i});
    int tries = 0;
    for (const auto& s : cross_edge_sources(m, h, i)) {
      const SP ns = nb(s);
      if (!obs.usable(s, ns)) continue;
      for (const auto& t : v1.nbrs(s)) {
        const SP nt = nb(t);
        if (!obs.usable(t, nt) || !contains(rest, sub(nt))) continue;
        for (const auto& s1 : vi.nbrs(ns)) {
          const SP ns1 = nb(s1);
          if (!obs.usable(s1, ns1) || !contains(rest, sub(ns1))) continue;
          assert_distinct(sub(nt), sub(ns1), "L18/2.1");
          if (++tries > kScanAttempts) throw Stuck("L18/2.1: scan limit");
          Path out;
          if (attempt([&] {
                const Path e = chain(m, rest, ns1, nt, obs);
                out = vi.open_at(ns, s1);
                append(out, e);
                append(out, v1.open_at(t, s));
              })) {
            return out;
          }
        }
      }
    }
    throw Stuck("L18/2.1: no usable splice");
  }

  Scope sc(*this, "L18/2.2", "H=" + idx(h));
  const Path c1 = sub_cycle(m, h, obs);
  const Path cb = sub_cycle(m, -h, obs);
  const CycleView v1(c1);
  const CycleView vb(cb);
  Path order1 = c1;
  std::sort(order1.begin(), order1.end());
  int tries = 0;
  for (const auto& s : order1) {
    const SP ns = nb(s);
    if (!obs.usable(s, ns)) continue;
    const int t_sub = sub(ns);
    const auto rest = minus(all, {h, -h, t_sub});
    for (const auto& z : cross_edge_sources(m, -h, t_sub)) {
      const SP nz = nb(z);
      if (!obs.usable(z, nz)) continue;
      for (const auto& t : v1.nbrs(s)) {
        const SP nt = nb(t);
        if (!obs.usable(t, nt) || !contains(rest, sub(nt))) continue;
        for (const auto& w : vb.nbrs(z)) {
          const SP nw = nb(w);
          if (!obs.usable(w, nw) || !contains(rest, sub(nw)) || sub(nw) == sub(nt)) continue;
          if (++tries > kScanAttempts) throw Stuck("L18/2.2: scan limit");
          Path out;
          if (attempt([&] {
                out = sub_path(m, t_sub, ns, nz, obs);
                append(out, vb.open_at(z, w));
                append(out, chain(m, rest, nw, nt, obs));
                append(out, v1.open_at(t, s));
              })) {
            return out;
          }
        }
      }
    }
  }
  throw Stuck("L18/2.2: no usable splice");
}

Path Builder::cycle_case3(int m, int h, const Obstacles& obs) {
  for (std::size_t k = 0; k < obs.pairs.size(); ++k) {
    const auto [a1, b1] = obs.pairs[k];
    if (sub(a1) != h || sub(b1) != h) continue;
    Path out;
    if (attempt([&] {
          Scope s(*this, "L18/3", "H=" + idx(h) + " pair=" + vtext(a1) + "|" + vtext(b1));
          const Path c1 = sub_cycle(m, h, obs.without_pair(k));
          out = cycle_case3_pair(m, h, obs, c1, a1, b1);
        })) {
      return out;
    }
  }
  return cycle_case3_edges(m, h, obs);
}

Path Builder::cycle_case3_edges(int m, int h, const Obstacles& obs) {
  const auto outer = minus(subgraph_indices(m), {h});
  for (std::size_t k = 0; k < obs.edges.size(); ++k) {
    const auto [a, b] = obs.edges[k];
    if (sub(a) != h || sub(b) != h) continue;
    Path out;
    const bool ok = attempt([&] {
      const Path c1 = sub_cycle(m, h, obs.without_edge(k));
      const CycleView v(c1);
      if (v.succ(a) == b || v.pred(a) == b) {
        Scope s(*this, "L18/3E", "on-cycle " + vtext(a) + "|" + vtext(b));
        const SP na = nb(a);
        const SP nbb = nb(b);
        if (!obs.usable(a, na) || !obs.usable(b, nbb)) throw Stuck("L18/3E: blocked out-edge");
        assert_distinct(sub(na), sub(nbb), "L18/3E");
        out = v.open_at(b, a);
        append(out, chain(m, outer, na, nbb, obs));
        return;
      }
      Scope s(*this, "L18/3E", "off-cycle " + vtext(a) + "|" + vtext(b));
      int tries = 0;
      for (std::size_t i = 0; i < c1.size(); ++i) {
        const SP& x = c1[i];
        const SP& y = c1[(i + 1) % c1.size()];
        const SP nx = nb(x);
        const SP ny = nb(y);
        if (!obs.usable(x, nx) || !obs.usable(y, ny)) continue;
        assert_distinct(sub(nx), sub(ny), "L18/3E");
        if (++tries > kScanAttempts) break;
        if (attempt([&] {
              Path o = v.open_at(y, x);
              append(o, chain(m, outer, nx, ny, obs));
              out = std::move(o);
            })) {
          return;
        }
      }
      throw Stuck("L18/3E: no usable cycle edge");
    });
    if (ok) return out;
  }
  throw Stuck("L18/3: no fault element admits a splice");
}

Path Builder::cycle_case3_pair(int m, int h, const Obstacles& obs, const Path& c1, const SP& a1,
                               const SP& b1) {
  const CycleView v(c1);
  if (v.succ(a1) == b1 || v.pred(a1) == b1) {
    const int dir = v.succ(a1) == b1 ? +1 : -1;
    const SP x1 = dir > 0 ? v.pred(a1) : v.succ(a1);
    const SP y1 = dir > 0 ? v.succ(b1) : v.pred(b1);
    const SP nx1 = nb(x1);
    const SP ny1 = nb(y1);
    if (!obs.usable(x1, nx1) || !obs.usable(y1, ny1)) throw Stuck("L18/3.1: blocked out-edge");
    Scope s(*this, "L18/3.1", "x1=" + vtext(x1) + " y1=" + vtext(y1));
    Path out = ext(m, minus(subgraph_indices(m), {h}), nx1, ny1, obs);
    append(out, v.walk(y1, x1, dir));
    return out;
  }
  const SP x1 = v.pred(a1);
  const SP x2 = v.succ(a1);
  const SP y2 = v.pred(b1);
  const SP y1 = v.succ(b1);
  return cycle_case32(m, h, obs, x1, x2, y1, y2, v.walk(x2, y2, +1), v.walk(y1, x1, +1));
}

// The cycle reads x1, a1, x2, A, y2, b1, y1, B with A = x2..y2 and
// B = y1..x1; after removing a1, b1 the four ends leave through their
// out-neighbours in subgraphs X1, X2, Y1, Y2.
Path Builder::cycle_case32(int m, int h, const Obstacles& obs, SP x1, SP x2, SP y1, SP y2,
                           Path a, Path b) {
  for (const SP* p : {&x1, &x2, &y1, &y2}) {
    if (!obs.usable(*p, nb(*p))) throw Stuck("L18/3.2: blocked out-edge");
  }
  const auto all = subgraph_indices(m);
  int sx1 = sub(nb(x1));
  int sx2 = sub(nb(x2));
  int sy1 = sub(nb(y1));
  int sy2 = sub(nb(y2));
  assert_distinct(sx1, sx2, "L18/3.2");
  assert_distinct(sy1, sy2, "L18/3.2");
  const std::size_t card = std::set<int>{sx1, sx2, sy1, sy2}.size();

  if (card == 4) {
    const bool shape_a = sx1 != -sy2;
    Scope s(*this, "L18/3.2.1", shape_a ? "shape=a" : "shape=b");
    const int s2 = sx1;
    const int s3 = shape_a ? sy2 : sx2;
    const SP end3 = shape_a ? nb(y2) : nb(x2);
    const auto rest = minus(all, {h, s2, s3});
    int tries = 0;
    for (const auto& u : cross_edge_sources(m, s2, s3)) {
      const SP nu = nb(u);
      if (!obs.usable(u, nu) || u == nb(x1) || nu == end3) continue;
      if (++tries > kScanAttempts) break;
      Path out;
      if (attempt([&] {
            out = sub_path(m, s2, nb(x1), u, obs);
            append(out, sub_path(m, s3, nu, end3, obs));
            if (shape_a) {
              append(out, reversed(a));
              append(out, chain(m, rest, nb(x2), nb(y1), obs));
            } else {
              append(out, a);
              append(out, chain(m, rest, nb(y2), nb(y1), obs));
            }
            append(out, b);
          })) {
        return out;
      }
    }
    throw Stuck("L18/3.2.1: no usable junction");
  }

  if (card == 3 && (sx1 == sy2 || sx2 == sy1)) {
    Scope s(*this, "L18/3.2.2.1", sx1 == sy2 ? "X1=Y2" : "X2=Y1");
    Path out;
    if (sx1 == sy2) {
      out = sub_path(m, sx1, nb(x1), nb(y2), obs);
      append(out, reversed(a));
      append(out, chain(m, minus(all, {h, sx1}), nb(x2), nb(y1), obs));
    } else {
      out = chain(m, minus(all, {h, sx2}), nb(x1), nb(y2), obs);
      append(out, reversed(a));
      append(out, sub_path(m, sx2, nb(x2), nb(y1), obs));
    }
    append(out, b);
    return out;
  }

  if (card == 3) {
    if (sx2 == sy2) {
      // Mirror the labelling so that X1 = Y1.
      std::swap(x1, x2);
      std::swap(y1, y2);
      Path na = reversed(b);
      b = reversed(a);
      a = std::move(na);
      std::swap(sx1, sx2);
      std::swap(sy1, sy2);
    }
    const int s_sub = sx1;
    Scope s(*this, "L18/3.2.2.2", "S=" + idx(s_sub));
    const auto r = minus(all, {h, s_sub});
    const Path q = sub_path(m, s_sub, nb(x1), nb(y1), obs);
    int tries = 0;
    for (std::size_t i = q.size() - 1; i-- > 0;) {
      const SP& p = q[i];
      const SP& qq = q[i + 1];
      const SP np = nb(p);
      const SP nq = nb(qq);
      if (!obs.usable(p, np) || !obs.usable(qq, nq)) continue;
      const int sp = sub(np);
      const int sq = sub(nq);
      assert_distinct(sp, sq, "L18/3.2.2.2");
      // 0: p-x2 inside X2; 1: q-y2 inside Y2; 2: p-y2 inside Y2; 3: q-x2 inside X2.
      for (int variant = 0; variant < 4; ++variant) {
        const bool alpha = variant < 2;
        const int single = (variant == 0 || variant == 3) ? sx2 : sy2;
        const bool single_at_p = variant == 0 || variant == 2;
        const int other_end = single_at_p ? sq : sp;
        if ((single_at_p ? sp : sq) != single) continue;
        const auto r2 = minus(r, {single});
        if (!contains(r2, other_end)) continue;
        if (++tries > 4 * kScanAttempts) throw Stuck("L18/3.2.2.2: scan limit");
        Path out;
        if (attempt([&] {
              // alpha pairs p with x2 and q with y2; beta pairs p with y2 and q with x2.
              const SP p_end = alpha ? nb(x2) : nb(y2);
              const SP q_end = alpha ? nb(y2) : nb(x2);
              Path e1;
              Path e2;
              if (single_at_p) {
                e1 = sub_path(m, single, np, p_end, obs);
                e2 = ext(m, r2, q_end, nq, obs);
              } else {
                e2 = sub_path(m, single, q_end, nq, obs);
                e1 = ext(m, r2, np, p_end, obs);
              }
              out = slice(q, 0, i + 1);
              append(out, e1);
              append(out, alpha ? a : reversed(a));
              append(out, e2);
              append(out, slice(q, i + 1, q.size()));
              append(out, b);
            })) {
          return out;
        }
      }
    }
    throw Stuck("L18/3.2.2.2: no usable split edge");
  }

  if (sx1 == sy2) {
    Scope s(*this, "L18/3.2.3.1", "I=[n]\\{1,2} X1=" + idx(sx1) + " X2=" + idx(sx2));
    Path out = sub_path(m, sx1, nb(x1), nb(y2), obs);
    append(out, reversed(a));
    append(out, loop(m, minus(all, {h, sx1}), nb(x2), nb(y1), obs));
    append(out, b);
    return out;
  }

  // X1 = Y1 = S and X2 = Y2 = S'.
  const int s1 = sx1;
  const int s2 = sx2;
  const bool bar = s2 == -s1;
  Scope s(*this, "L18/3.2.3.2", bar ? "bar" : "direct");
  const Path q2 = sub_path(m, s1, nb(x1), nb(y1), obs);
  const Path q3 = sub_path(m, s2, nb(x2), nb(y2), obs);
  const Positions pos3(q3);
  std::map<int, std::vector<std::size_t>> by_out;
  for (std::size_t j = 0; j < q3.size(); ++j) by_out[sub(nb(q3[j]))].push_back(j);

  // Q2 split at (p, q) = q2[i2], q2[i2+1]; Q3 split at q3[i3], q3[i3+1].
  auto assemble = [&](std::size_t i2, std::size_t i3, const Link& l1, const Link& l2) {
    const SP& p = q2[i2];
    const SP& pp = q3[i3];
    const Link& lp = (l1.x == p || l1.y == p) ? l1 : l2;
    const Link& lq = &lp == &l1 ? l2 : l1;
    const bool straight = lp.x == pp || lp.y == pp;
    Path out = slice(q2, 0, i2 + 1);
    append(out, lp.from(p));
    if (straight) {
      append(out, reversed(slice(q3, 0, i3 + 1)));
      append(out, a);
      append(out, reversed(slice(q3, i3 + 1, q3.size())));
      append(out, lq.from(q3[i3 + 1]));
    } else {
      append(out, slice(q3, i3 + 1, q3.size()));
      append(out, reversed(a));
      append(out, slice(q3, 0, i3 + 1));
      append(out, lq.from(pp));
    }
    append(out, slice(q2, i2 + 1, q2.size()));
    append(out, b);
    return out;
  };

  int tries = 0;
  for (std::size_t i2 = 0; i2 + 1 < q2.size(); ++i2) {
    for (int side = 0; side < 2; ++side) {
      const SP& e = q2[i2 + static_cast<std::size_t>(side)];
      const SP& f = q2[i2 + 1 - static_cast<std::size_t>(side)];
      const SP ne = nb(e);
      const SP nf = nb(f);
      if (!obs.usable(e, ne) || !obs.usable(f, nf)) continue;
      const int t_sub = sub(ne);
      if (!bar) {
        if (t_sub != s2) continue;
        const auto rest = minus(all, {h, s1, s2});
        const int j = pos3.at(ne);
        if (j < 0) continue;
        for (int g_idx : {j - 1, j + 1}) {
          if (g_idx < 0 || g_idx >= static_cast<int>(q3.size())) continue;
          const SP& g = q3[static_cast<std::size_t>(g_idx)];
          const SP ng = nb(g);
          if (!obs.usable(g, ng) || !contains(rest, sub(nf)) || !contains(rest, sub(ng)) ||
              sub(nf) == sub(ng)) {
            continue;
          }
          if (++tries > 4 * kScanAttempts) throw Stuck("L18/3.2.3.2: scan limit");
          Path out;
          if (attempt([&] {
                const Link l1{e, ne, {}};
                const Link l2{f, g, chain(m, rest, nf, ng, obs)};
                out = assemble(i2, static_cast<std::size_t>(std::min(j, g_idx)), l1, l2);
              })) {
            return out;
          }
        }
        continue;
      }
      if (std::abs(t_sub) == std::abs(h) || std::abs(t_sub) == std::abs(s1)) continue;
      const auto rest = minus(all, {h, s1, s2, t_sub});
      const auto hit = by_out.find(t_sub);
      if (hit == by_out.end()) continue;
      for (std::size_t j : hit->second) {
        const SP& r = q3[j];
        const SP nr = nb(r);
        if (!obs.usable(r, nr)) continue;
        for (int g_idx : {static_cast<int>(j) - 1, static_cast<int>(j) + 1}) {
          if (g_idx < 0 || g_idx >= static_cast<int>(q3.size())) continue;
          const SP& g = q3[static_cast<std::size_t>(g_idx)];
          const SP ng = nb(g);
          if (!obs.usable(g, ng) || !contains(rest, sub(nf)) || !contains(rest, sub(ng)) ||
              sub(nf) == sub(ng)) {
            continue;
          }
          if (++tries > 4 * kScanAttempts) throw Stuck("L18/3.2.3.2: scan limit");
          Path out;
          if (attempt([&] {
                const Link l1{e, r, sub_path(m, t_sub, ne, nr, obs)};
                const Link l2{f, g, chain(m, rest, nf, ng, obs)};
                out = assemble(i2, static_cast<std::size_t>(std::min(static_cast<int>(j), g_idx)),
                               l1, l2);
              })) {
            return out;
          }
        }
      }
    }
  }
  throw Stuck("L18/3.2.3.2: no usable split pair");
}

}  // namespace bpham::detail
