#include <set>

#include "builder.hpp"

namespace bpham::detail {

namespace {

Path head(const Path& p, std::size_t n) {
  return Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
}

Path tail(const Path& p, std::size_t from) {
  return Path(p.begin() + static_cast<std::ptrdiff_t>(from), p.end());
}

}  // namespace

Path Builder::path_case1(int m, const SP& u, const SP& v, const Obstacles& obs) {
  const auto all = subgraph_indices(m);
  const bool same = sub(u) == sub(v);
  Scope s(*this, "L19/1", same ? "loop" : "chain");
  return same ? loop(m, all, u, v, obs) : chain(m, all, u, v, obs);
}

Path Builder::path_case2(int m, int h, const SP& u, const SP& v, const Obstacles& obs) {
  const auto all = subgraph_indices(m);
  const int j1 = sub(u);
  const int j2 = sub(v);
  const std::size_t card = std::set<int>{h, j1, j2}.size();

  if (card == 3) {
    if (j1 == -h) return reversed(path_case2(m, h, v, u, obs));
    Scope sc(*this, "L19/2.1", "H=" + std::to_string(h) + " j1=" + std::to_string(j1));
    const Path c1 = sub_cycle(m, h, obs);
    const CycleView v1(c1);
    const auto rest = minus(all, {h, j1});
    int tries = 0;
    for (const auto& s : cross_edge_sources(m, h, j1)) {
      const SP ns = nb(s);
      if (!obs.usable(s, ns) || ns == u) continue;
      for (const auto& s1 : v1.nbrs(s)) {
        const SP ns1 = nb(s1);
        if (!obs.usable(s1, ns1) || ns1 == v) continue;
        assert_distinct(sub(ns1), j1, "L19/2.1");
        if (++tries > kScanAttempts) throw Stuck("L19/2.1: scan limit");
        Path out;
        if (attempt([&] {
              out = sub_path(m, j1, u, ns, obs);
              append(out, v1.open_at(s, s1));
              append(out, ext(m, rest, ns1, v, obs));
            })) {
          return out;
        }
      }
    }
    throw Stuck("L19/2.1: no usable splice");
  }

  if (card == 2 && (j1 == h || j2 == h)) {
    if (j2 == h) return reversed(path_case2(m, h, v, u, obs));
    Scope sc(*this, "L19/2.2", "endpoint in H");
    const Path c1 = sub_cycle(m, h, obs);
    const CycleView v1(c1);
    for (const auto& u1 : v1.nbrs(u)) {
      const SP nu1 = nb(u1);
      if (!obs.usable(u1, nu1) || nu1 == v) continue;
      Path out;
      if (attempt([&] {
            out = v1.open_at(u, u1);
            append(out, ext(m, minus(all, {h}), nu1, v, obs));
          })) {
        return out;
      }
    }
    throw Stuck("L19/2.2: no usable neighbour of u");
  }

  if (card == 2 && j1 != -h) {
    Scope sc(*this, "L19/2.2", "both in " + std::to_string(j1));
    const Path c1 = sub_cycle(m, h, obs);
    const CycleView v1(c1);
    const Path p = sub_path(m, j1, u, v, obs);
    const auto rest = minus(all, {h, j1});
    int tries = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const SP& s = p[i + static_cast<std::size_t>(side)];
        const SP& t = p[i + 1 - static_cast<std::size_t>(side)];
        const SP ns = nb(s);
        const SP nt = nb(t);
        if (sub(ns) != h || !obs.usable(s, ns) || !obs.usable(t, nt)) continue;
        if (!contains(rest, sub(nt))) continue;
        for (const auto& z : v1.nbrs(ns)) {
          const SP nz = nb(z);
          if (!obs.usable(z, nz) || !contains(rest, sub(nz))) continue;
          assert_distinct(sub(nz), sub(nt), "L19/2.2");
          if (++tries > kScanAttempts) throw Stuck("L19/2.2: scan limit");
          Path out;
          if (attempt([&] {
                out = head(p, i + 1);
                if (side == 0) {
                  append(out, v1.open_at(ns, z));
                  append(out, chain(m, rest, nz, nt, obs));
                } else {
                  append(out, chain(m, rest, nt, nz, obs));
                  append(out, v1.open_at(z, ns));
                }
                append(out, tail(p, i + 1));
              })) {
            return out;
          }
        }
      }
    }
    throw Stuck("L19/2.2: no usable edge on P[u,v]");
  }

  if (card == 2) {
    Scope sc(*this, "L19/2.2", "both in complement");
    const Path c1 = sub_cycle(m, h, obs);
    const CycleView v1(c1);
    const Path p = sub_path(m, -h, u, v, obs);
    int tries = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const SP& s = p[i + static_cast<std::size_t>(side)];
        const SP& t = p[i + 1 - static_cast<std::size_t>(side)];
        const SP ns = nb(s);
        const SP nt = nb(t);
        if (!obs.usable(s, ns) || !obs.usable(t, nt)) continue;
        const int t_sub = sub(ns);
        const auto rest = minus(all, {h, -h, t_sub});
        if (!contains(rest, sub(nt))) continue;
        for (const auto& z : cross_edge_sources(m, h, t_sub)) {
          const SP nz = nb(z);
          if (!obs.usable(z, nz) || nz == ns) continue;
          for (const auto& w : v1.nbrs(z)) {
            const SP nw = nb(w);
            if (!obs.usable(w, nw) || !contains(rest, sub(nw)) || sub(nw) == sub(nt)) continue;
            if (++tries > kScanAttempts) throw Stuck("L19/2.2: scan limit");
            Path out;
            if (attempt([&] {
                  out = head(p, i + 1);
                  if (side == 0) {
                    append(out, sub_path(m, t_sub, ns, nz, obs));
                    append(out, v1.open_at(z, w));
                    append(out, chain(m, rest, nw, nt, obs));
                  } else {
                    append(out, chain(m, rest, nt, nw, obs));
                    append(out, v1.open_at(w, z));
                    append(out, sub_path(m, t_sub, nz, ns, obs));
                  }
                  append(out, tail(p, i + 1));
                })) {
              return out;
            }
          }
        }
      }
    }
    throw Stuck("L19/2.2: no usable double splice");
  }

  const Path c1 = sub_cycle(m, h, obs);
  const CycleView v1(c1);
  const auto outer = minus(all, {h});
  if (v1.succ(u) == v || v1.pred(u) == v) {
    Scope sc(*this, "L19/2.3.1", "");
    const Path arc = v1.open_at(u, v);
    int tries = 0;
    for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
      const SP ns = nb(arc[i]);
      const SP nt = nb(arc[i + 1]);
      if (!obs.usable(arc[i], ns) || !obs.usable(arc[i + 1], nt)) continue;
      assert_distinct(sub(ns), sub(nt), "L19/2.3.1");
      if (++tries > kScanAttempts) break;
      Path out;
      if (attempt([&] {
            out = head(arc, i + 1);
            append(out, chain(m, outer, ns, nt, obs));
            append(out, tail(arc, i + 1));
          })) {
        return out;
      }
    }
    throw Stuck("L19/2.3.1: no usable cycle edge");
  }

  Scope sc(*this, "L19/2.3.2", "");
  for (int dir : {+1, -1}) {
    const Path alpha = v1.walk(u, v, dir);
    const Path beta = v1.walk(v, u, dir);
    const SP& v1x = alpha[alpha.size() - 2];
    const SP& u1x = beta[beta.size() - 2];
    const SP nv1 = nb(v1x);
    const SP nu1 = nb(u1x);
    if (!obs.usable(v1x, nv1) || !obs.usable(u1x, nu1)) continue;
    Path out;
    if (attempt([&] {
          out = head(alpha, alpha.size() - 1);
          append(out, ext(m, outer, nv1, nu1, obs));
          append(out, reversed(head(beta, beta.size() - 1)));
        })) {
      return out;
    }
  }
  throw Stuck("L19/2.3.2: both arcs blocked");
}

}  // namespace bpham::detail
