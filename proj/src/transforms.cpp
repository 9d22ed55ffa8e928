#include "abc/transforms.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "abc/analytic.hpp"
#include "abc/canonical.hpp"
#include "abc/index.hpp"

namespace abc {

const char* to_string(TransformId id) {
  switch (id) {
    case TransformId::Switch: return "SWITCH";
    case TransformId::T: return "T";
    case TransformId::T1: return "T1";
    case TransformId::T2: return "T2";
    case TransformId::T3: return "T3";
    case TransformId::T41: return "T41";
    case TransformId::T42: return "T42";
    case TransformId::T5: return "T5";
    case TransformId::T6: return "T6";
    case TransformId::T7: return "T7";
  }
  return "?";
}

std::optional<TransformId> transform_from_string(std::string_view s) {
  for (TransformId id :
       {TransformId::Switch, TransformId::T, TransformId::T1, TransformId::T2,
        TransformId::T3, TransformId::T41, TransformId::T42, TransformId::T5,
        TransformId::T6, TransformId::T7})
    if (s == to_string(id)) return id;
  return std::nullopt;
}

const char* to_string(Relationship rel) {
  switch (rel) {
    case Relationship::AllDistinct: return "all_distinct";
    case Relationship::SharedParent: return "shared_parent";
    case Relationship::ParentChild: return "parent_child";
    case Relationship::ParentChildRoot: return "parent_child_root";
  }
  return "?";
}

namespace {

// Edge-set editor; freeze() re-validates treeness.
struct Surgeon {
  int n;
  std::set<Edge> es;

  explicit Surgeon(const Tree& t) : n(t.size()) {
    for (const Edge& e : t.edges()) es.insert(e);
  }
  static Edge key(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
  }
  void cut(int a, int b) {
    auto it = es.find(key(a, b));
    if (it == es.end()) throw std::logic_error("surgery: cutting absent edge");
    es.erase(it);
  }
  void link(int a, int b) {
    if (a == b || !es.insert(key(a, b)).second)
      throw std::logic_error("surgery: adding present edge");
  }
  Tree freeze() const {
    return Tree::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
  }
};

std::vector<int> bfs_parents(const Tree& t, int root) {
  std::vector<int> par(t.size(), -2);
  std::queue<int> q;
  par[root] = -1;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v))
      if (par[w] == -2) {
        par[w] = v;
        q.push(w);
      }
  }
  return par;
}

std::vector<std::vector<int>> children_lists(const Tree& t,
                                             const std::vector<int>& par) {
  std::vector<std::vector<int>> ch(t.size());
  for (int v = 0; v < t.size(); ++v)
    if (par[v] >= 0) ch[par[v]].push_back(v);
  return ch;
}

// A hanging 2-path below c (relative to the rooting), if c is one.
std::optional<ArmRef> arm_at(const Tree& t,
                             const std::vector<std::vector<int>>& ch, int c) {
  if (t.degree(c) != 2 || ch[c].size() != 1) return std::nullopt;
  int tip = ch[c][0];
  if (t.degree(tip) != 1) return std::nullopt;
  return ArmRef{c, tip};
}

double F(int x, int y) { return edge_contribution(x, y); }

// Degree gained by u and resulting degree of v, per case.
void case_shape(const TransformCase& c, int& k, int& v_after) {
  switch (c.id) {
    case TransformId::T1: k = 4; v_after = 4; break;
    case TransformId::T2: k = 3; v_after = c.dv - 2; break;
    case TransformId::T3: k = 2; v_after = c.dv - 1; break;
    case TransformId::T41: k = 1; v_after = c.dv; break;
    case TransformId::T42: k = 2; v_after = 4; break;
    case TransformId::T5: k = 1; v_after = c.dv - 1; break;
    case TransformId::T6: k = 1; v_after = c.dv - 1; break;
    case TransformId::T7:
      k = c.dv - c.n1 - 1;
      v_after = c.n1 + 2;
      break;
    default:
      throw std::logic_error("case_shape: not a case transform");
  }
}

// Closed-form index change. With stale_parent, the reweighted (u,v) edge
// term keeps the original degree of u (only meaningful when v is a child
// of u); that variant is an upper bound on the true change.
double case_formula(const Tree& t, const TransformCase& c, bool stale_parent) {
  int k = 0, v_after = 0;
  case_shape(c, k, v_after);
  const int du = c.du, dv = c.dv;
  double s = 0.0;
  for (int xv : c.x) s += -F(t.degree(xv), du) + F(t.degree(xv), du + k);

  bool child_rel = c.rel == Relationship::ParentChild ||
                   c.rel == Relationship::ParentChildRoot;
  double vp = 0.0;
  if (c.id != TransformId::T41) {
    if (child_rel) {
      vp = stale_parent ? -F(du, dv) + F(du, v_after)
                        : -F(du, dv) + F(du + k, v_after);
    } else {
      int dvp = t.degree(c.v_p);
      vp = -F(dvp, dv) + F(dvp, v_after);
    }
  }

  switch (c.id) {
    case TransformId::T1:
      s += -F(5, du) + F(4, du + 4) + 3 * (-F(3, 7) + F(4, du + 4)) +
           (-F(3, 7) + F(3, du + 4)) + vp + 2 * (-F(3, 7) + F(2, 4));
      break;
    case TransformId::T2:
      s += -F(5, du) + F(4, du + 3) + 3 * (-F(3, dv) + F(4, du + 3)) + vp +
           2 * (-F(3, dv) + F(2, 4));
      break;
    case TransformId::T3:
      s += 2 * (-F(3, dv) + F(4, du + 2)) + vp + 2 * (-F(3, dv) + F(2, 4));
      break;
    case TransformId::T41:
      s += -F(3, dv) + F(5, du + 1) + 2 * (-F(3, dv) + F(2, dv));
      break;
    case TransformId::T42:
      s += -F(5, du) + F(4, du + 2) + 2 * (-F(3, 7) + F(4, du + 2)) + vp +
           (-F(3, 7) + F(4, 3));
      break;
    case TransformId::T5:
      s += -F(5, du) + F(4, du + 1) + (-F(3, dv) + F(4, 3)) +
           (-F(3, dv) + F(4, du + 1)) + vp;
      break;
    case TransformId::T6:
      s += -F(5, du) + F(4, du + 1) + (-F(3, dv) + F(4, du + 1)) + vp;
      break;
    case TransformId::T7:
      s += -F(5, du) + F(4, du + k) + k * (-F(4, dv) + F(4, du + k)) + vp;
      break;
    default:
      throw std::logic_error("case_formula: not a case transform");
  }
  return s;
}

void run_script(Surgeon& s, const TransformCase& c) {
  auto shed = [&](int which) {
    const ArmRef& a = c.u1_arms[which];
    s.cut(c.u1, a.center);
    return a;
  };
  auto demote = [&](const B2Ref& b, ArmRef& piece, int& bare) {
    s.cut(b.center, b.arm0.center);
    piece = b.arm0;
    s.cut(b.arm1.center, b.arm1.tip);
    bare = b.arm1.tip;
  };
  auto promote = [&](const B2Ref& b, const ArmRef& leg) {
    s.cut(c.v, b.center);
    s.link(c.u, b.center);
    s.link(b.center, leg.center);
  };
  auto regain = [&](int bare1, int bare2) {
    s.link(c.v, bare1);
    s.link(bare1, bare2);
  };

  switch (c.id) {
    case TransformId::T: {
      const ArmRef a = shed(0);
      s.link(c.b2[0].center, a.center);
      break;
    }
    case TransformId::T1: {
      ArmRef p4, p5;
      int bare4, bare5;
      demote(c.b2[4], p4, bare4);
      demote(c.b2[5], p5, bare5);
      promote(c.b2[0], shed(0));
      promote(c.b2[1], p4);
      promote(c.b2[2], p5);
      s.cut(c.v, c.b2[3].center);
      s.link(c.u, c.b2[3].center);
      regain(bare4, bare5);
      break;
    }
    case TransformId::T2: {
      ArmRef p3, p4;
      int bare3, bare4;
      demote(c.b2[3], p3, bare3);
      demote(c.b2[4], p4, bare4);
      promote(c.b2[0], shed(0));
      promote(c.b2[1], p3);
      promote(c.b2[2], p4);
      regain(bare3, bare4);
      break;
    }
    case TransformId::T3: {
      ArmRef p2, p3;
      int bare2, bare3;
      demote(c.b2[2], p2, bare2);
      demote(c.b2[3], p3, bare3);
      promote(c.b2[0], p2);
      promote(c.b2[1], p3);
      regain(bare2, bare3);
      break;
    }
    case TransformId::T41: {
      const B2Ref &p = c.b2[0], &q = c.b2[1], &r = c.b2[2];
      int hub = p.arm0.tip;  // becomes a new degree-5 center under u
      s.cut(c.v, p.center);
      s.cut(p.arm0.center, hub);
      s.cut(p.center, p.arm1.center);
      s.cut(q.center, q.arm0.center);
      s.cut(q.arm1.center, q.arm1.tip);
      s.cut(r.center, r.arm0.center);
      s.cut(r.arm1.center, r.arm1.tip);
      s.link(c.u, hub);
      s.link(hub, p.center);
      s.link(hub, p.arm1.center);
      s.link(hub, q.arm0.center);
      s.link(hub, r.arm0.center);
      regain(q.arm1.tip, r.arm1.tip);
      break;
    }
    case TransformId::T42: {
      promote(c.b2[0], shed(0));
      promote(c.b2[1], shed(1));
      s.cut(c.v, c.b2[2].center);
      s.link(c.u1, c.b2[2].center);
      break;
    }
    case TransformId::T5: {
      s.cut(c.v, c.b2[0].center);
      s.link(c.u, c.b2[0].center);
      s.cut(c.v, c.b2[1].center);
      s.link(c.b2[0].center, c.b2[1].center);
      const ArmRef a = shed(0);
      s.link(c.v, a.center);
      break;
    }
    case TransformId::T6: {
      s.cut(c.v, c.b2[0].center);
      s.link(c.u, c.b2[0].center);
      const ArmRef a = shed(0);
      s.link(c.b2[0].center, a.center);
      break;
    }
    case TransformId::T7: {
      for (const B3Ref& b : c.b3) {
        s.cut(c.v, b.center);
        s.link(c.u, b.center);
      }
      const ArmRef a = shed(0);
      s.link(c.v, a.center);
      break;
    }
    default:
      throw std::logic_error("run_script: not a scripted transform");
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("resolve_case: " + msg);
}

}  // namespace

std::vector<std::pair<int, int>> case_parameter_table(TransformId id) {
  switch (id) {
    case TransformId::T1: return {{7, 0}};
    case TransformId::T2: return {{6, 0}, {7, 1}};
    case TransformId::T3: return {{5, 0}, {6, 1}, {7, 2}};
    case TransformId::T41: return {{5, 1}, {6, 2}};
    case TransformId::T42: return {{7, 3}};
    case TransformId::T5: return {{5, 2}, {6, 3}, {7, 4}};
    case TransformId::T6: return {{5, 3}, {6, 4}};
    case TransformId::T7: return {{-1, -1}};  // any 1<=n1<=4 with D>=1
    default: return {};
  }
}

TransformCase resolve_case(const Tree& t, TransformId id, int u, int v,
                           int root) {
  require(id != TransformId::Switch,
          "the switch takes explicit edges, not case roles");
  require(u >= 0 && u < t.size() && v >= 0 && v < t.size(),
          "u or v out of range");
  TransformCase c;
  c.id = id;
  c.u = u;
  c.v = v;
  c.root = root >= 0 ? root : canonical_root(t);
  require(c.root >= 0 && c.root < t.size(), "root out of range");
  auto par = bfs_parents(t, c.root);
  auto ch = children_lists(t, par);
  c.u_p = par[u];
  c.v_p = par[v];
  c.du = t.degree(u);
  c.dv = t.degree(v);

  // The degree-5 center with four hanging 2-paths below u.
  for (int w : ch[u]) {
    if (t.degree(w) != 5 || ch[w].size() != 4) continue;
    std::vector<ArmRef> arms;
    for (int a : ch[w])
      if (auto ar = arm_at(t, ch, a)) arms.push_back(*ar);
    if (arms.size() == 4) {
      std::sort(arms.begin(), arms.end(),
                [](const ArmRef& a, const ArmRef& b) {
                  return a.center < b.center;
                });
      c.u1 = w;
      c.u1_arms = std::move(arms);
      break;
    }
  }
  require(c.u1 >= 0,
          "u has no degree-5 child carrying four hanging 2-paths");

  if (id == TransformId::T) {
    // Only a degree-3 center under v is needed.
    for (int w : ch[v]) {
      if (t.degree(w) != 3 || ch[w].size() != 2) continue;
      auto a0 = arm_at(t, ch, ch[w][0]);
      auto a1 = arm_at(t, ch, ch[w][1]);
      if (a0 && a1) {
        B2Ref b;
        b.center = w;
        b.arm0 = *a0;
        b.arm1 = *a1;
        if (b.arm1.center < b.arm0.center) std::swap(b.arm0, b.arm1);
        c.b2.push_back(b);
        break;
      }
    }
    require(!c.b2.empty(),
            "v has no degree-3 child carrying two hanging 2-paths");
    require(c.b2[0].center != c.u1, "the two centers must differ");
    return c;
  }

  require(u != v, "u and v must differ for the case transforms");
  require(c.v_p >= 0, "v must have a neighbor outside its branches");

  // Inventory of v's children.
  for (int w : ch[v]) {
    if (auto ar = arm_at(t, ch, w)) {
      c.b1.push_back(*ar);
      continue;
    }
    if (t.degree(w) == 3 && ch[w].size() == 2) {
      auto a0 = arm_at(t, ch, ch[w][0]);
      auto a1 = arm_at(t, ch, ch[w][1]);
      if (a0 && a1) {
        B2Ref b;
        b.center = w;
        b.arm0 = *a0;
        b.arm1 = *a1;
        if (b.arm1.center < b.arm0.center) std::swap(b.arm0, b.arm1);
        c.b2.push_back(b);
        continue;
      }
    }
    if (t.degree(w) == 4 && ch[w].size() == 3) {
      std::vector<ArmRef> arms;
      for (int a : ch[w])
        if (auto ar = arm_at(t, ch, a)) arms.push_back(*ar);
      if (arms.size() == 3) {
        std::sort(arms.begin(), arms.end(),
                  [](const ArmRef& a, const ArmRef& b) {
                    return a.center < b.center;
                  });
        B3Ref b;
        b.center = w;
        b.arms[0] = arms[0];
        b.arms[1] = arms[1];
        b.arms[2] = arms[2];
        c.b3.push_back(b);
        continue;
      }
    }
    require(false, "v has a child that is not a recognized branch");
  }
  auto by_center_arm = [](const ArmRef& a, const ArmRef& b) {
    return a.center < b.center;
  };
  std::sort(c.b1.begin(), c.b1.end(), by_center_arm);
  std::sort(c.b2.begin(), c.b2.end(),
            [](const B2Ref& a, const B2Ref& b) { return a.center < b.center; });
  std::sort(c.b3.begin(), c.b3.end(),
            [](const B3Ref& a, const B3Ref& b) { return a.center < b.center; });
  c.n1 = static_cast<int>(c.b1.size());
  c.n2 = static_cast<int>(c.b2.size());

  if (id == TransformId::T7) {
    require(c.b2.empty(), "T7 expects no degree-3 centers under v");
    require(c.n1 >= 1 && c.n1 <= 4, "T7 needs 1..4 hanging 2-paths under v");
    require(!c.b3.empty(), "T7 needs a degree-4 center under v");
    require(c.dv == c.n1 + static_cast<int>(c.b3.size()) + 1,
            "inventory under v does not match its degree");
  } else {
    require(c.b3.empty(), "only T7 admits degree-4 centers under v");
    require(c.dv == c.n1 + c.n2 + 1,
            "inventory under v does not match its degree");
    bool ok = false;
    for (auto [dv, n1] : case_parameter_table(id))
      if (c.dv == dv && c.n1 == n1) ok = true;
    require(ok, std::string("(dv, n1) not admitted by case ") + to_string(id));
  }
  require(c.dv >= 5, "need d(v) >= 5");
  require(c.du >= c.dv, "need d(u) >= d(v)");

  if (c.v_p == u) {
    c.rel = c.u_p < 0 ? Relationship::ParentChildRoot
                      : Relationship::ParentChild;
  } else if (c.u_p >= 0 && c.u_p == c.v_p) {
    c.rel = Relationship::SharedParent;
  } else {
    c.rel = Relationship::AllDistinct;
  }

  bool keep_u1 = id == TransformId::T3 || id == TransformId::T41;
  bool child_rel = c.rel == Relationship::ParentChild ||
                   c.rel == Relationship::ParentChildRoot;
  for (int w : t.neighbors(u)) {
    if (!keep_u1 && w == c.u1) continue;
    if (child_rel && id != TransformId::T41 && w == v) continue;
    c.x.push_back(w);
  }
  return c;
}

std::pair<Tree, DeltaReport> apply_case(const Tree& t, const TransformCase& c) {
  Surgeon s(t);
  run_script(s, c);
  Tree after = s.freeze();
  DeltaReport rep;
  rep.tcase = c;
  rep.structural_delta = abc_index(after) - abc_index(t);
  if (c.id == TransformId::T) {
    rep.formula_delta = -F(c.du, 5) + F(c.du, 4) - F(c.dv, 3) + F(c.dv, 4);
  } else {
    rep.formula_delta = case_formula(t, c, false);
    bool child_rel = c.rel == Relationship::ParentChild ||
                     c.rel == Relationship::ParentChildRoot;
    if (child_rel && c.id != TransformId::T41)
      rep.formula_upper_delta = case_formula(t, c, true);
    bool in_range = false;
    if (c.id == TransformId::T7) {
      in_range = c.du >= c.dv;
    } else if (c.dv >= 5 && c.dv <= 7) {
      in_range = c.du >= bound_du_min(c.dv);
    }
    if (in_range)
      rep.bound_delta = evaluate_bound(c.id, c.du, c.dv, c.n1);
  }
  return {std::move(after), rep};
}

std::pair<Tree, DeltaReport> apply_case(const Tree& t, TransformId id, int u,
                                        int v, int root) {
  return apply_case(t, resolve_case(t, id, u, v, root));
}

std::pair<Tree, DeltaReport> apply_arm_move(const Tree& t, int u, int u1,
                                            int v, int v1) {
  for (int w : {u, u1, v, v1})
    if (w < 0 || w >= t.size())
      throw std::invalid_argument("apply_arm_move: vertex out of range");
  if (!t.has_edge(u, u1) || !t.has_edge(v, v1))
    throw std::invalid_argument("apply_arm_move: u1 must neighbor u and v1 neighbor v");
  if (t.degree(u1) != 5 || t.degree(v1) != 3)
    throw std::invalid_argument("apply_arm_move: need degrees 5 at u1 and 3 at v1");
  TransformCase c;
  c.id = TransformId::T;
  c.u = u;
  c.v = v;
  c.u1 = u1;
  c.du = t.degree(u);
  c.dv = t.degree(v);
  // Validate the hanging 2-paths below u1 (away from u) and below v1.
  auto hanging = [&](int center, int parent) -> std::vector<ArmRef> {
    std::vector<ArmRef> arms;
    for (int a : t.neighbors(center)) {
      if (a == parent) continue;
      if (t.degree(a) != 2) continue;
      int tip = t.neighbors(a)[0] == center ? t.neighbors(a)[1]
                                            : t.neighbors(a)[0];
      if (t.degree(tip) == 1) arms.push_back({a, tip});
    }
    std::sort(arms.begin(), arms.end(),
              [](const ArmRef& a, const ArmRef& b) {
                return a.center < b.center;
              });
    return arms;
  };
  c.u1_arms = hanging(u1, u);
  if (c.u1_arms.size() != 4)
    throw std::invalid_argument(
        "apply_arm_move: u1 must carry four hanging 2-paths");
  auto v1_arms = hanging(v1, v);
  if (v1_arms.size() != 2)
    throw std::invalid_argument(
        "apply_arm_move: v1 must carry two hanging 2-paths");
  B2Ref b;
  b.center = v1;
  b.arm0 = v1_arms[0];
  b.arm1 = v1_arms[1];
  c.b2.push_back(b);
  return apply_case(t, c);
}

std::pair<Tree, DeltaReport> apply_switch(const Tree& t, int a, int b, int cc,
                                          int d) {
  int vs[4] = {a, b, cc, d};
  for (int w : vs)
    if (w < 0 || w >= t.size())
      throw std::invalid_argument("apply_switch: vertex out of range");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j])
        throw std::invalid_argument("apply_switch: vertices must be distinct");
  if (!t.has_edge(a, b) || !t.has_edge(cc, d))
    throw std::invalid_argument("apply_switch: both edges must be present");
  if (t.has_edge(a, d) || t.has_edge(cc, b))
    throw std::invalid_argument("apply_switch: replacement edge already present");
  Surgeon s(t);
  s.cut(a, b);
  s.cut(cc, d);
  s.link(a, d);
  s.link(cc, b);
  Tree after = [&] {
    try {
      return s.freeze();
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("apply_switch: switch disconnects the tree");
    }
  }();
  DeltaReport rep;
  rep.tcase.id = TransformId::Switch;
  rep.tcase.u = a;
  rep.tcase.v = b;
  rep.tcase.x = {cc, d};
  rep.tcase.du = t.degree(a);
  rep.tcase.dv = t.degree(b);
  rep.structural_delta = abc_index(after) - abc_index(t);
  rep.formula_delta = F(t.degree(a), t.degree(d)) +
                      F(t.degree(cc), t.degree(b)) -
                      F(t.degree(a), t.degree(b)) -
                      F(t.degree(cc), t.degree(d));
  return {std::move(after), rep};
}

int bound_du_min(int dv) {
  switch (dv) {
    case 5: return 13;
    case 6: return 25;
    case 7: return 67;
  }
  throw std::domain_error("bound_du_min: dv must be 5, 6 or 7");
}

namespace {

void check_bound_domain(TransformId id, int du, int dv, int n1) {
  if (id == TransformId::T7) {
    if (n1 < 1 || n1 > 4)
      throw std::domain_error("evaluate_bound: T7 needs 1 <= n1 <= 4");
    if (dv < 5 || dv < n1 + 2)
      throw std::domain_error("evaluate_bound: T7 needs dv >= max(5, n1+2)");
    if (du < dv) throw std::domain_error("evaluate_bound: need du >= dv");
    return;
  }
  bool dv_ok = false;
  for (auto [cdv, cn1] : case_parameter_table(id))
    if (dv == cdv) dv_ok = true;
  if (!dv_ok)
    throw std::domain_error(std::string("evaluate_bound: dv not admitted by ") +
                            to_string(id));
  if (du < bound_du_min(dv))
    throw std::domain_error("evaluate_bound: du below the declared range");
}

}  // namespace

double evaluate_bound(TransformId id, int du, int dv, int n1) {
  check_bound_domain(id, du, dv, n1);
  auto LT = degree_limit_term;
  switch (id) {
    case TransformId::T1:
      // Pinned at the low end (du = 66) of its range; constant in du.
      return LT(5, 4) + 3 * (-F(3, 7) + F(4, 70)) + (-F(3, 7) + F(3, 70)) +
             LT(7, 4) + 2 * (-F(3, 7) + F(2, 4));
    case TransformId::T2:
      return LT(5, 4) + 3 * (-F(3, dv) + F(4, du + 3)) + LT(dv, dv - 2) +
             2 * (-F(3, dv) + F(2, 4));
    case TransformId::T3:
      return 2 * (-F(3, dv) + F(4, du + 2)) + LT(dv, dv - 1) +
             2 * (-F(3, dv) + F(2, 4));
    case TransformId::T41:
      return -F(3, dv) + F(5, du + 1) + 2 * (-F(3, dv) + F(2, dv));
    case TransformId::T42:
      return LT(5, 4) + 2 * (-F(3, 7) + F(4, du + 2)) + LT(7, 4) +
             (-F(3, 7) + F(4, 3));
    case TransformId::T5:
      return LT(5, 4) + (-F(3, dv) + F(4, 3)) + (-F(3, dv) + F(4, du + 1)) +
             LT(dv, dv - 1);
    case TransformId::T6:
      return LT(5, 4) + (-F(3, dv) + F(4, du + 1)) + LT(dv, dv - 1);
    case TransformId::T7: {
      int D = dv - n1 - 1;
      return LT(5, 4) + D * (-F(4, dv) + F(4, du + D)) + LT(dv, n1 + 2);
    }
    default:
      throw std::domain_error("evaluate_bound: no bound for this transform");
  }
}

double evaluate_refined_bound(TransformId id, int du, int dv, int n1) {
  int k;
  switch (id) {
    case TransformId::T3: k = 2; break;
    case TransformId::T41:
    case TransformId::T5:
    case TransformId::T6: k = 1; break;
    default:
      throw std::domain_error(
          "evaluate_refined_bound: no refinement for this transform");
  }
  return evaluate_bound(id, du, dv, n1) +
         (du - 2) * (-F(4, du) + F(4, du + k));
}

std::vector<ExceptionWindow> exception_windows(TransformId id) {
  switch (id) {
    case TransformId::T3: return {{5, 13, 13}};
    case TransformId::T41: return {{5, 13, 16}, {6, 25, 69}};
    case TransformId::T5: return {{5, 13, 34}, {6, 25, 48}, {7, 67, 83}};
    case TransformId::T6: return {{5, 13, 17}};
    default: return {};
  }
}

}  // namespace abc
