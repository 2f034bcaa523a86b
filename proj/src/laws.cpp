#include "surreal/laws.hpp"

#include "surreal/arithmetic.hpp"
#include "surreal/oracle.hpp"
#include "surreal/signexp.hpp"
#include "surreal/tree.hpp"

#include <algorithm>

namespace surreal {

Corpus corpus(Arena& arena, std::uint32_t max_day, Filter filter) {
  Tree tree = generate(arena, max_day);
  Corpus out;
  out.max_day = max_day;
  out.filter = filter;
  for (const auto& level : tree.days()) {
    for (const TreeNode& n : level) {
      bool keep = filter == Filter::All ||
                  (filter == Filter::Positive && arena.lt(arena.zero(), n.id)) ||
                  (filter == Filter::Nonnegative && arena.leq(arena.zero(), n.id));
      if (keep) out.nodes.push_back(n.id);
    }
  }
  std::sort(out.nodes.begin(), out.nodes.end(),
            [&arena](NodeId a, NodeId b) { return arena.lt(a, b); });
  out.description = "canonical, birthday <= " + std::to_string(max_day);
  if (filter == Filter::Positive) out.description += ", positive";
  if (filter == Filter::Nonnegative) out.description += ", nonnegative";
  return out;
}

bool derived_leq(Arena& arena, std::span<const NodeId> witnesses, NodeId a,
                 NodeId b) {
  auto holds_for = [&](NodeId c) {
    return (!arena.lt(c, a) || arena.lt(c, b)) &&
           (!arena.lt(b, c) || arena.lt(a, c));
  };
  return std::all_of(witnesses.begin(), witnesses.end(), holds_for) &&
         holds_for(a) && holds_for(b);
}

LawReport check(Arena& arena, const LawSpec& law, const Corpus& corpus,
                std::optional<std::uint64_t> limit) {
  LawReport report;
  report.law = law.name;
  report.corpus = corpus.description;
  report.domain = law.domain;
  report.arity = law.arity;

  const std::size_t n = corpus.nodes.size();
  const std::size_t elements = law.domain == Domain::Nodes ? n : n * n;
  if (elements == 0) return report;

  LawContext ctx{arena, corpus};
  std::vector<std::size_t> digits(static_cast<std::size_t>(law.arity), 0);
  std::vector<NodeId> tuple;
  for (;;) {
    if (limit && report.tuples_checked >= *limit) break;

    tuple.clear();
    for (std::size_t d : digits) {
      if (law.domain == Domain::Nodes) {
        tuple.push_back(corpus.nodes[d]);
      } else {
        tuple.push_back(corpus.nodes[d / n]);
        tuple.push_back(corpus.nodes[d % n]);
      }
    }
    ++report.tuples_checked;
    if (!law.predicate(ctx, tuple)) {
      ++report.failures;
      if (report.counterexamples.size() < kMaxCounterexamples) {
        report.counterexamples.push_back(tuple);
      }
    }

    // Odometer increment, last position fastest.
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == elements) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return report;
}

namespace {

// Shorthand used by the law bodies.
struct Ops {
  Arena& arena;

  NodeId zero() const { return arena.zero(); }
  bool lt(NodeId x, NodeId y) const { return arena.lt(x, y); }
  bool leq(NodeId x, NodeId y) const { return arena.leq(x, y); }
  bool eq(NodeId x, NodeId y) const { return arena.eq(x, y); }
  bool apart(NodeId x, NodeId y) const { return arena.apart(x, y); }
  bool pos(NodeId x) const { return arena.lt(arena.zero(), x); }
  NodeId add(NodeId x, NodeId y) const { return surreal::add(arena, x, y); }
  NodeId sub(NodeId x, NodeId y) const { return surreal::sub(arena, x, y); }
  NodeId neg(NodeId x) const { return surreal::neg(arena, x); }
  NodeId canon(NodeId x) const { return canonicalize(arena, x); }
  NodeId mp(NodeId x, NodeId y) const { return mul_pos(arena, x, y); }
  NodeId mul(NodeId x, NodeId y) const { return surreal::mul(arena, x, y); }
  NodeId one() const { return from_dyadic(arena, Dyadic(1)); }
  Dyadic val(NodeId x) const { return value(arena, x); }
};

using Ids = std::span<const NodeId>;

template <class F>
LawSpec law(std::string name, int arity, std::string statement,
            std::uint32_t day, Filter filter, F body,
            Domain domain = Domain::Nodes) {
  LawSpec spec;
  spec.name = std::move(name);
  spec.arity = arity;
  spec.domain = domain;
  spec.statement = std::move(statement);
  spec.default_max_day = day;
  spec.default_filter = filter;
  spec.predicate = [body](LawContext& ctx, Ids t) {
    return body(Ops{ctx.arena}, t, ctx);
  };
  return spec;
}

template <class F>
LawSpec pair_law(std::string name, int arity, std::string statement, F body) {
  return law(std::move(name), arity, std::move(statement), 2, Filter::Positive,
             body, Domain::DiffPairs);
}

// Every option of u is eq to an option of v on the same side, and vice versa.
bool options_match(const Ops& o, NodeId u, NodeId v) {
  auto covered = [&o](std::span<const NodeId> from, std::span<const NodeId> to) {
    return std::all_of(from.begin(), from.end(), [&](NodeId f) {
      return std::any_of(to.begin(), to.end(),
                         [&](NodeId t) { return o.eq(f, t); });
    });
  };
  const Arena& a = o.arena;
  return covered(a.left(u), a.left(v)) && covered(a.left(v), a.left(u)) &&
         covered(a.right(u), a.right(v)) && covered(a.right(v), a.right(u));
}

// The cut of u with every option replaced by its canonical form.
NodeId canonical_options(const Ops& o, NodeId u) {
  std::vector<NodeId> l, r;
  for (NodeId x : o.arena.left(u)) l.push_back(o.canon(x));
  for (NodeId x : o.arena.right(u)) r.push_back(o.canon(x));
  return o.arena.make(l, r);
}

std::vector<LawSpec> build_registry() {
  constexpr auto All = Filter::All;
  constexpr auto Positive = Filter::Positive;
  constexpr auto Nonnegative = Filter::Nonnegative;
  std::vector<LawSpec> r;

  // Ordered set.
  r.push_back(law("LT_IRREFL", 1, "not x < x", 4, All,
                  [](Ops o, Ids t, auto&) { return !o.lt(t[0], t[0]); }));
  r.push_back(law("LT_ASYM", 2, "x < y implies not y < x", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.lt(t[0], t[1]) && o.lt(t[1], t[0]));
                  }));
  r.push_back(law("COTRANS_LT", 3, "x < y implies x < z or z < y", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !o.lt(t[0], t[1]) || o.lt(t[0], t[2]) ||
                           o.lt(t[2], t[1]);
                  }));
  r.push_back(law("NEG_ANTISYM", 2, "not x < y and not y < x imply x = y", 4,
                  All, [](Ops o, Ids t, auto&) {
                    return o.lt(t[0], t[1]) || o.lt(t[1], t[0]) ||
                           o.eq(t[0], t[1]);
                  }));
  r.push_back(law("OPTION_SANDWICH", 1, "x^L < x < x^R (for x and x + x)", 4,
                  All, [](Ops o, Ids t, auto&) {
                    for (NodeId x : {t[0], o.add(t[0], t[0])}) {
                      for (NodeId l : o.arena.left(x)) {
                        if (!o.lt(l, x)) return false;
                      }
                      for (NodeId rr : o.arena.right(x)) {
                        if (!o.lt(x, rr)) return false;
                      }
                    }
                    return true;
                  }));
  r.push_back(law("EQ_CRITERION", 2,
                  "options pairwise equal on each side imply equality", 3, All,
                  [](Ops o, Ids t, auto&) {
                    NodeId s = o.add(t[0], t[1]);
                    std::pair<NodeId, NodeId> cases[] = {
                        {t[0], t[1]},
                        {s, o.add(t[1], t[0])},
                        {s, canonical_options(o, s)},
                        {o.add(t[0], o.neg(t[1])), o.sub(t[0], t[1])},
                    };
                    for (auto [u, v] : cases) {
                      if (options_match(o, u, v) && !o.eq(u, v)) return false;
                    }
                    // The canonical-options rebuild must always qualify.
                    return options_match(o, s, canonical_options(o, s));
                  }));

  // Ordered group.
  r.push_back(law("ADD_MONO", 3, "x < y implies x + z < y + z and z + x < z + y",
                  4, All, [](Ops o, Ids t, auto&) {
                    if (!o.lt(t[0], t[1])) return true;
                    return o.lt(o.add(t[0], t[2]), o.add(t[1], t[2])) &&
                           o.lt(o.add(t[2], t[0]), o.add(t[2], t[1]));
                  }));
  r.push_back(law("NEG_REVERSE", 2, "x < y implies -y < -x", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !o.lt(t[0], t[1]) ||
                           o.lt(o.neg(t[1]), o.neg(t[0]));
                  }));
  r.push_back(law("POS_ADD", 2, "0 < x and 0 < y imply 0 < x + y", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.pos(t[0]) && o.pos(t[1])) ||
                           o.pos(o.add(t[0], t[1]));
                  }));
  r.push_back(law("ADD_STRICT", 4, "x < x' and y < y' imply x + y < x' + y'",
                  4, All, [](Ops o, Ids t, auto&) {
                    if (!o.lt(t[0], t[1]) || !o.lt(t[2], t[3])) return true;
                    return o.lt(o.add(t[0], t[2]), o.add(t[1], t[3]));
                  }));
  r.push_back(law("SUB_BELOW", 3, "0 < x < y < z implies y - z < x", 4, All,
                  [](Ops o, Ids t, auto&) {
                    if (!(o.pos(t[0]) && o.lt(t[0], t[1]) && o.lt(t[1], t[2]))) {
                      return true;
                    }
                    return o.lt(o.sub(t[1], t[2]), t[0]);
                  }));
  r.push_back(law("GAP_ADD", 4,
                  "a < b, b' < a' and a' - b' < b - a imply a + a' < b + b'",
                  4, All, [](Ops o, Ids t, auto&) {
                    NodeId a = t[0], b = t[1], a2 = t[2], b2 = t[3];
                    if (!o.lt(a, b) || !o.lt(b2, a2)) return true;
                    if (!o.lt(o.sub(a2, b2), o.sub(b, a))) return true;
                    return o.lt(o.add(a, a2), o.add(b, b2));
                  }));
  r.push_back(law("NEG_DIFF", 2, "-(a - b) = -a + b", 3, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.neg(o.sub(t[0], t[1])),
                                o.add(o.neg(t[0]), t[1]));
                  }));

  // Weak order.
  r.push_back(law("LT_LEQ_TRANS", 3, "a < b <= c implies a < c", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.lt(t[0], t[1]) && o.leq(t[1], t[2])) ||
                           o.lt(t[0], t[2]);
                  }));
  r.push_back(law("LEQ_LT_TRANS", 3, "a <= b < c implies a < c", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.leq(t[0], t[1]) && o.lt(t[1], t[2])) ||
                           o.lt(t[0], t[2]);
                  }));
  r.push_back(law("LEQ_TRANS", 3, "a <= b <= c implies a <= c", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.leq(t[0], t[1]) && o.leq(t[1], t[2])) ||
                           o.leq(t[0], t[2]);
                  }));
  r.push_back(law("LEQ_ADD", 3, "a <= b implies a + c <= b + c", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !o.leq(t[0], t[1]) ||
                           o.leq(o.add(t[0], t[2]), o.add(t[1], t[2]));
                  }));
  r.push_back(law("NONNEG_ADD", 2, "0 <= a and 0 <= b imply 0 <= a + b", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !(o.leq(o.zero(), t[0]) && o.leq(o.zero(), t[1])) ||
                           o.leq(o.zero(), o.add(t[0], t[1]));
                  }));
  r.push_back(law("POS_NONNEG_ADD", 2, "0 < a and 0 <= b imply 0 < a + b", 4,
                  All, [](Ops o, Ids t, auto&) {
                    return !(o.pos(t[0]) && o.leq(o.zero(), t[1])) ||
                           o.pos(o.add(t[0], t[1]));
                  }));
  r.push_back(law("LEQ_DERIVED_AGREE", 2,
                  "a <= b iff every c < a has c < b and every c > b has c > a",
                  4, All, [](Ops o, Ids t, LawContext& ctx) {
                    return derived_leq(o.arena, ctx.corpus.nodes, t[0], t[1]) ==
                           o.leq(t[0], t[1]);
                  }));

  // Abelian group.
  r.push_back(law("ADD_IDENT", 1, "x + 0 = x", 3, All, [](Ops o, Ids t, auto&) {
    return o.eq(o.add(t[0], o.zero()), t[0]);
  }));
  r.push_back(law("ADD_INV", 1, "x - x = 0", 3, All, [](Ops o, Ids t, auto&) {
    return o.eq(o.sub(t[0], t[0]), o.zero());
  }));
  r.push_back(law("ADD_ASSOC", 3, "x + (y + z) = (x + y) + z", 3, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.add(t[0], o.add(t[1], t[2])),
                                o.add(o.add(t[0], t[1]), t[2]));
                  }));
  r.push_back(law("ADD_COMM", 2, "x + y = y + x", 3, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.add(t[0], t[1]), o.add(t[1], t[0]));
                  }));
  r.push_back(law("NEG_INVOL", 1, "-(-x) = x", 3, All, [](Ops o, Ids t, auto&) {
    return o.eq(o.neg(o.neg(t[0])), t[0]);
  }));

  // Product of positives.
  r.push_back(law("MUL_POS_POSITIVE", 2, "0 < x and 0 < y imply 0 < xy", 3,
                  Positive, [](Ops o, Ids t, auto&) {
                    return !(o.pos(t[0]) && o.pos(t[1])) ||
                           o.pos(o.mp(t[0], t[1]));
                  }));
  r.push_back(law("MUL_NONNEG", 2, "0 <= x and 0 < y imply 0 <= xy", 3,
                  Nonnegative, [](Ops o, Ids t, auto&) {
                    return !(o.leq(o.zero(), t[0]) && o.pos(t[1])) ||
                           o.leq(o.zero(), o.mp(t[0], t[1]));
                  }));
  r.push_back(law("MUL_POS_MONO", 3,
                  "y < y' implies xy < xy', y <= y' implies xy <= xy', and "
                  "likewise in the left factor",
                  3, Positive, [](Ops o, Ids t, auto&) {
                    NodeId p = t[0], q = t[1], s = t[2];
                    if (!(o.pos(p) && o.pos(q) && o.pos(s))) return true;
                    bool ok = true;
                    if (o.lt(q, s)) ok = ok && o.lt(o.mp(p, q), o.mp(p, s));
                    if (o.leq(q, s)) ok = ok && o.leq(o.mp(p, q), o.mp(p, s));
                    if (o.lt(p, q)) ok = ok && o.lt(o.mp(p, s), o.mp(q, s));
                    if (o.leq(p, q)) ok = ok && o.leq(o.mp(p, s), o.mp(q, s));
                    return ok;
                  }));
  r.push_back(law("DIST_POS", 3, "x(y + z) = xy + xz for positive x, y, z", 3,
                  Positive, [](Ops o, Ids t, auto&) {
                    if (!(o.pos(t[0]) && o.pos(t[1]) && o.pos(t[2]))) return true;
                    return o.eq(o.mp(t[0], o.add(t[1], t[2])),
                                o.add(o.mp(t[0], t[1]), o.mp(t[0], t[2])));
                  }));
  r.push_back(law("OPTION_DIST", 3,
                  "x^O(z +- z') = x^O z +- x^O z' and (z +- z')x^O = z x^O +- "
                  "z' x^O for positive options x^O whenever z +- z' > 0",
                  3, Positive, [](Ops o, Ids t, auto&) {
                    NodeId x = t[0], z = t[1], z2 = t[2];
                    if (!(o.pos(x) && o.pos(z) && o.pos(z2))) return true;
                    NodeId sum = o.add(z, z2);
                    NodeId diff = o.sub(z, z2);
                    std::vector<NodeId> options;
                    NodeId cx = o.canon(x);
                    for (NodeId l : o.arena.left(cx)) options.push_back(l);
                    for (NodeId rr : o.arena.right(cx)) options.push_back(rr);
                    for (NodeId opt : options) {
                      if (!o.pos(opt)) continue;
                      if (!o.eq(o.mp(opt, sum), o.add(o.mp(opt, z), o.mp(opt, z2))) ||
                          !o.eq(o.mp(sum, opt), o.add(o.mp(z, opt), o.mp(z2, opt)))) {
                        return false;
                      }
                      if (o.pos(diff) &&
                          (!o.eq(o.mp(opt, diff), o.sub(o.mp(opt, z), o.mp(opt, z2))) ||
                           !o.eq(o.mp(diff, opt), o.sub(o.mp(z, opt), o.mp(z2, opt))))) {
                        return false;
                      }
                    }
                    return true;
                  }));
  r.push_back(law("MUL_POS_IDENT", 1, "x1 = x", 3, Positive,
                  [](Ops o, Ids t, auto&) {
                    return !o.pos(t[0]) || o.eq(o.mp(t[0], o.one()), t[0]);
                  }));
  r.push_back(law("MUL_POS_ZERO", 1, "x0 = 0", 3, Nonnegative,
                  [](Ops o, Ids t, auto&) {
                    return !o.leq(o.zero(), t[0]) ||
                           o.eq(o.mp(t[0], o.zero()), o.zero());
                  }));
  r.push_back(law("MUL_POS_COMM", 2, "xy = yx on positives", 3, Positive,
                  [](Ops o, Ids t, auto&) {
                    return !(o.pos(t[0]) && o.pos(t[1])) ||
                           o.eq(o.mp(t[0], t[1]), o.mp(t[1], t[0]));
                  }));
  r.push_back(law("MUL_POS_ASSOC", 3, "x(yz) = (xy)z on positives", 3,
                  Positive, [](Ops o, Ids t, auto&) {
                    if (!(o.pos(t[0]) && o.pos(t[1]) && o.pos(t[2]))) return true;
                    return o.eq(o.mp(t[0], o.mp(t[1], t[2])),
                                o.mp(o.mp(t[0], t[1]), t[2]));
                  }));

  // Difference pairs.
  auto pair_at = [](Ids t, std::size_t i) { return DiffPair{t[2 * i], t[2 * i + 1]}; };
  r.push_back(law("DIFF_ROUNDTRIP", 1,
                  "x = n - (n - x) with 0 < n and x < n", 5, All,
                  [](Ops o, Ids t, auto&) {
                    DiffPair p = to_diff(o.arena, t[0]);
                    return o.pos(p.a) && o.pos(p.b) && o.lt(t[0], p.a) &&
                           o.eq(from_diff(o.arena, p), t[0]);
                  }));
  r.push_back(pair_law("DIFF_MUL_IDENT", 1, "(a - b) * 1 = a - b",
                       [pair_at](Ops o, Ids t, auto&) {
                         DiffPair p = pair_at(t, 0);
                         NodeId two = from_dyadic(o.arena, Dyadic(2));
                         NodeId g = from_diff(o.arena, p);
                         // 1 written as (1 + 1) - 1 and as the to_diff form.
                         DiffPair ones[] = {{two, o.one()},
                                            to_diff(o.arena, o.one())};
                         for (DiffPair one : ones) {
                           if (!o.eq(from_diff(o.arena, mul_diff(o.arena, p, one)), g)) {
                             return false;
                           }
                         }
                         return true;
                       }));
  r.push_back(pair_law("DIFF_MUL_COMM", 2, "p * q = q * p",
                       [pair_at](Ops o, Ids t, auto&) {
                         DiffPair p = pair_at(t, 0), q = pair_at(t, 1);
                         return o.eq(from_diff(o.arena, mul_diff(o.arena, p, q)),
                                     from_diff(o.arena, mul_diff(o.arena, q, p)));
                       }));
  r.push_back(pair_law("DIFF_MUL_ASSOC", 3, "p * (q * s) = (p * q) * s",
                       [pair_at](Ops o, Ids t, auto&) {
                         DiffPair p = pair_at(t, 0), q = pair_at(t, 1),
                                  s = pair_at(t, 2);
                         Arena& a = o.arena;
                         return o.eq(
                             from_diff(a, mul_diff(a, p, mul_diff(a, q, s))),
                             from_diff(a, mul_diff(a, mul_diff(a, p, q), s)));
                       }));
  r.push_back(pair_law("DIFF_DIST", 3, "p * (q + s) = p * q + p * s",
                       [pair_at](Ops o, Ids t, auto&) {
                         DiffPair p = pair_at(t, 0), q = pair_at(t, 1),
                                  s = pair_at(t, 2);
                         Arena& a = o.arena;
                         return o.eq(
                             from_diff(a, mul_diff(a, p, add_diff(a, q, s))),
                             from_diff(a, add_diff(a, mul_diff(a, p, q),
                                                   mul_diff(a, p, s))));
                       }));
  r.push_back(pair_law("DIFF_ADD_HOM", 2,
                       "g((a - b) + (a' - b')) = g(a - b) + g(a' - b')",
                       [pair_at](Ops o, Ids t, auto&) {
                         DiffPair p = pair_at(t, 0), q = pair_at(t, 1);
                         Arena& a = o.arena;
                         return o.eq(from_diff(a, add_diff(a, p, q)),
                                     o.add(from_diff(a, p), from_diff(a, q)));
                       }));
  r.push_back(law("TRANSPORT_ADD", 2, "f(x) + f(y) = f(x + y)", 3, All,
                  [](Ops o, Ids t, auto&) {
                    Arena& a = o.arena;
                    DiffPair fx = to_diff(a, t[0]);
                    DiffPair fy = to_diff(a, t[1]);
                    DiffPair sum = add_diff(a, fx, fy);
                    NodeId xy = o.add(t[0], t[1]);
                    // n + m is itself a valid bound for x + y.
                    return o.pos(sum.a) && o.pos(sum.b) && o.lt(xy, sum.a) &&
                           o.eq(from_diff(a, sum), from_diff(a, to_diff(a, xy)));
                  }));

  // Ring.
  r.push_back(law("MUL_IDENT", 1, "x * 1 = x", 2, All, [](Ops o, Ids t, auto&) {
    return o.eq(o.mul(t[0], o.one()), t[0]) && o.eq(o.mul(o.one(), t[0]), t[0]);
  }));
  r.push_back(law("MUL_ZERO", 1, "x * 0 = 0", 2, All, [](Ops o, Ids t, auto&) {
    return o.eq(o.mul(t[0], o.zero()), o.zero());
  }));
  r.push_back(law("MUL_COMM", 2, "x * y = y * x", 2, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.mul(t[0], t[1]), o.mul(t[1], t[0]));
                  }));
  r.push_back(law("MUL_ASSOC", 3, "x * (y * z) = (x * y) * z", 2, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.mul(t[0], o.mul(t[1], t[2])),
                                o.mul(o.mul(t[0], t[1]), t[2]));
                  }));
  r.push_back(law("MUL_DIST", 3, "x * (y + z) = x * y + x * z", 2, All,
                  [](Ops o, Ids t, auto&) {
                    return o.eq(o.mul(t[0], o.add(t[1], t[2])),
                                o.add(o.mul(t[0], t[1]), o.mul(t[0], t[2])));
                  }));

  // Apartness.
  r.push_back(law("APART_IRREFL", 1, "not x # x", 4, All,
                  [](Ops o, Ids t, auto&) { return !o.apart(t[0], t[0]); }));
  r.push_back(law("APART_SYMM", 2, "x # y implies y # x", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !o.apart(t[0], t[1]) || o.apart(t[1], t[0]);
                  }));
  r.push_back(law("APART_COTRANS", 3, "x # y implies x # z or z # y", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return !o.apart(t[0], t[1]) || o.apart(t[0], t[2]) ||
                           o.apart(t[2], t[1]);
                  }));

  // Agreement with independent routes.
  r.push_back(law("ORACLE_ORDER", 2,
                  "x < y and x = y agree with the dyadic values", 4, All,
                  [](Ops o, Ids t, auto&) {
                    Dyadic x = o.val(t[0]), y = o.val(t[1]);
                    return o.lt(t[0], t[1]) == (x < y) &&
                           o.eq(t[0], t[1]) == (x == y);
                  }));
  r.push_back(law("ORACLE_ADD", 2, "value(x + y) = value(x) + value(y)", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return o.val(o.add(t[0], t[1])) == o.val(t[0]) + o.val(t[1]);
                  }));
  r.push_back(law("ORACLE_MUL", 2, "value(x * y) = value(x) * value(y)", 4, All,
                  [](Ops o, Ids t, auto&) {
                    return o.val(o.mul(t[0], t[1])) == o.val(t[0]) * o.val(t[1]);
                  }));
  r.push_back(law("CONWAY_AGREE", 2,
                  "the positive product equals Conway's product", 3, Positive,
                  [](Ops o, Ids t, auto&) {
                    if (!(o.pos(t[0]) && o.pos(t[1]))) return true;
                    return o.eq(o.mp(t[0], t[1]), mul_conway(o.arena, t[0], t[1]));
                  }));
  r.push_back(law("SIGN_ORDER", 2,
                  "x < y iff the sign expansion of x precedes that of y", 6, All,
                  [](Ops o, Ids t, auto&) {
                    return o.lt(t[0], t[1]) ==
                           seq_lt(encode(o.arena, t[0]), encode(o.arena, t[1]));
                  }));
  return r;
}

}  // namespace

const std::vector<LawSpec>& registry() {
  static const std::vector<LawSpec> laws = build_registry();
  return laws;
}

const LawSpec* find_law(std::string_view name) {
  for (const LawSpec& l : registry()) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

}  // namespace surreal
