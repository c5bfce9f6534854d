#include "boxdom/replay.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "boxdom/cells.hpp"
#include "boxdom/domination.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/hypothesis.hpp"

namespace boxdom {

StepFailed::StepFailed(const std::string& msg, ReplayReport partial)
    : Error(msg), report(std::move(partial)) {}

namespace {

using json = nlohmann::ordered_json;

json set_json(const VertexSet& s) { return json(s.indices()); }

// Shared state and step plumbing for a replay run.
struct Ctx {
    ProductGraph p;
    const VertexSet& d;
    int gamma_g, gamma_h;
    ReplayReport rep;

    Ctx(const Graph& g, const Graph& h, const VertexSet& d_in, const char* mode)
        : p(cartesian_product(g, h)), d(d_in) {
        if (d.universe() != p.n())
            throw UniverseMismatch("d is not over the product vertex set");
        gamma_g = gamma_exact(g).gamma;
        gamma_h = gamma_exact(h).gamma;
        rep.mode = mode;
        rep.g6_g = to_graph6(g);
        rep.g6_h = to_graph6(h);
        rep.d_indices = d.indices();
    }

    ReplayStep& step(const char* anchor, const char* title) {
        rep.steps.push_back(ReplayStep{anchor, title, true, json::object()});
        return rep.steps.back();
    }

    [[noreturn]] void fail(ReplayStep& st, const std::string& msg) {
        st.passed = false;
        st.data["failure"] = msg;
        rep.passed = false;
        throw StepFailed(st.anchor + ": " + msg, rep);
    }

    void require(ReplayStep& st, bool ok, const std::string& msg) {
        if (!ok) fail(st, msg);
    }

    // {(gv, h) : h in layers}, as a product vertex set.
    VertexSet column_over(int gv, const VertexSet& layers) const {
        VertexSet out(p.n());
        layers.for_each([&](int hv) { out.insert(p.encode(gv, hv)); });
        return out;
    }

    VertexSet column(int gv) const { return p.h_layer(gv); }

    int count_in(const VertexSet& cols) const { return (d & cols).size(); }

    bool column_in_d(int gv, const VertexSet& layers) const {
        return column_over(gv, layers).subset_of(d);
    }

    bool vert_dom_all(int gv, const VertexSet& layers) const {
        bool ok = true;
        layers.for_each([&](int hv) {
            if (ok && !vertically_dominated(p, d, p.encode(gv, hv))) ok = false;
        });
        return ok;
    }
};

// Per-side private-neighbor data for the two-set replay: the A/B/C split of
// s and, for each member, its lowest private neighbor overall and its
// lowest private neighbor outside both sets.
struct Side {
    VertexSet s, a, b, c;
    std::vector<int> pn_first;      // -1 when x has no private neighbor
    std::vector<int> pn_out_first;  // -1 when none outside s1 and s2

    Side(const Graph& g, const VertexSet& s_in, const VertexSet& other)
        : s(s_in), a(g.n()), b(g.n()), c(g.n()),
          pn_first(static_cast<std::size_t>(g.n()), -1),
          pn_out_first(static_cast<std::size_t>(g.n()), -1) {
        s.for_each([&](int x) {
            const VertexSet pn = private_neighbors(g, s, x);
            const VertexSet outside = pn - other;
            pn_first[static_cast<std::size_t>(x)] = pn.first();
            pn_out_first[static_cast<std::size_t>(x)] = outside.first();
            if (!outside.empty())
                a.insert(x);
            else if (!pn.empty())
                b.insert(x);
            else
                c.insert(x);
        });
    }
};

ReplayReport run_single(Ctx& ctx, const Graph& g, const VertexSet& s) {
    const ProductGraph& p = ctx.p;
    if (s.universe() != g.n()) throw UniverseMismatch("s is not over the factor vertex set");

    // Hypothesis: d dominates the product and s is a minimal dominating
    // superset of every layer projection.  Bad inputs, not bugs.
    if (!is_dominating(p.graph(), ctx.d))
        throw HypothesisViolated("d does not dominate the product");
    if (!is_dominating(g, s)) throw HypothesisViolated("s does not dominate the factor");
    const LayerProjections proj = layer_projections(p, ctx.d);
    for (int hv = 0; hv < proj.n_layers(); ++hv)
        if (!is_minimal_dominating_containing(g, s, proj.per_layer[static_cast<std::size_t>(hv)]))
            throw HypothesisViolated("layer " + std::to_string(hv) +
                                     ": s is not a minimal dominating superset of the projection");

    ctx.rep.s1_indices = s.indices();
    {
        ReplayStep& st = ctx.step("single.hypothesis", "s covers every layer projection minimally");
        st.data["s"] = set_json(s);
        st.data["d_size"] = ctx.d.size();
        st.data["gamma_g"] = ctx.gamma_g;
        st.data["gamma_h"] = ctx.gamma_h;
    }

    // Split s by private neighbors.
    VertexSet s_priv(g.n()), s_rest(g.n());
    s.for_each([&](int x) {
        if (!private_neighbors(g, s, x).empty())
            s_priv.insert(x);
        else
            s_rest.insert(x);
    });
    {
        ReplayStep& st = ctx.step("single.private-split", "split s by private neighbors");
        st.data["with_private"] = set_json(s_priv);
        st.data["without_private"] = set_json(s_rest);
    }

    const VertexSet all_layers = VertexSet::full(p.n_h());
    {
        ReplayStep& st = ctx.step("single.forced-columns",
                                  "columns of private-neighbor owners lie inside d");
        json rows = json::array();
        s_priv.for_each([&](int x) {
            const int y = private_neighbors(g, s, x).first();
            ctx.require(st, ctx.count_in(ctx.column(y)) == 0,
                        "column of private neighbor " + std::to_string(y) +
                            " meets d although its owner projects outside s");
            ctx.require(st, ctx.column_in_d(x, all_layers),
                        "column of " + std::to_string(x) + " is not contained in d");
            rows.push_back({{"x", x}, {"private_neighbor", y}});
        });
        st.data["checked"] = std::move(rows);
    }

    {
        ReplayStep& st = ctx.step("single.isolated-or-full",
                                  "partial columns only at members isolated within s");
        json rows = json::array();
        s_rest.for_each([&](int x) {
            const bool full_column = ctx.column_in_d(x, all_layers);
            if (!full_column)
                ctx.require(st, !g.neighbors(x).intersects(s),
                            "member " + std::to_string(x) +
                                " has a partial column and a neighbor inside s");
            rows.push_back({{"x", x}, {"column_in_d", full_column}});
        });
        st.data["checked"] = std::move(rows);
    }

    {
        ReplayStep& st = ctx.step("single.vertical-columns",
                                  "columns of private-free members are vertically dominated");
        s_rest.for_each([&](int x) {
            ctx.require(st, ctx.vert_dom_all(x, all_layers),
                        "column of " + std::to_string(x) + " is not fully vertically dominated");
        });
        st.data["checked"] = set_json(s_rest);
    }

    int column_total = 0;
    {
        ReplayStep& st = ctx.step("single.column-counts",
                                  "every member's column carries at least gamma(H) of d");
        json rows = json::array();
        s.for_each([&](int x) {
            const int cnt = ctx.count_in(ctx.column(x));
            ctx.require(st, cnt >= ctx.gamma_h,
                        "column of " + std::to_string(x) + " carries " + std::to_string(cnt) +
                            " < gamma(H)");
            column_total += cnt;
            rows.push_back({{"x", x}, {"count", cnt}});
        });
        st.data["gamma_h"] = ctx.gamma_h;
        st.data["counts"] = std::move(rows);
    }

    {
        ReplayStep& st = ctx.step("single.final-bound", "|d| >= |s|*gamma(H) >= gamma(G)*gamma(H)");
        ctx.require(st, column_total <= ctx.d.size(), "disjoint columns exceed |d|");
        ctx.require(st, ctx.d.size() >= s.size() * ctx.gamma_h, "|d| < |s|*gamma(H)");
        ctx.require(st, s.size() >= ctx.gamma_g, "|s| < gamma(G) although s dominates");
        ctx.require(st, ctx.d.size() >= ctx.gamma_g * ctx.gamma_h, "|d| < gamma(G)*gamma(H)");
        st.data["d_size"] = ctx.d.size();
        st.data["s_size"] = s.size();
        st.data["gamma_g"] = ctx.gamma_g;
        st.data["gamma_h"] = ctx.gamma_h;
    }

    ctx.rep.bound_lhs = ctx.d.size();
    ctx.rep.bound_rhs = ctx.gamma_g * ctx.gamma_h;
    ctx.rep.passed = true;
    return ctx.rep;
}

}  // namespace

ReplayReport replay_one_set(const Graph& g, const Graph& h, const VertexSet& d,
                            const VertexSet& s) {
    Ctx ctx(g, h, d, "single");
    return run_single(ctx, g, s);
}

ReplayReport replay_two_sets(const Graph& g, const Graph& h, const VertexSet& d,
                             const VertexSet& s1_in, const VertexSet& s2_in) {
    Ctx ctx(g, h, d, "pair");
    const ProductGraph& p = ctx.p;
    if (s1_in.universe() != g.n() || s2_in.universe() != g.n())
        throw UniverseMismatch("s1/s2 are not over the factor vertex set");

    // Hypothesis checks (bad data, not bugs).
    if (!is_dominating(p.graph(), d)) throw HypothesisViolated("d does not dominate the product");
    if (!is_dominating(g, s1_in)) throw HypothesisViolated("s1 does not dominate the factor");
    if (!is_dominating(g, s2_in)) throw HypothesisViolated("s2 does not dominate the factor");
    const LayerProjections proj = layer_projections(p, d);
    std::vector<bool> adm1(static_cast<std::size_t>(proj.n_layers()));
    std::vector<bool> adm2(static_cast<std::size_t>(proj.n_layers()));
    for (int hv = 0; hv < proj.n_layers(); ++hv) {
        const VertexSet& x = proj.per_layer[static_cast<std::size_t>(hv)];
        adm1[static_cast<std::size_t>(hv)] = is_minimal_dominating_containing(g, s1_in, x);
        adm2[static_cast<std::size_t>(hv)] = is_minimal_dominating_containing(g, s2_in, x);
        if (!adm1[static_cast<std::size_t>(hv)] && !adm2[static_cast<std::size_t>(hv)])
            throw HypothesisViolated("layer " + std::to_string(hv) +
                                     ": neither s1 nor s2 is a minimal dominating superset");
    }

    // Order the sides so |s1| <= |s2|.
    VertexSet s1 = s1_in, s2 = s2_in;
    if (s1.size() > s2.size()) {
        std::swap(s1, s2);
        std::swap(adm1, adm2);
        ctx.rep.swapped = true;
    }
    ctx.rep.s1_indices = s1.indices();
    ctx.rep.s2_indices = s2.indices();
    {
        ReplayStep& st = ctx.step("pair.hypothesis", "every layer admits s1 or s2 minimally");
        st.data["s1"] = set_json(s1);
        st.data["s2"] = set_json(s2);
        st.data["swapped"] = ctx.rep.swapped;
        st.data["d_size"] = d.size();
        st.data["gamma_g"] = ctx.gamma_g;
        st.data["gamma_h"] = ctx.gamma_h;
    }

    // Layer split; a layer admissible for both sides goes to T1.
    VertexSet t1(p.n_h()), t2(p.n_h());
    for (int hv = 0; hv < p.n_h(); ++hv) {
        if (adm1[static_cast<std::size_t>(hv)])
            t1.insert(hv);
        else
            t2.insert(hv);
    }
    {
        ReplayStep& st = ctx.step("pair.layer-split", "layers split by the side that admits them");
        st.data["t1"] = set_json(t1);
        st.data["t2"] = set_json(t2);
    }

    if (t1.empty() || t2.empty()) {
        // One side already covers every layer: the single-set argument
        // applies verbatim.
        const VertexSet& cover = t2.empty() ? s1 : s2;
        ReplayStep& st = ctx.step("pair.degenerate",
                                  "one side admits every layer; single-set argument applies");
        st.data["side"] = t2.empty() ? 1 : 2;
        ctx.rep.delegated = true;
        ReplayReport outer = ctx.rep;  // keep the pair prologue
        Ctx inner(g, h, d, "pair");
        run_single(inner, g, cover);
        for (ReplayStep& sub : inner.rep.steps) outer.steps.push_back(std::move(sub));
        outer.delegated = true;
        outer.swapped = ctx.rep.swapped;
        outer.s1_indices = s1.indices();
        outer.s2_indices = s2.indices();
        outer.bound_lhs = inner.rep.bound_lhs;
        outer.bound_rhs = inner.rep.bound_rhs;
        outer.passed = inner.rep.passed;
        return outer;
    }

    // A/B/C partition of each side by private-neighbor type.
    const Side side1(g, s1, s2);
    const Side side2(g, s2, s1);
    {
        ReplayStep& st = ctx.step("pair.partition", "split each side by private-neighbor type");
        ctx.require(st, (side1.a | side1.b | side1.c) == s1 && (side2.a | side2.b | side2.c) == s2,
                    "partition does not cover a side");
        ctx.require(st,
                    side1.a.size() + side1.b.size() + side1.c.size() == s1.size() &&
                        side2.a.size() + side2.b.size() + side2.c.size() == s2.size(),
                    "partition classes overlap");
        st.data["a1"] = set_json(side1.a);
        st.data["b1"] = set_json(side1.b);
        st.data["c1"] = set_json(side1.c);
        st.data["a2"] = set_json(side2.a);
        st.data["b2"] = set_json(side2.b);
        st.data["c2"] = set_json(side2.c);
    }

    const VertexSet outside_both = (s1 | s2).complement();

    // Property (i): a member with a private neighbor outside both sides has
    // its whole T_i column inside d.
    {
        ReplayStep& st = ctx.step("pair.forced-columns",
                                  "outside private neighbors force T_i columns into d");
        json rows = json::array();
        for (int sideno = 1; sideno <= 2; ++sideno) {
            const Side& sd = sideno == 1 ? side1 : side2;
            const VertexSet& ti = sideno == 1 ? t1 : t2;
            sd.a.for_each([&](int x) {
                const int y = sd.pn_out_first[static_cast<std::size_t>(x)];
                ctx.require(st, y >= 0, "A-member without outside private neighbor");
                ctx.require(st, ctx.count_in(ctx.column(y)) == 0,
                            "column of outside vertex " + std::to_string(y) + " meets d");
                ctx.require(st, ctx.column_in_d(x, ti),
                            "T" + std::to_string(sideno) + " column of " + std::to_string(x) +
                                " is not inside d");
                rows.push_back({{"side", sideno}, {"x", x}, {"private_neighbor", y}});
            });
        }
        st.data["checked"] = std::move(rows);
    }

    // Property (ii): a member with no private neighbors has its T_i column
    // inside d or no neighbor inside its own side; either way its T_i column
    // is vertically dominated.
    {
        ReplayStep& st = ctx.step("pair.no-private-dichotomy",
                                  "private-free members: column in d or isolated in own side");
        json rows = json::array();
        for (int sideno = 1; sideno <= 2; ++sideno) {
            const Side& sd = sideno == 1 ? side1 : side2;
            const VertexSet& ti = sideno == 1 ? t1 : t2;
            sd.c.for_each([&](int x) {
                const bool col = ctx.column_in_d(x, ti);
                const bool isolated = !g.neighbors(x).intersects(sd.s);
                ctx.require(st, col || isolated,
                            "private-free member " + std::to_string(x) +
                                " has a partial column and a neighbor in its side");
                ctx.require(st, ctx.vert_dom_all(x, ti),
                            "T" + std::to_string(sideno) + " column of " + std::to_string(x) +
                                " is not vertically dominated");
                rows.push_back(
                    {{"side", sideno}, {"x", x}, {"column_in_d", col}, {"isolated", isolated}});
            });
        }
        st.data["checked"] = std::move(rows);
    }

    const VertexSet bb = side1.b & side2.b;
    const VertexSet full_h = VertexSet::full(p.n_h());

    // Shared members outside B1 .. B2: case analysis by (class in side1,
    // class in side2); each case ends with the column fully vertically
    // dominated and carrying gamma(H).
    VertexSet shared = (s1 & s2) - bb;
    {
        ReplayStep& st = ctx.step("pair.shared-columns",
                                  "columns of shared members outside both B classes");
        json rows = json::array();
        auto cls = [](const Side& sd, int x) -> char {
            if (sd.a.contains(x)) return 'A';
            if (sd.b.contains(x)) return 'B';
            return 'C';
        };
        shared.for_each([&](int x) {
            const char c1 = cls(side1, x), c2 = cls(side2, x);
            const std::string label = std::string(1, c1) + "1" + std::string(1, c2) + "2";
            ctx.require(st, !(c1 == 'B' && c2 == 'B'), "B1B2 member escaped exclusion");

            auto dichotomy_against = [&](int x_, int y, const VertexSet& t_parent) {
                // Every vertex (y, h), h in the opposite layer class, is
                // dominated by (x,h) horizontally or from y's other layers.
                ctx.require(st, ctx.count_in(ctx.column_over(y, t_parent)) == 0,
                            "column of " + std::to_string(y) + " meets d over the wrong layers");
                t_parent.for_each([&](int hv) {
                    if (d.contains(p.encode(x_, hv))) return;
                    bool via_y = false;
                    h.closed_neighborhood(hv).for_each([&](int hu) {
                        if (!via_y && d.contains(p.encode(y, hu))) via_y = true;
                    });
                    ctx.require(st, via_y,
                                "(" + std::to_string(y) + "," + std::to_string(hv) +
                                    ") is dominated neither by x's column nor within its own");
                });
            };

            if (c1 == 'A' && c2 == 'A') {
                ctx.require(st, ctx.column_in_d(x, full_h),
                            "full column of " + std::to_string(x) + " is not inside d");
            } else if (c1 == 'A' && c2 == 'B') {
                ctx.require(st, ctx.column_in_d(x, t1), "T1 column not inside d");
                const int y = side2.pn_first[static_cast<std::size_t>(x)];
                ctx.require(st, y >= 0 && s1.contains(y) && !s2.contains(y),
                            "B2 witness of " + std::to_string(x) + " is not in s1 - s2");
                dichotomy_against(x, y, t2);
            } else if (c1 == 'A' && c2 == 'C') {
                ctx.require(st, ctx.column_in_d(x, t1), "T1 column not inside d");
                ctx.require(st, ctx.vert_dom_all(x, t2), "T2 column not vertically dominated");
            } else if (c1 == 'B' && c2 == 'A') {
                ctx.require(st, ctx.column_in_d(x, t2), "T2 column not inside d");
                const int y = side1.pn_first[static_cast<std::size_t>(x)];
                ctx.require(st, y >= 0 && s2.contains(y) && !s1.contains(y),
                            "B1 witness of " + std::to_string(x) + " is not in s2 - s1");
                dichotomy_against(x, y, t1);
            } else if (c1 == 'B' && c2 == 'C') {
                const int y = side1.pn_first[static_cast<std::size_t>(x)];
                ctx.require(st, y >= 0 && s2.contains(y) && g.adjacent(x, y),
                            "B1 witness of " + std::to_string(x) + " is not an s2 neighbor");
                ctx.require(st, ctx.column_in_d(x, t2),
                            "T2 column not inside d although x has an s2 neighbor");
                t1.for_each([&](int hv) {
                    if (!h.neighbors(hv).intersects(t2))
                        ctx.require(st, d.contains(p.encode(x, hv)),
                                    "(" + std::to_string(x) + "," + std::to_string(hv) +
                                        ") missing from d with no T2 neighbor layer");
                });
            } else if (c1 == 'C' && c2 == 'A') {
                ctx.require(st, ctx.column_in_d(x, t2), "T2 column not inside d");
                ctx.require(st, ctx.vert_dom_all(x, t1), "T1 column not vertically dominated");
            } else if (c1 == 'C' && c2 == 'B') {
                const int y = side2.pn_first[static_cast<std::size_t>(x)];
                ctx.require(st, y >= 0 && s1.contains(y) && g.adjacent(x, y),
                            "B2 witness of " + std::to_string(x) + " is not an s1 neighbor");
                ctx.require(st, ctx.column_in_d(x, t1),
                            "T1 column not inside d although x has an s1 neighbor");
                t2.for_each([&](int hv) {
                    if (!h.neighbors(hv).intersects(t1))
                        ctx.require(st, d.contains(p.encode(x, hv)),
                                    "(" + std::to_string(x) + "," + std::to_string(hv) +
                                        ") missing from d with no T1 neighbor layer");
                });
            } else {  // C1 C2
                ctx.require(st, ctx.vert_dom_all(x, t1), "T1 column not vertically dominated");
                ctx.require(st, ctx.vert_dom_all(x, t2), "T2 column not vertically dominated");
            }

            ctx.require(st, ctx.vert_dom_all(x, full_h),
                        "column of " + std::to_string(x) + " is not fully vertically dominated");
            const int cnt = ctx.count_in(ctx.column(x));
            ctx.require(st, cnt >= ctx.gamma_h,
                        "column of " + std::to_string(x) + " carries " + std::to_string(cnt) +
                            " < gamma(H)");
            rows.push_back({{"x", x}, {"case", label}, {"count", cnt}});
        });
        st.data["checked"] = std::move(rows);
    }

    // Members of B1 .. B2: pick a private neighbor on each side and pool
    // the three columns for 2*gamma(H).
    std::vector<std::pair<int, int>> y_of, z_of;  // (x, witness)
    VertexSet q(g.n());
    {
        ReplayStep& st = ctx.step("pair.paired-neighbors",
                                  "doubly-B members pool 2*gamma(H) over three columns");
        json rows = json::array();
        bb.for_each([&](int x) {
            const int y = side2.pn_first[static_cast<std::size_t>(x)];
            const int z = side1.pn_first[static_cast<std::size_t>(x)];
            ctx.require(st, y >= 0 && s1.contains(y) && !s2.contains(y),
                        "side-2 private neighbor of " + std::to_string(x) + " not in s1 - s2");
            ctx.require(st, z >= 0 && s2.contains(z) && !s1.contains(z),
                        "side-1 private neighbor of " + std::to_string(x) + " not in s2 - s1");
            ctx.require(st, !side1.b.contains(y),
                        "witness " + std::to_string(y) + " landed in B1");
            ctx.require(st, !side2.b.contains(z),
                        "witness " + std::to_string(z) + " landed in B2");
            ctx.require(st, ctx.count_in(ctx.column_over(y, t2)) == 0,
                        "column of " + std::to_string(y) + " meets d over T2");
            ctx.require(st, ctx.count_in(ctx.column_over(z, t1)) == 0,
                        "column of " + std::to_string(z) + " meets d over T1");
            ctx.require(st, ctx.vert_dom_all(y, t1),
                        "T1 column of " + std::to_string(y) + " not vertically dominated");
            ctx.require(st, ctx.vert_dom_all(z, t2),
                        "T2 column of " + std::to_string(z) + " not vertically dominated");
            t2.for_each([&](int hv) {
                ctx.require(st,
                            vertically_dominated(p, d, p.encode(y, hv)) ||
                                d.contains(p.encode(x, hv)),
                            "(" + std::to_string(y) + "," + std::to_string(hv) +
                                ") neither vertically dominated nor covered by x");
            });
            t1.for_each([&](int hv) {
                ctx.require(st,
                            vertically_dominated(p, d, p.encode(z, hv)) ||
                                d.contains(p.encode(x, hv)),
                            "(" + std::to_string(z) + "," + std::to_string(hv) +
                                ") neither vertically dominated nor covered by x");
            });
            const int pooled_y = ctx.count_in(ctx.column_over(x, t2) | ctx.column_over(y, t1));
            const int pooled_z = ctx.count_in(ctx.column_over(x, t1) | ctx.column_over(z, t2));
            ctx.require(st, pooled_y >= ctx.gamma_h, "pooled x/y columns fall short of gamma(H)");
            ctx.require(st, pooled_z >= ctx.gamma_h, "pooled x/z columns fall short of gamma(H)");
            const int triple =
                ctx.count_in(ctx.column(x) | ctx.column(y) | ctx.column(z));
            ctx.require(st, triple >= 2 * ctx.gamma_h,
                        "triple column group carries " + std::to_string(triple) +
                            " < 2*gamma(H)");
            y_of.emplace_back(x, y);
            z_of.emplace_back(x, z);
            q.insert(y);
            q.insert(z);
            rows.push_back({{"x", x},
                            {"y", y},
                            {"z", z},
                            {"pooled_y", pooled_y},
                            {"pooled_z", pooled_z},
                            {"triple", triple}});
        });
        // Injectivity of both witness maps.
        for (std::size_t i = 0; i < y_of.size(); ++i) {
            for (std::size_t j = i + 1; j < y_of.size(); ++j) {
                ctx.require(st, y_of[i].second != y_of[j].second, "y witness repeated");
                ctx.require(st, z_of[i].second != z_of[j].second, "z witness repeated");
            }
        }
        st.data["checked"] = std::move(rows);
    }

    {
        ReplayStep& st = ctx.step("pair.quarantine", "witness pool is disjoint from B1 and B2");
        ctx.require(st, !q.intersects(side1.b | side2.b), "witness pool meets B1 or B2");
        ctx.require(st, q.size() == 2 * bb.size(), "witness pool size differs from 2|B1&B2|");
        st.data["q"] = set_json(q);
    }

    // Mutual-private observation for B-members straddling the sides.
    {
        ReplayStep& st = ctx.step("pair.mutual-private",
                                  "straddling private pairs are mutually unique");
        json rows = json::array();
        (side1.b - s2).for_each([&](int av) {
            (side2.b - s1).for_each([&](int bv) {
                if (!private_neighbors(g, s1, av).contains(bv)) return;
                VertexSet only_b(g.n()), only_a(g.n());
                only_b.insert(bv);
                only_a.insert(av);
                ctx.require(st, private_neighbors(g, s2, bv).contains(av),
                            std::to_string(av) + " is not a private neighbor of " +
                                std::to_string(bv) + " on side 2");
                ctx.require(st, (g.neighbors(av) & (s2 - s1)) == only_b,
                            std::to_string(bv) + " is not the unique s2-s1 neighbor of " +
                                std::to_string(av));
                ctx.require(st, (g.neighbors(bv) & (s1 - s2)) == only_a,
                            std::to_string(av) + " is not the unique s1-s2 neighbor of " +
                                std::to_string(bv));
                rows.push_back({{"a", av}, {"b", bv}});
            });
        });
        st.data["pairs"] = std::move(rows);
    }

    // Matching between straddling B-members and their private neighbors.
    std::vector<std::pair<int, int>> edges;
    VertexSet matched(g.n());
    {
        ReplayStep& st = ctx.step("pair.matching",
                                  "straddling B-members matched along private edges");
        json rows = json::array();
        VertexSet used_u(g.n());
        (side1.b - s2).for_each([&](int x) {
            const int u = side1.pn_first[static_cast<std::size_t>(x)];
            ctx.require(st, u >= 0 && s2.contains(u) && !s1.contains(u),
                        "private neighbor of " + std::to_string(x) + " not in s2 - s1");
            ctx.require(st, !q.contains(u) && !q.contains(x),
                        "matching edge touches the witness pool");
            if (side2.b.contains(u)) {
                t2.for_each([&](int hv) {
                    ctx.require(st,
                                vertically_dominated(p, d, p.encode(x, hv)) ||
                                    d.contains(p.encode(u, hv)),
                                "(" + std::to_string(x) + "," + std::to_string(hv) +
                                    ") neither vertically dominated nor covered by its mate");
                });
            } else {
                ctx.require(st, ctx.vert_dom_all(u, t2),
                            "T2 column of " + std::to_string(u) + " not vertically dominated");
            }
            t1.for_each([&](int hv) {
                ctx.require(st,
                            vertically_dominated(p, d, p.encode(u, hv)) ||
                                d.contains(p.encode(x, hv)),
                            "(" + std::to_string(u) + "," + std::to_string(hv) +
                                ") neither vertically dominated nor covered by its mate");
            });
            const int pooled = ctx.count_in(ctx.column(x) | ctx.column(u));
            ctx.require(st, pooled >= ctx.gamma_h,
                        "matched columns carry " + std::to_string(pooled) + " < gamma(H)");
            edges.emplace_back(x, u);
            used_u.insert(u);
            rows.push_back({{"x", x}, {"mate", u}, {"pooled", pooled}});
        });
        const VertexSet r = (side2.b - s1) - used_u;
        r.for_each([&](int x) {
            const int w = side2.pn_first[static_cast<std::size_t>(x)];
            ctx.require(st, w >= 0 && s1.contains(w) && !s2.contains(w),
                        "private neighbor of " + std::to_string(x) + " not in s1 - s2");
            ctx.require(st, !side1.b.contains(w),
                        "unmatched B2 member found a B1 private neighbor");
            ctx.require(st, !q.contains(w) && !q.contains(x),
                        "matching edge touches the witness pool");
            ctx.require(st, ctx.vert_dom_all(w, t1),
                        "T1 column of " + std::to_string(w) + " not vertically dominated");
            t2.for_each([&](int hv) {
                ctx.require(st,
                            vertically_dominated(p, d, p.encode(w, hv)) ||
                                d.contains(p.encode(x, hv)),
                            "(" + std::to_string(w) + "," + std::to_string(hv) +
                                ") neither vertically dominated nor covered by its mate");
            });
            const int pooled = ctx.count_in(ctx.column(x) | ctx.column(w));
            ctx.require(st, pooled >= ctx.gamma_h,
                        "matched columns carry " + std::to_string(pooled) + " < gamma(H)");
            edges.emplace_back(x, w);
            rows.push_back({{"x", x}, {"mate", w}, {"pooled", pooled}});
        });
        // Matching validity.
        for (auto [a, b2v] : edges) {
            ctx.require(st, g.adjacent(a, b2v), "matched pair is not an edge");
            ctx.require(st, !matched.contains(a) && !matched.contains(b2v),
                        "matching endpoints repeat");
            matched.insert(a);
            matched.insert(b2v);
            const bool straddling = (side1.b.contains(a) && !s2.contains(a)) ||
                                    (side2.b.contains(a) && !s1.contains(a)) ||
                                    (side1.b.contains(b2v) && !s2.contains(b2v)) ||
                                    (side2.b.contains(b2v) && !s1.contains(b2v));
            ctx.require(st, straddling, "matching edge misses the straddling B-members");
        }
        ctx.require(st, ((side1.b - s2) | (side2.b - s1)).subset_of(matched),
                    "a straddling B-member is unmatched");
        ctx.require(st, !matched.intersects(q), "matching touches the witness pool");
        st.data["edges"] = std::move(rows);
    }

    // Leftover pairing across the sides.
    std::vector<std::pair<int, int>> leftover_pairs;
    std::vector<int> l1, l2;
    {
        ReplayStep& st = ctx.step("pair.leftovers",
                                  "unclaimed members pair across sides for gamma(H) each");
        l1 = (s1 - s2 - q - matched).indices();
        l2 = (s2 - s1 - q - matched).indices();
        for (int x : l1)
            ctx.require(st, !side1.b.contains(x), "leftover on side 1 is a B1 member");
        for (int x : l2)
            ctx.require(st, !side2.b.contains(x), "leftover on side 2 is a B2 member");
        ctx.require(st, l1.size() <= l2.size(),
                    "side-1 leftovers outnumber side-2 leftovers despite |s1| <= |s2|");
        json rows = json::array();
        for (std::size_t j = 0; j < l1.size(); ++j) {
            const int x = l1[j], xp = l2[j];
            ctx.require(st, ctx.vert_dom_all(x, t1),
                        "T1 column of " + std::to_string(x) + " not vertically dominated");
            ctx.require(st, ctx.vert_dom_all(xp, t2),
                        "T2 column of " + std::to_string(xp) + " not vertically dominated");
            const int pooled = ctx.count_in(ctx.column(x) | ctx.column(xp));
            ctx.require(st, pooled >= ctx.gamma_h,
                        "leftover pair carries " + std::to_string(pooled) + " < gamma(H)");
            leftover_pairs.emplace_back(x, xp);
            rows.push_back({{"x", x}, {"mate", xp}, {"pooled", pooled}});
        }
        st.data["l1"] = l1;
        st.data["l2"] = l2;
        st.data["pairs"] = std::move(rows);
    }

    // Final count over disjoint column groups.
    {
        ReplayStep& st = ctx.step("pair.counting", "|d| >= |s1|*gamma(H) >= gamma(G)*gamma(H)");
        VertexSet seen(g.n());
        int actual_sum = 0;
        auto add_group = [&](const VertexSet& cols_g) {
            ctx.require(st, !seen.intersects(cols_g), "column groups overlap");
            seen |= cols_g;
            VertexSet cols_p(p.n());
            cols_g.for_each([&](int gv) { cols_p |= ctx.column(gv); });
            actual_sum += ctx.count_in(cols_p);
        };
        for (std::size_t i = 0; i < y_of.size(); ++i) {
            VertexSet grp(g.n());
            grp.insert(y_of[i].first);
            grp.insert(y_of[i].second);
            grp.insert(z_of[i].second);
            add_group(grp);
        }
        for (auto [a, b2v] : edges) {
            VertexSet grp(g.n());
            grp.insert(a);
            grp.insert(b2v);
            add_group(grp);
        }
        shared.for_each([&](int x) {
            VertexSet grp(g.n());
            grp.insert(x);
            add_group(grp);
        });
        for (auto [x, xp] : leftover_pairs) {
            VertexSet grp(g.n());
            grp.insert(x);
            grp.insert(xp);
            add_group(grp);
        }

        const int bb_count = bb.size();
        const int m_count = static_cast<int>(edges.size());
        const int shared_count = shared.size();
        const int l1_count = static_cast<int>(l1.size());
        ctx.require(st, q.size() == 2 * bb_count, "witness pool size identity failed");
        ctx.require(st, l1_count == (s1 - s2).size() - bb_count - m_count,
                    "leftover counting identity failed");
        ctx.require(st, 2 * bb_count + m_count + shared_count + l1_count == s1.size(),
                    "group total does not reproduce |s1|");
        const int bound_sum = (2 * bb_count + m_count + shared_count + l1_count) * ctx.gamma_h;
        ctx.require(st, actual_sum >= bound_sum, "group counts fall short of their bounds");
        ctx.require(st, actual_sum <= d.size(), "disjoint groups exceed |d|");
        ctx.require(st, d.size() >= s1.size() * ctx.gamma_h, "|d| < |s1|*gamma(H)");
        ctx.require(st, s1.size() >= ctx.gamma_g, "|s1| < gamma(G) although s1 dominates");
        ctx.require(st, d.size() >= ctx.gamma_g * ctx.gamma_h, "|d| < gamma(G)*gamma(H)");
        st.data["bb"] = bb_count;
        st.data["matching"] = m_count;
        st.data["shared"] = shared_count;
        st.data["leftover_pairs"] = l1_count;
        st.data["group_bound"] = bound_sum;
        st.data["group_actual"] = actual_sum;
        st.data["d_size"] = d.size();
        st.data["s1_size"] = s1.size();
    }

    ctx.rep.bound_lhs = d.size();
    ctx.rep.bound_rhs = ctx.gamma_g * ctx.gamma_h;
    ctx.rep.passed = true;
    return ctx.rep;
}

nlohmann::ordered_json replay_json(const ReplayReport& report) {
    json j;
    j["mode"] = report.mode;
    j["passed"] = report.passed;
    j["delegated"] = report.delegated;
    j["swapped"] = report.swapped;
    j["g6_G"] = report.g6_g;
    j["g6_H"] = report.g6_h;
    j["d"] = report.d_indices;
    j["s1"] = report.s1_indices;
    if (report.s2_indices) j["s2"] = *report.s2_indices;
    j["bound_lhs"] = report.bound_lhs;
    j["bound_rhs"] = report.bound_rhs;
    json steps = json::array();
    for (const ReplayStep& st : report.steps)
        steps.push_back({{"anchor", st.anchor},
                         {"title", st.title},
                         {"passed", st.passed},
                         {"data", st.data}});
    j["steps"] = std::move(steps);
    return j;
}

std::string replay_transcript(const ReplayReport& report) {
    std::string out;
    out += "mode=" + report.mode;
    if (report.swapped) out += " (sides swapped)";
    if (report.delegated) out += " (delegated to the single-set argument)";
    out += "\n";
    for (const ReplayStep& st : report.steps) {
        out += std::string(st.passed ? "[pass] " : "[FAIL] ") + st.anchor + "  " + st.title + "\n";
    }
    out += "bound: |d| = " + std::to_string(report.bound_lhs) +
           " >= " + std::to_string(report.bound_rhs) + " = gamma(G)*gamma(H): " +
           (report.passed ? "holds" : "NOT ESTABLISHED") + "\n";
    return out;
}

}  // namespace boxdom
