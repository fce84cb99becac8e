#pragma once

// Reduction of a colored simple polytope to elementary blocks.
//
// The engine walks a chain of states C_0 -> C_1 -> ... where every move has
// C_i = glue(C_{i+1}, locus, block, block_locus, matching) (or, for natural
// moves, C_i = dehn_inverse(C_{i+1}, ...)). Each consumed block is reduced
// in turn, and the tree is assembled from the bottom: replaying a subtree
// yields a relabeled copy of its state, so loci are pushed through a
// color-preserving isomorphism onto the replayed labels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "tree.hpp"

namespace scw {

struct TraceEntry {
    std::string op;
    int f_before = 0, f_after = 0;
    std::vector<int> before, after; // canonical codes (exact colors)
};

struct Decomposition {
    TreePtr tree;
    std::vector<TraceEntry> trace;
    std::map<std::string, int> step_counts;
};

namespace detail {

struct Back {
    std::string op;
    Colored next;
    Locus locus;
    Colored block;
    Locus block_locus;
    Matching matching;
};

struct Built {
    TreePtr t;
    Colored r; // replay(*t)
};

inline Locus map_locus(const Locus& l, const std::vector<int>& phi)
{
    Locus out = l;
    for (int& x : out.f) x = phi.at(x);
    return out;
}

inline Back from_compression(const Outcome& o)
{
    return {o.step.op, o.result, o.step.locus, o.step.block, o.step.block_locus, o.step.matching};
}

// state c, facet f recolored: c = glue(after, facet f, prism carrying the old color)
inline Back from_recolor(const Colored& c, int f, const Outcome& o)
{
    Block b = excision_block(o.result, Locus::facet(f), c.col[f]);
    return {"sharp_color", o.result, Locus::facet(f), b.block, b.locus, b.matching};
}

// canonical processing order of facets
inline std::vector<int> facet_order(const Colored& c)
{
    Canonical k = canonical_form(c.p, &c.col, ColorMode::Exact);
    std::vector<int> ord(c.F());
    for (int f = 0; f < c.F(); ++f) ord[k.relabel[f]] = f;
    return ord;
}

inline bool compressible(const Colored& c, int f)
{
    return is_small(c.p, f) && facet_independence(c, f) == 3 && !would_degenerate(c, f);
}

class Engine {
public:
    std::vector<TraceEntry>* trace = nullptr;

    Built run(const Colored& c0)
    {
        const long cap = 50L * c0.F() * c0.F();
        long iters = 0;
        std::vector<std::pair<Colored, Back>> chain;
        Colored c = c0;
        std::optional<Built> tail;
        while (!tail) {
            if (++iters > cap) fail(Err::IterationCapExceeded, "no reduction after " + std::to_string(cap) + " steps");
            if (!c.p.is_simple()) {
                tail = normalize(c);
                break;
            }
            if (c.F() == 4) {
                tail = leaf(c);
                break;
            }
            if (c.F() == 5) {
                ElementaryMatch m = elementary_type(c);
                if (is_leaf_block(m.type)) {
                    tail = leaf(c);
                    break;
                }
            }
            std::vector<Back> moves = compressions(c);
            if (moves.empty()) {
                if (auto k = find_three_cut(c.p)) {
                    Split s = split_along_cut(c, *k);
                    log(s.join, c, s.c1);
                    Built b1 = run(s.c1), b2 = run(s.c2);
                    tail = node(c, {s.join, s.c1, s.l1, s.c2, s.l2, s.matching}, b1, b2);
                    break;
                }
            }
            if (moves.empty()) moves = case_a(c);
            if (moves.empty()) moves = case_b(c);
            if (moves.empty()) fail(Err::Stuck, "no rule applies at F=" + std::to_string(c.F()));
            for (Back& b : moves) {
                log(b.op, c, b.next);
                Colored nxt = b.next;
                chain.emplace_back(c, std::move(b));
                c = std::move(nxt);
            }
        }
        Built cur = std::move(*tail);
        for (size_t i = chain.size(); i-- > 0;) {
            const Back& b = chain[i].second;
            Built blk = normalize(b.block);
            cur = node(chain[i].first, b, cur, blk);
        }
        return cur;
    }

    // Preferred splittings of the standard blocks; anything else is decomposed.
    Built normalize(const Colored& b)
    {
        if (!b.p.is_simple()) {
            if (b.F() != 3 || b.V() != 2) fail(Err::NotABlock, "only the quarter ball may be non-simple");
            const Color t = b.col[0] ^ b.col[1] ^ b.col[2];
            Colored d(simplex3(), {b.col[0], b.col[1], b.col[2], t});
            Built l1 = leaf(d), l2 = leaf(d);
            return node(b, {"sharp_triangle", d, Locus::facet(3), d, Locus::facet(3), {{0, 0}, {1, 1}, {2, 2}}}, l1, l2);
        }
        if (b.F() == 6 && is_isomorphic(b.p, truncated_prism3())) {
            for (int f = 0; f < b.F(); ++f)
                if (b.p.degree(f) == 3)
                    if (auto o = attempt(b, f, {Plan::Triangle, -1})) return reduce_by(b, *o);
        }
        for (int m : {4, 5})
            if (b.F() == m + 2 && is_isomorphic(b.p, prism(m))) {
                const Polytope smaller = prism(m - 1);
                for (int f = 0; f < b.F(); ++f) {
                    if (b.p.degree(f) != 4) continue;
                    for (int x : {b.p.cycle(f)[0], b.p.cycle(f)[1]})
                        if (auto o = attempt(b, f, {Plan::Square, x}))
                            if (is_isomorphic(o->result.p, smaller)) return reduce_by(b, *o);
                }
            }
        return run(b);
    }

private:
    void log(const std::string& op, const Colored& from, const Colored& to)
    {
        if (!trace) return;
        trace->push_back({op, from.F(), to.F(), canonical_form(from.p, &from.col, ColorMode::Exact).code,
                          canonical_form(to.p, &to.col, ColorMode::Exact).code});
    }

    static std::optional<Outcome> attempt(const Colored& c, int f, const Plan& pl)
    {
        try {
            return compress_facet(c, f, pl);
        } catch (const Error& e) {
            if (e.code() != Err::PlanInvalid && e.code() != Err::WouldDegenerateBlock) throw;
        }
        return std::nullopt;
    }

    Built reduce_by(const Colored& b, const Outcome& o)
    {
        Back bk = from_compression(o);
        log(bk.op, b, bk.next);
        Built n = normalize(bk.next), blk = normalize(bk.block);
        return node(b, bk, n, blk);
    }

    static Built leaf(const Colored& c)
    {
        ElementaryMatch m = elementary_type(c);
        if (!is_leaf_block(m.type)) fail(Err::NotABlock, "not an elementary block");
        return {make_leaf(m.type, m.sigma), act(m.sigma, catalog(m.type))};
    }

    static Built node(const Colored& state, const Back& b, const Built& next, const Built& blk)
    {
        auto pb = colored_isomorphism(b.next, next.r);
        auto pa = colored_isomorphism(b.block, blk.r);
        if (!pb || !pa) fail(Err::Stuck, "internal: subtree replay lost its input");
        auto t = std::make_shared<Tree>();
        t->op = b.op;
        t->base = next.t;
        t->attach = blk.t;
        t->base_locus = map_locus(b.locus, *pb);
        t->block_locus = map_locus(b.block_locus, *pa);
        for (auto [x, y] : b.matching) t->matching.emplace_back((*pb)[x], (*pa)[y]);
        std::sort(t->matching.begin(), t->matching.end());
        Colored r;
        if (b.op == "natural") {
            // either side of the split facet works up to isomorphism; keep the one that does
            for (int swap = 0; swap < 2; ++swap) {
                if (swap) std::swap(t->base_locus.f[1], t->base_locus.f[2]);
                r = undo_natural(next.r, t->base_locus, blk.r);
                if (same_colored(state, r)) break;
            }
        } else {
            r = glue(next.r, t->base_locus, blk.r, t->block_locus, t->matching).c;
        }
        if (!same_colored(state, r)) fail(Err::Stuck, "internal: " + b.op + " node does not rebuild its state");
        return {t, std::move(r)};
    }

    static std::vector<Back> compressions(const Colored& c)
    {
        auto ord = facet_order(c);
        for (int f : ord)
            if (compressible(c, f))
                if (auto o = try_direct(c, f)) return {from_compression(*o)};
        for (int f : ord) {
            if (!compressible(c, f)) continue;
            try {
                return as_backs(c, compress(c, f));
            } catch (const Error& e) {
                if (e.code() != Err::SearchExhausted) throw;
            }
        }
        return {};
    }

    // translate a move sequence from compress() into backward records
    static std::vector<Back> as_backs(const Colored& c0, const std::vector<Outcome>& seq)
    {
        std::vector<Back> out;
        Colored c = c0;
        for (const Outcome& o : seq) {
            if (o.step.inverse) out.push_back(from_compression(o));
            else out.push_back(from_recolor(c, o.step.locus.f[0], o));
            c = o.result;
        }
        return out;
    }

    // adjacent big facets: merge the two end facets by a natural move
    static std::vector<Back> case_a(const Colored& c)
    {
        const Polytope& p = c.p;
        auto ord = facet_order(c);
        std::vector<int> rank(c.F());
        for (int i = 0; i < c.F(); ++i) rank[ord[i]] = i;
        auto edges = p.edges();
        std::sort(edges.begin(), edges.end(), [&](auto x, auto y) {
            return std::minmax(rank[x.first], rank[x.second]) < std::minmax(rank[y.first], rank[y.second]);
        });
        for (auto [a, b] : edges) {
            if (!is_big(p, a) || !is_big(p, b)) continue;
            int C = p.third(a, b), D = p.third(b, a);
            if (C == D || p.adjacent(C, D)) continue;
            bool dbl = false;
            for (int x : p.cycle(C))
                if (x != a && x != b && p.adjacent(x, D)) dbl = true;
            if (dbl) continue;
            std::vector<std::pair<int, Color>> recolors;
            if (c.col[C] != c.col[D]) recolors = {{D, c.col[C]}, {C, c.col[D]}};
            else recolors = {{-1, 0}};
            for (auto [g, x] : recolors) {
                std::vector<Back> out;
                Colored cur = c;
                if (g >= 0) {
                    auto ok = valid_recolors(c, g);
                    if (std::find(ok.begin(), ok.end(), x) == ok.end()) continue;
                    Outcome o = recolor(c, g, x);
                    out.push_back(from_recolor(c, g, o));
                    cur = o.result;
                }
                Outcome o = dehn(cur, a, b);
                if (!o.result.p.is_simple()) continue;
                const int D2 = o.step.matching[3].first;
                auto map = drop_map(cur.F(), D2);
                out.push_back({"natural", o.result, Locus::facet_split(map[C], map[a], map[b]), o.step.block,
                               o.step.block_locus, {}});
                return out;
            }
        }
        return {};
    }

    // recolor a facet so that some small facet turns 3-independent, then compress
    static std::vector<Back> case_b(const Colored& c)
    {
        const Polytope& p = c.p;
        auto ord = facet_order(c);
        for (int pass = 0; pass < 2; ++pass)
            for (int f : ord) {
                if (!is_small(p, f) || facet_independence(c, f) != 2) continue;
                for (int n : p.cycle(f)) {
                    if (pass == 0 && (!is_small(p, n) || facet_independence(c, n) != 2)) continue;
                    for (Color x : valid_recolors(c, n)) {
                        if (x == c.col[n]) continue;
                        Outcome o = recolor(c, n, x);
                        if (facet_independence(o.result, f) != 3) continue;
                        auto rest = compressions(o.result);
                        if (rest.empty()) continue;
                        std::vector<Back> out{from_recolor(c, n, o)};
                        for (auto& r : rest) out.push_back(std::move(r));
                        return out;
                    }
                }
            }
        return {};
    }
};

} // namespace detail

inline Decomposition decompose(const Colored& c)
{
    if (!c.p.is_simple()) fail(Err::NotSimplePolytope, "decompose needs a simple polytope");
    // work in the GL-normal canonical frame, then move the leaves back
    Canonical k = canonical_form(c.p, &c.col, ColorMode::GLNormal);
    Coloring col(c.F());
    for (int f = 0; f < c.F(); ++f) col[k.relabel[f]] = k.sigma(c.col[f]);
    Colored c0(Polytope::make(c.F(), k.triples), std::move(col));
    Decomposition d;
    detail::Engine eng;
    eng.trace = &d.trace;
    detail::Built b = eng.run(c0);
    d.tree = act_tree(k.sigma.inverse(), b.t);
    for (auto& e : d.trace) ++d.step_counts[e.op];
    return d;
}

inline bool is_standard_block(const Colored& b)
{
    if (!b.p.is_simple()) return b.F() == 3 && b.V() == 2;
    const Polytope& p = b.p;
    return (b.F() == 4) || (b.F() == 5 && is_isomorphic(p, prism(3))) ||
           (b.F() == 6 && (is_isomorphic(p, truncated_prism3()) || is_isomorphic(p, prism(4)))) ||
           (b.F() == 7 && is_isomorphic(p, prism(5)));
}

inline TreePtr normalize_blocks(const Colored& b)
{
    if (!is_standard_block(b)) fail(Err::NotABlock, "not one of the standard blocks");
    detail::Engine eng;
    return eng.normalize(b).t;
}

// does the tree root split the block as base (op) attach with the given shapes?
inline bool root_splits_as(const Tree& t, const std::string& op, const Polytope& base, const Polytope& attach)
{
    if (t.is_leaf() || t.op != op) return false;
    return is_isomorphic(replay(*t.base).p, base) && is_isomorphic(replay(*t.attach).p, attach);
}

} // namespace scw
