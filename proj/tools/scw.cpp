// scw: command-line front end.
// Exit codes: 0 ok, 1 domain error (named), 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "scw/scw.hpp"

using namespace scw;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer list: " + s);
        } catch (const std::logic_error&) {
            throw UsageError("bad integer list: " + s);
        }
    }
    return out;
}

// vertex:a,b,c | edge:a,b | eve:f,a,b,c | facet:f
Locus parse_locus(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("locus needs kind:ids");
    std::string kind = s.substr(0, colon);
    auto ids = parse_ints(s.substr(colon + 1));
    auto need = [&](size_t n) {
        if (ids.size() != n) throw UsageError("wrong number of facets in locus " + s);
    };
    if (kind == "vertex") return need(3), Locus::vertex(ids[0], ids[1], ids[2]);
    if (kind == "edge") return need(2), Locus::edge(ids[0], ids[1]);
    if (kind == "eve") return need(4), Locus::eve(ids[0], {ids[1], ids[2], ids[3]});
    if (kind == "facet") return need(1), Locus::facet(ids[0]);
    throw UsageError("unknown locus kind " + kind);
}

// uncolored builtins and the colored catalog entries
ScpDoc builtin(const std::string& name)
{
    ScpDoc d;
    d.name = name;
    if (auto e = elementary_from_name(name)) {
        Colored c = catalog(*e);
        d.p = c.p;
        d.col = c.col;
        return d;
    }
    if (name == "simplex") d.p = simplex3();
    else if (name == "truncprism") d.p = truncated_prism3();
    else if (name == "oslash") d.p = oslash();
    else if (name.rfind("prism:", 0) == 0 || (name.rfind("prism", 0) == 0 && name.size() > 5 && isdigit(name[5]))) {
        auto ids = parse_ints(name.substr(name[5] == ':' ? 6 : 5));
        if (ids.size() != 1 || ids[0] < 3) throw UsageError("prism needs m >= 3");
        d.p = prism(ids[0]);
    } else throw UsageError("unknown builtin " + name);
    return d;
}

ScpDoc load(const std::string& input, const std::string& built)
{
    if (!built.empty()) return builtin(built);
    if (input.empty()) throw UsageError("--input or --builtin required");
    return read_scp(read_file(input));
}

void emit_scp(const ScpDoc& d, const std::string& output)
{
    std::string text = write_scp(d.col ? canonical_doc(d.p, &*d.col, d.name) : canonical_doc(d.p, nullptr, d.name));
    if (output.empty()) std::cout << text;
    else write_file(output, text);
}

void report(const std::string& k, const std::string& v) { std::cout << k << "=" << v << "\n"; }
void report(const std::string& k, long v) { report(k, std::to_string(v)); }

std::string join(const std::vector<int>& v, char sep = ',')
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

void outcome_summary(const Outcome& o)
{
    std::cerr << "dV=" << o.dV << " dE=" << o.dE << " dF=" << o.dF << " 3-connected=" << o.still_3_connected
              << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Colored simple 3-polytopes and their small covers"};
    app.require_subcommand(1);
    std::string input, output, built;
    std::uint64_t seed = 1;

    auto common = [&](CLI::App* c) {
        c->add_option("--input,-i", input, "SCP file");
        c->add_option("--builtin,-b", built, "simplex | prism:m | truncprism | oslash | <elementary name>");
    };

    auto* validate = app.add_subcommand("validate", "check an SCP file");
    common(validate);

    auto* stats = app.add_subcommand("stats", "f-vector, h-vector and facet degrees");
    common(stats);

    auto* colorings = app.add_subcommand("colorings", "enumerate colorings");
    common(colorings);
    std::string up_to = "raw";
    bool count_only = false, distinct_caps = false;
    colorings->add_option("--up-to", up_to, "raw | gl | gl+aut | gl+rot | gl+sides")
        ->check(CLI::IsMember({"raw", "gl", "gl+aut", "gl+rot", "gl+sides"}));
    colorings->add_flag("--count", count_only, "print only the number");
    colorings->add_flag("--distinct-caps", distinct_caps,
                        "prisms: top and bottom 2-independent with different colors");

    auto* op = app.add_subcommand("op", "apply one operation");
    common(op);
    std::string op_kind, locus_s, input2, locus2_s, sides_s;
    int facet = -1, color = 0;
    bool strict_mode = false;
    op->add_option("kind", op_kind, "truncate | dehn | dehn-inverse | recolor | sharp-v | sharp-triangle")
        ->required()
        ->check(CLI::IsMember({"truncate", "dehn", "dehn-inverse", "recolor", "sharp-v", "sharp-triangle"}));
    op->add_option("--locus", locus_s, "vertex:a,b,c | edge:a,b | eve:f,a,b,c | facet:f");
    op->add_option("--input2", input2, "second SCP file (sharp-v, sharp-triangle)");
    op->add_option("--locus2", locus2_s, "locus in the second file");
    op->add_option("--facet", facet, "facet id");
    op->add_option("--sides", sides_s, "A,B for dehn-inverse");
    op->add_option("--color", color, "new color (0 = automatic)");
    op->add_flag("--strict", strict_mode, "recolor only small 2-independent facets");
    op->add_option("--output,-o", output, "write the result here");

    auto* compress_cmd = app.add_subcommand("compress", "compress a small facet");
    common(compress_cmd);
    std::string plan_s;
    compress_cmd->add_option("--facet", facet, "facet id")->required();
    compress_cmd->add_option("--plan", plan_s, "triangle | square:N1 | pentagon:N1 (default: search)");
    compress_cmd->add_option("--output,-o", output, "write the result here");

    auto* dec = app.add_subcommand("decompose", "expression tree over elementary blocks");
    common(dec);
    std::string tree_path;
    bool replay_check = false;
    dec->add_option("--tree", tree_path, "write the tree (JSON)");
    dec->add_flag("--replay-check", replay_check, "replay the tree and compare");

    auto* rep = app.add_subcommand("replay", "rebuild a colored polytope from a tree");
    rep->add_option("--tree", tree_path, "tree JSON")->required();
    rep->add_option("--output,-o", output, "write the result here");

    auto* cob = app.add_subcommand("cobordism", "fixed-point signature");
    common(cob);
    bool span_dim = false;
    cob->add_flag("--span-dim", span_dim, "dimension spanned by the elementary generators");

    auto* hom = app.add_subcommand("homology", "mod 2 Betti numbers of the small cover");
    common(hom);

    auto* sec = app.add_subcommand("section", "surface over a section");
    common(sec);
    std::string colors_s;
    sec->add_option("--colors", colors_s, "cyclic color list");
    sec->add_option("--locus", locus_s, "locus in the input");

    auto* gen = app.add_subcommand("gen", "write a polytope");
    std::string kind, coloring_mode = "none";
    int ops = 8;
    gen->add_option("kind", kind, "simplex | prism:m | truncprism | oslash | random | <elementary name>")->required();
    gen->add_option("--coloring", coloring_mode, "none | random | enumerate-first")
        ->check(CLI::IsMember({"none", "random", "enumerate-first"}));
    gen->add_option("--ops", ops, "excisions for random");
    gen->add_option("--seed", seed, "seed");
    gen->add_option("--output,-o", output, "write here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            ScpDoc d = load(input, built);
            report("valid", 1);
            report("simple", d.p.is_simple());
            report("V", d.p.vertex_count());
            report("E", d.p.edge_count());
            report("F", d.p.facet_count());
            report("colored", d.col.has_value());
        } else if (*stats) {
            ScpDoc d = load(input, built);
            PolytopeStats s = d.p.stats();
            report("V", s.V);
            report("E", s.E);
            report("F", s.F);
            report("h", join({s.h[0], s.h[1], s.h[2], s.h[3]}));
            report("degrees", join(s.degrees));
        } else if (*colorings) {
            ScpDoc d = load(input, built);
            Symmetry sym = up_to == "gl+aut" ? Symmetry::Full
                           : up_to == "gl+rot" ? Symmetry::Rotations
                           : up_to == "gl+sides" ? Symmetry::PrismSides
                                                 : Symmetry::Trivial;
            std::function<bool(const Coloring&)> keep;
            if (distinct_caps) {
                if (d.p.facet_count() < 5 || !is_isomorphic(d.p, prism(d.p.facet_count() - 2)) ||
                    !(d.p == prism(d.p.facet_count() - 2)))
                    throw UsageError("--distinct-caps needs the prism builtin");
                keep = [&](const Coloring& c) {
                    Colored k(d.p, c);
                    return c[0] != c[1] && facet_independence(k, 0) == 2 && facet_independence(k, 1) == 2;
                };
            }
            std::vector<Coloring> out;
            if (up_to == "raw") {
                for (auto& c : enumerate_raw(d.p))
                    if (!keep || keep(c)) out.push_back(c);
            } else out = enumerate_colorings(d.p, sym, keep);
            if (count_only) std::cout << out.size() << "\n";
            else
                for (auto& c : out) std::cout << join(std::vector<int>(c.begin(), c.end())) << "\n";
        } else if (*op) {
            ScpDoc d = load(input, built);
            Colored c = d.colored();
            Colored result;
            if (op_kind == "truncate") {
                Outcome o = truncate(c, parse_locus(locus_s), static_cast<Color>(color));
                outcome_summary(o);
                result = o.result;
            } else if (op_kind == "dehn") {
                Locus l = parse_locus(locus_s);
                if (l.kind != Locus::Edge) throw UsageError("dehn takes edge:A,B");
                Outcome o = dehn(c, l.f[0], l.f[1]);
                outcome_summary(o);
                result = o.result;
            } else if (op_kind == "dehn-inverse") {
                auto s = parse_ints(sides_s);
                if (s.size() != 2) throw UsageError("--sides A,B required");
                Outcome o = dehn_inverse(c, facet, s[0], s[1]);
                outcome_summary(o);
                result = o.result;
            } else if (op_kind == "recolor") {
                if (!is_color(color)) throw UsageError("--color 1..7 required");
                Outcome o = recolor(c, facet, static_cast<Color>(color), strict_mode);
                result = o.result;
            } else {
                if (input2.empty()) throw UsageError("--input2 required");
                Colored c2 = read_scp(read_file(input2)).colored();
                Locus l1 = parse_locus(locus_s), l2 = parse_locus(locus2_s);
                Outcome o = op_kind == "sharp-v" ? sharp_v(c, l1, c2, l2)
                                                 : (l1.kind != Locus::Facet || l2.kind != Locus::Facet
                                                        ? throw UsageError("sharp-triangle takes facet loci")
                                                        : sharp_triangle(c, l1.f[0], c2, l2.f[0]));
                outcome_summary(o);
                result = o.result;
            }
            ScpDoc out;
            out.p = result.p;
            out.col = result.col;
            emit_scp(out, output);
        } else if (*compress_cmd) {
            Colored c = load(input, built).colored();
            std::vector<Outcome> moves;
            if (plan_s.empty()) moves = compress(c, facet);
            else {
                Plan pl;
                if (plan_s == "triangle") pl = {Plan::Triangle, -1};
                else if (plan_s.rfind("square:", 0) == 0) pl = {Plan::Square, parse_ints(plan_s.substr(7)).at(0)};
                else if (plan_s.rfind("pentagon:", 0) == 0) pl = {Plan::Pentagon, parse_ints(plan_s.substr(9)).at(0)};
                else throw UsageError("unknown plan " + plan_s);
                moves.push_back(compress_facet(c, facet, pl));
            }
            for (auto& m : moves) std::cerr << (m.step.inverse ? "compress " : "recolor ") << m.step.op << "\n";
            ScpDoc out;
            out.p = moves.back().result.p;
            out.col = moves.back().result.col;
            emit_scp(out, output);
        } else if (*dec) {
            Colored c = load(input, built).colored();
            Decomposition d = decompose(c);
            if (!tree_path.empty()) write_file(tree_path, to_json(*d.tree).dump(1) + "\n");
            if (replay_check) {
                Colored r = replay(*d.tree);
                std::cout << "replay: " << (same_colored(r, c) ? "OK" : "MISMATCH") << "\n";
            }
            std::map<std::string, int> census;
            leaf_census(*d.tree, census);
            for (auto& [k, v] : census) report("leaf." + k, v);
            for (auto& [k, v] : d.step_counts) report("step." + k, v);
            report("nodes", node_count(*d.tree));
        } else if (*rep) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_file(tree_path));
            } catch (const nlohmann::json::exception& e) {
                fail(Err::ParseError, e.what());
            }
            Colored r = replay(*tree_from_json(j));
            ScpDoc out;
            out.p = r.p;
            out.col = r.col;
            emit_scp(out, output);
        } else if (*cob) {
            if (span_dim) std::cout << generator_span_dimension() << "\n";
            else {
                Signature s = signature(load(input, built).colored());
                report("class", to_hex(s));
                report("null", s.none());
                for (auto& t : odd_triples(s)) report("odd", join({t[0], t[1], t[2]}));
            }
        } else if (*hom) {
            Colored c = load(input, built).colored();
            CellComplex X = build_cell_complex(c);
            auto b = z2_betti(X);
            report("cells", join({X.counts[0], X.counts[1], X.counts[2], X.counts[3]}));
            report("euler", X.euler());
            report("betti", join({b[0], b[1], b[2], b[3]}));
            report("fixed_points", fixed_point_count(c));
        } else if (*sec) {
            std::vector<Color> cols;
            if (!colors_s.empty())
                for (int x : parse_ints(colors_s)) cols.push_back(static_cast<Color>(x));
            else {
                if (locus_s.empty()) throw UsageError("--colors or --locus required");
                cols = section_colors(load(input, built).colored(), parse_locus(locus_s));
            }
            for (Color x : cols)
                if (!is_color(x)) fail(Err::InvalidSection, "colors are 1..7");
            SectionReport r = section_surface(cols);
            report("components", r.components);
            report("euler_per_component", r.euler_per_component);
            report("orientable", r.orientable);
        } else if (*gen) {
            ScpDoc d;
            if (kind == "random") {
                if (ops < 0) throw UsageError("--ops must be >= 0");
                d.p = random_polytope(ops, seed);
                d.name = "random";
            } else d = builtin(kind);
            if (coloring_mode == "random") d.col = random_coloring(d.p, seed).col;
            else if (coloring_mode == "enumerate-first") d.col = first_coloring(d.p).col;
            else if (!elementary_from_name(kind)) d.col.reset();
            emit_scp(d, output);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
