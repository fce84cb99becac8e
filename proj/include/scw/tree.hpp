#pragma once

// Expression trees: elementary leaves combined by glue-type operations.

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "surgery.hpp"

namespace scw {

struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
    std::string op = "leaf"; // leaf | sharp_v | sharp_e | sharp_eve | sharp_triangle | sharp_color | natural
    // leaf
    Elementary block = Elementary::None;
    GL sigma;
    // node: result = glue(replay(base), base_locus, replay(attach), block_locus, matching);
    // natural nodes split base along base_locus (facet_split) instead
    TreePtr base, attach;
    Locus base_locus, block_locus;
    Matching matching;

    bool is_leaf() const { return op == "leaf"; }
};

inline TreePtr make_leaf(Elementary e, const GL& s)
{
    auto t = std::make_shared<Tree>();
    t->block = e;
    t->sigma = s;
    return t;
}

inline bool is_leaf_block(Elementary e)
{
    return e == Elementary::Delta0 || e == Elementary::Prism1 || e == Elementary::Prism2 ||
           e == Elementary::Prism3 || e == Elementary::Prism4;
}

inline Colored replay(const Tree& t)
{
    if (t.is_leaf()) {
        if (!is_leaf_block(t.block)) fail(Err::InvalidAttachment, "leaf is not an elementary block");
        if (!t.sigma.valid()) fail(Err::InvalidAttachment, "leaf sigma is not invertible");
        return act(t.sigma, catalog(t.block));
    }
    if (!t.base || !t.attach) fail(Err::InvalidAttachment, "node is missing a subtree");
    Colored b = replay(*t.base), a = replay(*t.attach);
    try {
        if (t.op == "natural") return undo_natural(b, t.base_locus, a);
        return glue(b, t.base_locus, a, t.block_locus, t.matching).c;
    } catch (const Error& e) {
        if (e.code() == Err::InvalidAttachment) throw;
        fail(Err::InvalidAttachment, std::string(t.op) + " no longer fits: " + e.what());
    }
}

// the same tree with every leaf sigma composed with s on the left
inline TreePtr act_tree(const GL& s, const TreePtr& t)
{
    auto out = std::make_shared<Tree>(*t);
    if (t->is_leaf()) out->sigma = s * t->sigma;
    else {
        out->base = act_tree(s, t->base);
        out->attach = act_tree(s, t->attach);
    }
    return out;
}

inline void leaf_census(const Tree& t, std::map<std::string, int>& out)
{
    if (t.is_leaf()) ++out[elementary_name(t.block)];
    else {
        leaf_census(*t.base, out);
        leaf_census(*t.attach, out);
    }
}

inline void leaves(const TreePtr& t, std::vector<TreePtr>& out)
{
    if (t->is_leaf()) out.push_back(t);
    else {
        leaves(t->base, out);
        leaves(t->attach, out);
    }
}

inline int node_count(const Tree& t) { return t.is_leaf() ? 1 : 1 + node_count(*t.base) + node_count(*t.attach); }

// ---- JSON ----

inline nlohmann::json locus_to_json(const Locus& l) { return {{"kind", kind_name(l.kind)}, {"facets", l.f}}; }

inline Locus locus_from_json(const nlohmann::json& j)
{
    static const std::map<std::string, Locus::Kind> kinds{{"vertex", Locus::Vertex},
                                                          {"edge", Locus::Edge},
                                                          {"eve", Locus::Eve},
                                                          {"facet", Locus::Facet},
                                                          {"facet_split", Locus::FacetSplit}};
    auto it = kinds.find(j.at("kind").get<std::string>());
    if (it == kinds.end()) fail(Err::ParseError, "unknown locus kind");
    return {it->second, j.at("facets").get<std::vector<int>>()};
}

inline nlohmann::json to_json(const Tree& t)
{
    if (t.is_leaf()) return {{"op", "leaf"}, {"block", elementary_name(t.block)}, {"sigma", t.sigma.to_bits()}};
    nlohmann::json m = nlohmann::json::array();
    for (auto [a, b] : t.matching) m.push_back({a, b});
    return {{"op", t.op},
            {"base", to_json(*t.base)},
            {"block", to_json(*t.attach)},
            {"base_locus", locus_to_json(t.base_locus)},
            {"block_locus", locus_to_json(t.block_locus)},
            {"matching", m}};
}

inline TreePtr tree_from_json(const nlohmann::json& j)
{
    try {
        auto t = std::make_shared<Tree>();
        t->op = j.at("op").get<std::string>();
        if (t->op == "leaf") {
            auto e = elementary_from_name(j.at("block").get<std::string>());
            if (!e) fail(Err::ParseError, "unknown block name");
            t->block = *e;
            int bits = j.at("sigma").get<int>();
            if (bits < 0 || bits >= 512) fail(Err::ParseError, "sigma out of range");
            t->sigma = GL::from_bits(bits);
            return t;
        }
        static const std::set<std::string> ops{"sharp_v", "sharp_e", "sharp_eve", "sharp_triangle", "sharp_color",
                                               "natural"};
        if (!ops.count(t->op)) fail(Err::ParseError, "unknown operation " + t->op);
        t->base = tree_from_json(j.at("base"));
        t->attach = tree_from_json(j.at("block"));
        t->base_locus = locus_from_json(j.at("base_locus"));
        t->block_locus = locus_from_json(j.at("block_locus"));
        for (auto& pr : j.at("matching")) t->matching.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
        return t;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::ParseError, std::string("bad tree: ") + e.what());
    }
}

} // namespace scw
