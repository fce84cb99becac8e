#pragma once

// SCP files: {"name"?, "facets": [{"id", "color"|null}], "vertices": [[a,b,c], ...]}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "canonical.hpp"
#include "coloring.hpp"

namespace scw {

struct ScpDoc {
    Polytope p;
    std::optional<Coloring> col;
    std::string name;

    Colored colored() const
    {
        if (!col) fail(Err::InvalidColoring, "file carries no coloring");
        return Colored(p, *col);
    }
};

// canonical labels and vertex order, so equal forms give equal bytes
inline ScpDoc canonical_doc(const Polytope& p, const Coloring* col, std::string name = {})
{
    Canonical k = canonical_form(p, col, col ? ColorMode::Exact : ColorMode::None);
    ScpDoc d;
    std::vector<Triple> tris;
    for (const Triple& t : k.triples) tris.push_back(normalized(t));
    std::sort(tris.begin(), tris.end());
    d.p = Polytope::make(p.facet_count(), std::move(tris));
    if (col) {
        Coloring c(p.facet_count());
        for (int f = 0; f < p.facet_count(); ++f) c[k.relabel[f]] = (*col)[f];
        d.col = std::move(c);
    }
    d.name = std::move(name);
    return d;
}

inline ScpDoc canonical_doc(const Colored& c, std::string name = {}) { return canonical_doc(c.p, &c.col, std::move(name)); }

inline std::string write_scp(const ScpDoc& d)
{
    nlohmann::json j = nlohmann::json::object();
    if (!d.name.empty()) j["name"] = d.name;
    nlohmann::json fs = nlohmann::json::array();
    for (int f = 0; f < d.p.facet_count(); ++f) {
        nlohmann::json e{{"id", f}};
        e["color"] = d.col ? nlohmann::json((*d.col)[f]) : nlohmann::json(nullptr);
        fs.push_back(e);
    }
    j["facets"] = fs;
    nlohmann::json vs = nlohmann::json::array();
    for (const Triple& t : d.p.vertices()) vs.push_back({t[0], t[1], t[2]});
    j["vertices"] = vs;
    return j.dump(1) + "\n";
}

inline ScpDoc read_scp(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::ParseError, std::string("not JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) fail(Err::ParseError, "top level must be an object");
        const auto& fs = j.at("facets");
        if (!fs.is_array()) fail(Err::ParseError, "facets must be a list");
        const int n = static_cast<int>(fs.size());
        std::vector<int> seen(n, 0);
        Coloring col(n, 0);
        int colored = 0;
        for (const auto& e : fs) {
            int id = e.at("id").get<int>();
            if (id < 0 || id >= n || seen[id]++) fail(Err::Malformed, "facet ids must be 0..F-1 without repeats");
            const auto& c = e.contains("color") ? e.at("color") : nlohmann::json(nullptr);
            if (!c.is_null()) {
                int x = c.get<int>();
                if (!is_color(x)) fail(Err::InvalidColoring, "colors are integers 1..7");
                col[id] = static_cast<Color>(x);
                ++colored;
            }
        }
        if (colored != 0 && colored != n) fail(Err::InvalidColoring, "either all or no facets carry colors");
        std::vector<Triple> tris;
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 3) fail(Err::Malformed, "vertices are triples");
            tris.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int>()});
        }
        ScpDoc d;
        d.p = Polytope::make(n, std::move(tris));
        if (colored) {
            if (!is_valid_coloring(d.p, col)) fail(Err::InvalidColoring, "coloring is not independent at every vertex");
            d.col = std::move(col);
        }
        if (j.contains("name")) d.name = j.at("name").get<std::string>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::ParseError, std::string("bad SCP: ") + e.what());
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::InvalidArgument, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::InvalidArgument, "cannot write " + path);
    out << text;
}

} // namespace scw
