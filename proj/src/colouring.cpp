#include "geoclique/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "geoclique/errors.hpp"

namespace geoclique {

int Colouring::palette_size() const {
    std::vector<int> seen(colours);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

VerifyResult is_clique_colouring(const CliqueHypergraph& h, const Colouring& c) {
    for (const auto& clique : h.cliques) {
        if (clique.size() < 2) continue;  // isolated vertices never fail
        const int first = c.colours[static_cast<std::size_t>(clique[0])];
        bool mono = true;
        for (std::size_t i = 1; i < clique.size(); ++i) {
            if (c.colours[static_cast<std::size_t>(clique[i])] != first) {
                mono = false;
                break;
            }
        }
        if (mono) return {false, clique};
    }
    return {true, std::nullopt};
}

VerifyResult is_clique_colouring(const Graph& g, const Colouring& c, const Budget& budget) {
    if (static_cast<int>(c.colours.size()) != g.order())
        throw invalid_input("colouring length does not match graph order");
    for (int v : c.colours)
        if (v < 0) throw invalid_input("colour ids must be non-negative");
    return is_clique_colouring(enumerate_maximal_cliques(g, budget), c);
}

void write_colouring_json(const Colouring& c, std::ostream& out) {
    nlohmann::json j;
    j["palette"] = c.palette_size();
    j["colours"] = c.colours;
    out << j.dump() << '\n';
}

Colouring read_colouring_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("colouring json: ") + e.what());
    }
    if (!j.contains("colours") || !j["colours"].is_array())
        throw invalid_input("colouring json: missing 'colours' array");
    Colouring c;
    c.colours = j["colours"].get<std::vector<int>>();
    for (int v : c.colours)
        if (v < 0) throw invalid_input("colouring json: negative colour id");
    if (j.contains("palette") && j["palette"].get<int>() != c.palette_size())
        throw invalid_input("colouring json: palette does not match distinct colour count");
    return c;
}

Colouring read_colouring_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    return read_colouring_json(in);
}

}  // namespace geoclique
