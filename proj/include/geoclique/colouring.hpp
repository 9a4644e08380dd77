#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

/// Vertex -> colour-id map. Colour ids are small non-negative integers;
/// palette_size() counts the distinct ids in use.
struct Colouring {
    std::vector<int> colours;

    int palette_size() const;
};

struct VerifyResult {
    bool ok = false;
    /// First monochromatic maximal clique found, when !ok.
    std::optional<std::vector<int>> violating_clique;
};

/// True iff every maximal clique with >= 2 vertices sees two distinct
/// colours. Isolated vertices never cause failure. Enumerates the maximal
/// cliques, so it inherits the enumeration budget.
VerifyResult is_clique_colouring(const Graph& g, const Colouring& c, const Budget& budget = {});

/// Same check against an already-enumerated hypergraph.
VerifyResult is_clique_colouring(const CliqueHypergraph& h, const Colouring& c);

/// JSON object {"palette": k, "colours": [c_0, ..., c_{n-1}]}.
void write_colouring_json(const Colouring& c, std::ostream& out);
Colouring read_colouring_json(std::istream& in);
Colouring read_colouring_json_file(const std::string& path);

}  // namespace geoclique
