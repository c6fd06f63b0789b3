#ifndef HM_IO_HPP
#define HM_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hm/hypergraph.hpp"

namespace hm {

using ordered_json = nlohmann::ordered_json;

enum class GraphFormat { Json, Text };

/// {"n":..,"k":..,"edges":[[..],..]}; edges in canonical order.
ordered_json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// Compact JSON followed by a newline.
std::string write_json(const Hypergraph& h);
/// "n k m" header then one line of k space-separated ids per edge.
std::string write_text(const Hypergraph& h);
std::string write_graph(const Hypergraph& h, GraphFormat format);

/// Detects the format from the first non-blank character ('{' means JSON).
/// Malformed input throws Error(Parse); structural violations throw the
/// errors of `build`.
Hypergraph read_graph(const std::string& content);

/// "-" means standard input / output.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hm

#endif
