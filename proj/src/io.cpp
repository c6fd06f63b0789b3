#include "hm/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hm/error.hpp"

namespace hm {

ordered_json to_json(const Hypergraph& h) {
  ordered_json j;
  j["n"] = h.n();
  j["k"] = h.k();
  j["edges"] = ordered_json::array();
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    j["edges"].push_back(ordered_json(std::vector<Vertex>(e.begin(), e.end())));
  }
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges")) {
      throw Error(ErrorKind::Parse, "hypergraph JSON needs fields n, k, edges");
    }
    const auto n = j.at("n").get<std::int64_t>();
    const auto k = j.at("k").get<std::int64_t>();
    if (n < 0 || k <= 0) throw Error(ErrorKind::Parse, "hypergraph JSON needs n >= 0, k > 0");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      Edge edge;
      for (const auto& v : e) {
        const auto id = v.get<std::int64_t>();
        if (id < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex id");
        edge.push_back(static_cast<Vertex>(id));
      }
      edges.push_back(std::move(edge));
    }
    return build(static_cast<std::size_t>(n), static_cast<std::size_t>(k), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("hypergraph JSON: ") + ex.what());
  }
}

std::string write_json(const Hypergraph& h) { return to_json(h).dump() + "\n"; }

std::string write_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.n() << ' ' << h.k() << ' ' << h.num_edges() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
    os << '\n';
  }
  return os.str();
}

std::string write_graph(const Hypergraph& h, GraphFormat format) {
  return format == GraphFormat::Json ? write_json(h) : write_text(h);
}

namespace {

Hypergraph read_text(const std::string& content) {
  std::istringstream is(content);
  long long n = -1, k = -1, m = -1;
  if (!(is >> n >> k >> m) || n < 0 || k <= 0 || m < 0) {
    throw Error(ErrorKind::Parse, "text hypergraph header must be 'n k m'");
  }
  std::vector<Edge> edges(static_cast<std::size_t>(m));
  for (auto& e : edges) {
    for (long long j = 0; j < k; ++j) {
      long long v = -1;
      if (!(is >> v)) throw Error(ErrorKind::Parse, "text hypergraph truncated");
      if (v < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex id");
      e.push_back(static_cast<Vertex>(v));
    }
  }
  std::string trailing;
  if (is >> trailing) throw Error(ErrorKind::Parse, "trailing data after text hypergraph");
  return build(static_cast<std::size_t>(n), static_cast<std::size_t>(k), std::move(edges));
}

}  // namespace

Hypergraph read_graph(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorKind::Parse, "empty hypergraph input");
  if (content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& ex) {
      throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + ex.what());
    }
    return hypergraph_from_json(j);
  }
  return read_text(content);
}

std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << content;
}

}  // namespace hm
