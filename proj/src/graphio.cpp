#include "dpm/graphio.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace dpm {

namespace {

struct VertexLine {
  long id;
  std::vector<long> darts;
};

struct EdgeLine {
  long id;
  long tail_dart;
  long head_dart;
  Rat weight;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void invalid(int line, const std::string& what) {
  throw InvariantViolation("line " + std::to_string(line) + ": " + what);
}

}  // namespace

RibbonGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string name;
  long declared_genus = -1;
  int genus_line = 0;
  std::vector<VertexLine> vertices;
  std::vector<EdgeLine> edges;

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "name") {
      std::string rest;
      std::getline(ls, rest);
      const auto start = rest.find_first_not_of(" \t");
      name = (start == std::string::npos) ? "" : rest.substr(start);
    } else if (kw == "genus") {
      if (!(ls >> declared_genus) || declared_genus < 0)
        fail(lineno, "genus expects a nonnegative integer");
      genus_line = lineno;
    } else if (kw == "vertex") {
      VertexLine v;
      if (!(ls >> v.id) || v.id < 0) fail(lineno, "vertex expects an id");
      long d;
      while (ls >> d) {
        if (d < 0) fail(lineno, "negative dart id");
        v.darts.push_back(d);
      }
      if (!ls.eof()) fail(lineno, "malformed dart list");
      vertices.push_back(std::move(v));
    } else if (kw == "edge") {
      EdgeLine e;
      std::string wstr;
      if (!(ls >> e.id >> e.tail_dart >> e.head_dart >> wstr) || e.id < 0 ||
          e.tail_dart < 0 || e.head_dart < 0)
        fail(lineno, "edge expects: id tail-dart head-dart weight");
      if (!rat_from_string(wstr, e.weight))
        fail(lineno, "bad weight '" + wstr + "'");
      if (!(e.weight > 0)) invalid(lineno, "weight must be positive");
      if (e.tail_dart == e.head_dart)
        invalid(lineno, "edge darts must be distinct");
      edges.push_back(std::move(e));
    } else {
      fail(lineno, "unknown statement '" + kw + "'");
    }
  }
  if (vertices.empty()) throw ParseError("no vertex statements");

  std::sort(vertices.begin(), vertices.end(),
            [](const VertexLine& a, const VertexLine& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(),
            [](const EdgeLine& a, const EdgeLine& b) { return a.id < b.id; });
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i].id == vertices[i - 1].id)
      throw InvariantViolation("duplicate vertex id " +
                               std::to_string(vertices[i].id));
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id)
      throw InvariantViolation("duplicate edge id " +
                               std::to_string(edges[i].id));

  // Map external dart ids: dart of edge e -> 2e (tail) / 2e+1 (head).
  std::map<long, int> dart_map;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (!dart_map.emplace(edges[e].tail_dart, 2 * static_cast<int>(e)).second)
      throw InvariantViolation("dart " + std::to_string(edges[e].tail_dart) +
                               " used by two edges");
    if (!dart_map.emplace(edges[e].head_dart, 2 * static_cast<int>(e) + 1)
             .second)
      throw InvariantViolation("dart " + std::to_string(edges[e].head_dart) +
                               " used by two edges");
  }

  std::vector<std::vector<int>> rotation(vertices.size());
  std::vector<char> seen(2 * edges.size(), 0);
  for (size_t v = 0; v < vertices.size(); ++v) {
    for (long d : vertices[v].darts) {
      const auto it = dart_map.find(d);
      if (it == dart_map.end())
        throw InvariantViolation("dart " + std::to_string(d) +
                                 " at vertex " + std::to_string(vertices[v].id) +
                                 " belongs to no edge");
      if (seen[it->second])
        throw InvariantViolation("dart " + std::to_string(d) +
                                 " listed twice");
      seen[it->second] = 1;
      rotation[v].push_back(it->second);
    }
  }
  for (size_t e = 0; e < edges.size(); ++e)
    for (int half = 0; half < 2; ++half)
      if (!seen[2 * e + half])
        throw InvariantViolation(
            "edge " + std::to_string(edges[e].id) +
            " has a dart missing from every vertex rotation");

  std::vector<Rat> weights;
  weights.reserve(edges.size());
  for (const auto& e : edges) weights.push_back(e.weight);

  RibbonGraph g(std::move(rotation), std::move(weights), name);
  if (!g.is_connected())
    throw InvariantViolation("graph is not connected");
  if (declared_genus >= 0 && genus(g) != declared_genus)
    invalid(genus_line, "declared genus " + std::to_string(declared_genus) +
                            " but computed " + std::to_string(genus(g)));
  return g;
}

RibbonGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const RibbonGraph& g) {
  std::ostringstream os;
  if (!g.name().empty()) os << "name " << g.name() << "\n";
  os << "genus " << genus(g) << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "vertex " << v;
    for (int d : g.rotation(v)) os << " " << d;
    os << "\n";
  }
  for (int e = 0; e < g.num_edges(); ++e)
    os << "edge " << e << " " << 2 * e << " " << 2 * e + 1 << " "
       << rat_to_string(g.weight(e)) << "\n";
  return os.str();
}

namespace {

std::vector<Rat> fill_weights(std::vector<Rat> w, int count,
                              const char* what) {
  if (w.empty()) w.assign(count, Rat(1));
  if (static_cast<int>(w.size()) != count)
    throw BadParams(std::string(what) + " expects " + std::to_string(count) +
                    " weights, got " + std::to_string(w.size()));
  return w;
}

}  // namespace

RibbonGraph bouquet(int g, std::vector<Rat> weights) {
  if (g < 1) throw BadParams("bouquet requires genus >= 1");
  std::vector<Rat> w = fill_weights(std::move(weights), 2 * g, "bouquet");
  std::vector<int> rot;
  for (int i = 0; i < g; ++i) {
    const int a = 2 * i, b = 2 * i + 1;  // edge ids
    rot.push_back(2 * a);
    rot.push_back(2 * b);
    rot.push_back(2 * a + 1);
    rot.push_back(2 * b + 1);
  }
  return RibbonGraph({rot}, std::move(w), "bouquet_" + std::to_string(g));
}

RibbonGraph torus_grid(int m, int n, std::vector<Rat> weights) {
  if (m < 2 || n < 2) throw BadParams("torus_grid requires m, n >= 2");
  const int V = m * n;
  std::vector<Rat> w = fill_weights(std::move(weights), 2 * V, "torus_grid");
  auto vid = [&](int i, int j) { return ((i % m) + m) % m + m * (((j % n) + n) % n); };
  auto east = [&](int i, int j) { return vid(i, j); };           // edge ids
  auto north = [&](int i, int j) { return V + vid(i, j); };
  std::vector<std::vector<int>> rot(V);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      auto& r = rot[vid(i, j)];
      r.push_back(2 * east(i, j));           // outgoing east
      r.push_back(2 * north(i, j));          // outgoing north
      r.push_back(2 * east(i - 1, j) + 1);   // incoming from the west
      r.push_back(2 * north(i, j - 1) + 1);  // incoming from the south
    }
  return RibbonGraph(std::move(rot), std::move(w),
                     "torus_grid_" + std::to_string(m) + "x" +
                         std::to_string(n));
}

std::vector<Rat> random_weights(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rat> w;
  w.reserve(count);
  for (int i = 0; i < count; ++i) {
    const auto p = 1 + rng() % 10;
    const auto q = 1 + rng() % 10;
    w.emplace_back(Int(p), Int(q));
  }
  return w;
}

}  // namespace dpm
