#include "subcomp/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

#include <json.hpp>

#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> to_natural(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::size_t expected = 0;
  std::size_t seen = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto fields = tokens(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected two integers, found " + std::to_string(fields.size()) +
                                    " fields");
    const auto first = to_natural(fields[0]);
    const auto second = to_natural(fields[1]);
    if (!first || !second) throw ParseError(line_no, "fields must be non-negative integers");

    if (!builder) {
      const std::size_t n = *first;
      if (*second > n * (n > 0 ? n - 1 : 0) / 2)
        throw ParseError(line_no, "edge count exceeds n(n-1)/2");
      builder.emplace(n);
      expected = *second;
      continue;
    }
    const std::size_t n = builder->order();
    if (seen == expected)
      throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(expected));
    if (*first >= n || *second >= n)
      throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
    const auto u = static_cast<Vertex>(*first);
    const auto v = static_cast<Vertex>(*second);
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    if (builder->adjacent(u, v))
      throw ParseError(line_no, "duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                    std::to_string(std::max(u, v)));
    builder->add_edge(u, v);
    ++seen;
  }

  if (!builder) throw ParseError(line_no + 1, "missing header line \"n m\"");
  if (seen != expected)
    throw ParseError(line_no + 1, "expected " + std::to_string(expected) + " edges, found " +
                                      std::to_string(seen));
  return std::move(*builder).build();
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string write_block_map(const ReductionInstance& inst) {
  const auto& p = inst.params;
  nlohmann::ordered_json doc;
  doc["k_prime"] = inst.k_prime;
  doc["params"] = {{"n", p.n}, {"k", p.k}, {"r", p.r}, {"s", p.s},
                   {"t", p.t}, {"a", p.a}, {"b", p.b}};
  nlohmann::ordered_json blocks = nlohmann::ordered_json::object();
  for (const Block& block : inst.blocks) blocks[block.label()] = {block.begin, block.end};
  doc["blocks"] = std::move(blocks);
  return doc.dump(2) + "\n";
}

}  // namespace subcomp
