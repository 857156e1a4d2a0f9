#include "pairclust/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pairclust/error.hpp"

namespace pairclust::io {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::uint64_t to_uint(std::string_view s, std::size_t line) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Parses "key=<uint>".
std::uint64_t header_field(std::string_view field, std::string_view key, std::size_t line) {
  field = trim(field);
  if (field.size() <= key.size() + 1 || field.substr(0, key.size()) != key || field[key.size()] != '=') {
    fail(line, "expected header field '" + std::string(key) + "=<count>'");
  }
  return to_uint(field.substr(key.size() + 1), line);
}

Item to_item(std::string_view s, std::size_t n, std::size_t line) {
  std::uint64_t v = to_uint(s, line);
  if (v >= n) fail(line, "item id " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  return static_cast<Item>(v);
}

struct GraphData {
  std::size_t n = 0;
  std::vector<Pair> pairs;
};

GraphData read_graph_data(std::istream& is) {
  GraphData data;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(is, raw)) {
    ++line;
    std::string_view text = trim(raw);
    if (text.empty()) continue;
    if (!have_header) {
      std::uint64_t n = header_field(text, "n", line);
      if (n > std::numeric_limits<Item>::max()) fail(line, "n too large");
      data.n = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    auto fields = split(text, ',');
    if (fields.size() != 2) fail(line, "expected 'u,v'");
    data.pairs.push_back(Pair::make(to_item(fields[0], data.n, line), to_item(fields[1], data.n, line)));
  }
  if (!have_header) throw Error("graph file is missing the 'n=<count>' header");
  return data;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void write_clustering(std::ostream& os, const Clustering& c) {
  for (std::size_t v = 0; v < c.size(); ++v) os << v << '\t' << c.label(static_cast<Item>(v)) << '\n';
}

Clustering read_clustering(std::istream& is) {
  std::vector<std::pair<std::uint64_t, std::string>> rows;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string_view text = trim(raw);
    if (text.empty()) continue;
    auto tab = text.find('\t');
    if (tab == std::string_view::npos) fail(line, "expected '<item_id>\\t<cluster_id>'");
    std::string_view label = trim(text.substr(tab + 1));
    if (label.empty() || label.find('\t') != std::string_view::npos) fail(line, "malformed cluster id");
    rows.emplace_back(to_uint(text.substr(0, tab), line), std::string(label));
  }
  if (rows.empty()) throw Error("clustering file is empty");
  const std::size_t n = rows.size();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(n, kUnset);
  std::unordered_map<std::string, std::uint32_t> ids;
  for (const auto& [item, label] : rows) {
    if (item >= n) throw Error("item id " + std::to_string(item) + " out of range: ids must be 0..n-1");
    if (labels[item] != kUnset) throw Error("item id " + std::to_string(item) + " listed twice");
    auto [it, inserted] = ids.try_emplace(label, static_cast<std::uint32_t>(ids.size()));
    labels[item] = it->second;
  }
  return Clustering::from_labels(std::span<const std::uint32_t>(labels));
}

void write_graph(std::ostream& os, std::size_t n, std::span<const Pair> pairs) {
  os << "n=" << n << '\n';
  for (const Pair& p : pairs) os << p.u << ',' << p.v << '\n';
}

void write_graph(std::ostream& os, const SimilarityGraph& g) { write_graph(os, g.size(), g.pairs()); }

void write_graph(std::ostream& os, const SideInfoGraph& g) { write_graph(os, g.size(), g.edges()); }

SimilarityGraph read_similarity_graph(std::istream& is) {
  auto data = read_graph_data(is);
  return SimilarityGraph(data.n, data.pairs);
}

SideInfoGraph read_side_info_graph(std::istream& is) {
  auto data = read_graph_data(is);
  return SideInfoGraph(data.n, data.pairs);
}

void write_training_set(std::ostream& os, const TrainingSet& s) {
  os << "n=" << s.item_count() << ",m=" << s.size() << '\n';
  for (const auto& e : s.entries()) os << e.v << ',' << e.w << ',' << static_cast<int>(e.y) << '\n';
}

TrainingSet read_training_set(std::istream& is) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::vector<LabeledPair> entries;
  while (std::getline(is, raw)) {
    ++line;
    std::string_view text = trim(raw);
    if (text.empty()) continue;
    auto fields = split(text, ',');
    if (!have_header) {
      if (fields.size() != 2) fail(line, "expected header 'n=<count>,m=<count>'");
      std::uint64_t hn = header_field(fields[0], "n", line);
      if (hn > std::numeric_limits<Item>::max()) fail(line, "n too large");
      n = static_cast<std::size_t>(hn);
      m = header_field(fields[1], "m", line);
      entries.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
      have_header = true;
      continue;
    }
    if (fields.size() != 3) fail(line, "expected 'u,v,y'");
    std::uint64_t y = to_uint(fields[2], line);
    if (y > 1) fail(line, "label must be 0 or 1");
    entries.push_back({to_item(fields[0], n, line), to_item(fields[1], n, line), static_cast<std::uint8_t>(y)});
  }
  if (!have_header) throw Error("training set file is missing the 'n=<count>,m=<count>' header");
  if (entries.size() != m) {
    throw Error("training set header declares m=" + std::to_string(m) + " but file has " +
                std::to_string(entries.size()) + " entries");
  }
  return TrainingSet(n, std::move(entries));
}

FileKind detect_kind(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view text = trim(raw);
    if (text.empty()) continue;
    if (text.find('\t') != std::string_view::npos) return FileKind::kClustering;
    if (text.starts_with("n=")) return text.find(",m=") != std::string_view::npos ? FileKind::kTrainingSet : FileKind::kGraph;
    break;
  }
  throw Error("cannot determine the format of '" + path.string() + "'");
}

Clustering load_clustering(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_clustering(in);
}

SimilarityGraph load_similarity_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_similarity_graph(in);
}

SideInfoGraph load_side_info_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_side_info_graph(in);
}

TrainingSet load_training_set(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_training_set(in);
}

void save_clustering(const std::filesystem::path& path, const Clustering& c) {
  auto out = open_out(path);
  write_clustering(out, c);
}

void save_graph(const std::filesystem::path& path, const SimilarityGraph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

void save_graph(const std::filesystem::path& path, const SideInfoGraph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

void save_training_set(const std::filesystem::path& path, const TrainingSet& s) {
  auto out = open_out(path);
  write_training_set(out, s);
}

}  // namespace pairclust::io
