#pragma once

// Text file formats.
//
//   clustering     one line per item: "<item_id>\t<cluster_id>"; cluster ids
//                  are arbitrary tokens and get renumbered on read
//   graph          header "n=<count>", then one "u,v" line per pair
//   training set   header "n=<count>,m=<count>", then one "u,v,y" line per
//                  entry with y in {0,1}
//
// All files are UTF-8 with LF line endings. Readers throw `Error` with the
// offending line number on malformed input.

#include <filesystem>
#include <iosfwd>

#include "pairclust/core.hpp"

namespace pairclust::io {

void write_clustering(std::ostream& os, const Clustering& c);
Clustering read_clustering(std::istream& is);

void write_graph(std::ostream& os, std::size_t n, std::span<const Pair> pairs);
void write_graph(std::ostream& os, const SimilarityGraph& g);
void write_graph(std::ostream& os, const SideInfoGraph& g);
SimilarityGraph read_similarity_graph(std::istream& is);
SideInfoGraph read_side_info_graph(std::istream& is);

void write_training_set(std::ostream& os, const TrainingSet& s);
TrainingSet read_training_set(std::istream& is);

enum class FileKind { kClustering, kGraph, kTrainingSet };
/// Sniffs the first non-empty line of a file.
FileKind detect_kind(const std::filesystem::path& path);

Clustering load_clustering(const std::filesystem::path& path);
SimilarityGraph load_similarity_graph(const std::filesystem::path& path);
SideInfoGraph load_side_info_graph(const std::filesystem::path& path);
TrainingSet load_training_set(const std::filesystem::path& path);

void save_clustering(const std::filesystem::path& path, const Clustering& c);
void save_graph(const std::filesystem::path& path, const SimilarityGraph& g);
void save_graph(const std::filesystem::path& path, const SideInfoGraph& g);
void save_training_set(const std::filesystem::path& path, const TrainingSet& s);

}  // namespace pairclust::io
