#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matecensus/graph.hpp"

namespace matecensus {

// A replayable stream of graphs, delivered in chunks.
class GraphSource {
 public:
  using ChunkVisitor = std::function<void(std::span<const Graph>)>;

  virtual ~GraphSource() = default;
  virtual void for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const = 0;
  virtual std::string describe() const = 0;
};

class VectorSource final : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs, std::string label = "memory")
      : graphs_(std::move(graphs)), label_(std::move(label)) {}

  void for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const override;
  std::string describe() const override { return label_; }
  const std::vector<Graph>& graphs() const noexcept { return graphs_; }

 private:
  std::vector<Graph> graphs_;
  std::string label_;
};

// graph6 file, re-read on every replay.
class FileSource final : public GraphSource {
 public:
  explicit FileSource(std::string path) : path_(std::move(path)) {}

  void for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const override;
  std::string describe() const override { return path_; }

 private:
  std::string path_;
};

// Free trees on n vertices, regenerated on every replay.
class TreeSource final : public GraphSource {
 public:
  explicit TreeSource(int n) : n_(n) {}

  void for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const override;
  std::string describe() const override { return "trees:" + std::to_string(n_); }

 private:
  int n_;
};

// "graphs:N" (connected graphs, N <= 8) or "trees:N".
std::unique_ptr<GraphSource> make_generator_source(const std::string& spec, int workers = 0);

}  // namespace matecensus
