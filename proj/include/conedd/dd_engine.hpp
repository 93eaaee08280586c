#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conedd/cone_problem.hpp"
#include "conedd/exact_linalg.hpp"
#include "conedd/ordering.hpp"
#include "conedd/zeroset.hpp"

namespace conedd {

enum class Adjacency { Combinatorial, Algebraic };
enum class Representation { Full, Inner };
enum class DimFilter { Off, Basic, Extended };

std::string to_string(Adjacency a);
std::string to_string(Representation r);
std::string to_string(DimFilter f);
Adjacency parse_adjacency(std::string_view text);          // comb|alg
Representation parse_representation(std::string_view text);  // full|inner
DimFilter parse_dim_filter(std::string_view text);         // off|basic|extended

struct RunConfig {
  OrderingStrategy ordering = OrderingStrategy::position();
  Adjacency adjacency = Adjacency::Combinatorial;
  Representation representation = Representation::Inner;
  bool filtering = true;
  DimFilter dim_prefilter = DimFilter::Extended;
};

/// Raised when an internal consistency check fails; always an engine bug.
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Extreme ray in full coordinates.
struct Ray {
  IntVector coords;
  ZeroSet zeros;
};

/// Vertex stored only through its inner products with the unprocessed
/// equations, keyed by equation index.
struct RayInner {
  std::map<std::size_t, Integer> products;
  ZeroSet zeros;
};

/// Vertices stored back to back: one block of zero-set words and one block of
/// integer values per vertex, each with a fixed stride.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t dim, std::size_t value_width);

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::size_t dim() const { return dim_; }
  std::size_t value_width() const { return width_; }
  std::size_t zero_stride() const { return stride_; }

  std::span<const ZeroSet::Word> zero_words(std::size_t j) const {
    return {zeros_.data() + j * stride_, stride_};
  }
  std::span<const ZeroSet::Word> all_zero_words() const { return zeros_; }
  ZeroSet zeros(std::size_t j) const;
  std::span<const Integer> values(std::size_t j) const { return {values_.data() + j * width_, width_}; }
  std::span<Integer> values(std::size_t j) { return {values_.data() + j * width_, width_}; }

  void reserve(std::size_t n);
  /// Appends a vertex with the given zero set and zero-initialised values.
  std::size_t append(std::span<const ZeroSet::Word> zeros);
  void pop_back();

  /// Logical memory: 8 bytes per integer limb (at least one per value) plus
  /// the bitmask words.
  std::size_t memory_bytes() const;

 private:
  std::size_t dim_ = 0;
  std::size_t width_ = 0;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;
  std::vector<ZeroSet::Word> zeros_;
  std::vector<Integer> values_;
};

struct StageStats {
  std::size_t hyperplane = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::uint64_t pairs = 0;             // |S+| * |S-|
  std::uint64_t pairs_compatible = 0;  // survived the group test
  std::uint64_t pairs_dimension = 0;   // survived the dimensional prefilter
  std::uint64_t pairs_adjacent = 0;    // produced a new vertex
  std::size_t size = 0;                // |V_i|
  std::size_t sep = 0;                 // sep(i)
  std::size_t memory_bytes = 0;
};

struct RunStats {
  std::size_t initial_size = 0;
  std::size_t initial_memory_bytes = 0;
  std::vector<StageStats> stages;
  double elapsed_ms = 0;
  std::size_t peak_memory_bytes = 0;
  std::size_t max_vertices = 0;
  std::size_t final_count = 0;
  std::size_t sep = 0;
};

struct Partition {
  std::vector<std::size_t> zero, positive, negative;
};

bool compatible(const ZeroSet& u, const ZeroSet& w, std::span<const ConstraintGroup> groups);

/// Necessary condition for adjacency in the polytope cut out by the first
/// `processed` hyperplanes, `separating` of which were pseudo-separating.
bool dim_prefilter(std::size_t common_zeros, std::size_t dim, std::size_t processed, std::size_t separating,
                   DimFilter mode);

/// True iff no vertex of `vertices` other than u and w has a zero set
/// containing `common`.
bool adjacent_combinatorial(std::span<const ZeroSet::Word> common, const VertexSet& vertices, std::size_t u,
                            std::size_t w);

/// Rank test: the processed equations together with x_k = 0 for k in
/// `common` cut out a two-dimensional subspace.
bool adjacent_algebraic(const ZeroSet& common, const EnumerationProblem& p, std::span<const std::size_t> processed);

/// Point of segment uw on the hyperplane m.x = 0, where m.u > 0 > m.w.
Ray combine(const Ray& u, const Ray& w, std::span<const Integer> m);
/// Same, on inner products: the entry for equation k is consumed and dropped.
RayInner combine(const RayInner& u, const RayInner& w, std::size_t k);

/// Solves the equations plus x_j = 0 for j in z for the unique ray.
/// Throws EngineError when the solution is not a single ray with zero set z.
Ray recover(const EnumerationProblem& p, const ZeroSet& z);

/// Runs the double description method one hyperplane at a time.
class Engine {
 public:
  Engine(const EnumerationProblem& p, RunConfig cfg);

  bool done() const { return remaining_.empty(); }
  std::size_t stage() const { return processed_.size(); }
  std::size_t sep() const { return sep_; }
  std::span<const std::size_t> processed() const { return processed_; }
  std::span<const std::size_t> remaining() const { return remaining_; }
  const VertexSet& vertices() const { return vertices_; }
  const RunStats& stats() const { return stats_; }
  const RunConfig& config() const { return cfg_; }

  /// Index of the hyperplane the next step() will process.
  std::size_t next_hyperplane() const;
  void step();
  /// Processes equation `k`, which must still be unprocessed.
  void step(std::size_t k);

  Partition partition(std::size_t k) const;
  Ray full_vertex(std::size_t j) const;
  RayInner inner_vertex(std::size_t j) const;
  std::vector<ZeroSet> zero_sets() const;

  /// Final rays (recovered when stored by inner products), sorted and unique.
  std::vector<IntVector> rays() const;

 private:
  int sign_at(std::size_t position, std::size_t j) const;
  void record_memory(std::size_t bytes);

  EnumerationProblem problem_;
  RunConfig cfg_;
  GroupMasks groups_;
  std::vector<std::size_t> processed_;
  std::vector<std::size_t> remaining_;  // in processing order for static strategies
  std::size_t sep_ = 0;
  VertexSet vertices_;
  RunStats stats_;
};

/// Vertex set V_0: the d unit rays.
VertexSet init_vertices(const EnumerationProblem& p, Representation rep, std::span<const std::size_t> remaining);

struct RunResult {
  std::vector<IntVector> rays;
  RunStats stats;
};

RunResult run(const EnumerationProblem& p, const RunConfig& cfg = {});

}  // namespace conedd
