#include "conedd/dd_engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace conedd {

std::string to_string(Adjacency a) { return a == Adjacency::Combinatorial ? "comb" : "alg"; }
std::string to_string(Representation r) { return r == Representation::Full ? "full" : "inner"; }
std::string to_string(DimFilter f) {
  switch (f) {
    case DimFilter::Off: return "off";
    case DimFilter::Basic: return "basic";
    case DimFilter::Extended: return "extended";
  }
  return "?";
}

Adjacency parse_adjacency(std::string_view text) {
  if (text == "comb") return Adjacency::Combinatorial;
  if (text == "alg") return Adjacency::Algebraic;
  throw std::invalid_argument("unknown adjacency '" + std::string(text) + "' (expected comb|alg)");
}

Representation parse_representation(std::string_view text) {
  if (text == "full") return Representation::Full;
  if (text == "inner") return Representation::Inner;
  throw std::invalid_argument("unknown representation '" + std::string(text) + "' (expected full|inner)");
}

DimFilter parse_dim_filter(std::string_view text) {
  if (text == "off") return DimFilter::Off;
  if (text == "basic") return DimFilter::Basic;
  if (text == "extended") return DimFilter::Extended;
  throw std::invalid_argument("unknown prefilter '" + std::string(text) + "' (expected off|basic|extended)");
}

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(std::size_t dim, std::size_t value_width)
    : dim_(dim), width_(value_width), stride_(ZeroSet::words_for(dim)) {}

ZeroSet VertexSet::zeros(std::size_t j) const { return ZeroSet::from_words(dim_, zero_words(j)); }

void VertexSet::reserve(std::size_t n) {
  zeros_.reserve(n * stride_);
  values_.reserve(n * width_);
}

std::size_t VertexSet::append(std::span<const ZeroSet::Word> zeros) {
  zeros_.insert(zeros_.end(), zeros.begin(), zeros.end());
  values_.resize(values_.size() + width_);
  return count_++;
}

void VertexSet::pop_back() {
  zeros_.resize(zeros_.size() - stride_);
  values_.resize(values_.size() - width_);
  --count_;
}

std::size_t VertexSet::memory_bytes() const {
  std::size_t limbs = 0;
  for (const auto& x : values_) limbs += std::max<std::size_t>(1, mpz_size(x.get_mpz_t()));
  return 8 * (limbs + zeros_.size());
}

// --- Pair tests --------------------------------------------------------------

bool compatible(const ZeroSet& u, const ZeroSet& w, std::span<const ConstraintGroup> groups) {
  return group_satisfied(intersect(u, w), groups);
}

bool dim_prefilter(std::size_t common_zeros, std::size_t dim, std::size_t processed, std::size_t separating,
                   DimFilter mode) {
  switch (mode) {
    case DimFilter::Off: return true;
    case DimFilter::Basic: return common_zeros + processed + 2 >= dim;
    case DimFilter::Extended: return common_zeros + separating + 2 >= dim;
  }
  return true;
}

bool adjacent_combinatorial(std::span<const ZeroSet::Word> common, const VertexSet& vertices, std::size_t u,
                            std::size_t w) {
  const std::size_t stride = vertices.zero_stride();
  const ZeroSet::Word* z = vertices.all_zero_words().data();
  for (std::size_t j = 0; j < vertices.size(); ++j, z += stride) {
    if (j == u || j == w) continue;
    bool superset = true;
    for (std::size_t i = 0; i < stride; ++i)
      if ((z[i] & common[i]) != common[i]) {
        superset = false;
        break;
      }
    if (superset) return false;
  }
  return true;
}

namespace {

// Equations restricted to the coordinates outside `zeros`; the unit rows
// x_k = 0 for k in `zeros` are accounted for by dropping those columns.
IntMatrix restricted_system(const EnumerationProblem& p, std::span<const std::size_t> rows, const ZeroSet& zeros,
                            std::vector<std::size_t>& free_columns) {
  free_columns.clear();
  for (std::size_t k = 0; k < p.dim; ++k)
    if (!zeros.contains(k)) free_columns.push_back(k);
  IntMatrix m(free_columns.size());
  for (std::size_t r : rows) {
    IntVector row;
    row.reserve(free_columns.size());
    bool nonzero = false;
    for (std::size_t k : free_columns) {
      row.push_back(p.equations[r][k]);
      nonzero |= sgn(row.back()) != 0;
    }
    if (nonzero) m.add_row(std::move(row));
  }
  return m;
}

}  // namespace

bool adjacent_algebraic(const ZeroSet& common, const EnumerationProblem& p, std::span<const std::size_t> processed) {
  std::vector<std::size_t> free_columns;
  const IntMatrix m = restricted_system(p, processed, common, free_columns);
  // rank(equations + unit rows) = |common| + rank(m) must equal d - 2.
  return rank(m) + common.count() + 2 == p.dim;
}

Ray combine(const Ray& u, const Ray& w, std::span<const Integer> m) {
  const Integer hu = dot(m, u.coords);
  const Integer hw = dot(m, w.coords);
  if (sgn(hu) <= 0 || sgn(hw) >= 0) throw EngineError("combine: vertices are not on opposite sides");
  Ray v{IntVector(u.coords.size()), intersect(u.zeros, w.zeros)};
  for (std::size_t k = 0; k < v.coords.size(); ++k) v.coords[k] = hu * w.coords[k] - hw * u.coords[k];
  divide_by_content(v.coords);
  if (zeroset_of(v.coords) != v.zeros) throw EngineError("combine: zero set of new ray disagrees with its coordinates");
  return v;
}

RayInner combine(const RayInner& u, const RayInner& w, std::size_t k) {
  auto hu_it = u.products.find(k);
  auto hw_it = w.products.find(k);
  if (hu_it == u.products.end() || hw_it == w.products.end())
    throw EngineError("combine: missing stored product for equation " + std::to_string(k));
  const Integer& hu = hu_it->second;
  const Integer& hw = hw_it->second;
  if (sgn(hu) <= 0 || sgn(hw) >= 0) throw EngineError("combine: vertices are not on opposite sides");
  RayInner v{{}, intersect(u.zeros, w.zeros)};
  IntVector vals;
  std::vector<std::size_t> keys;
  for (const auto& [idx, wu] : u.products) {
    if (idx == k) continue;
    auto it = w.products.find(idx);
    if (it == w.products.end()) throw EngineError("combine: stored products have different keys");
    keys.push_back(idx);
    vals.push_back(hu * it->second - hw * wu);
  }
  divide_by_content(vals);
  for (std::size_t i = 0; i < keys.size(); ++i) v.products.emplace(keys[i], std::move(vals[i]));
  return v;
}

namespace {

Ray recover_from(const EnumerationProblem& p, const ZeroSet& z, std::span<const std::size_t> rows) {
  std::vector<std::size_t> free_columns;
  const IntMatrix m = restricted_system(p, rows, z, free_columns);
  IntVector small;
  try {
    small = nullspace_ray(m);
  } catch (const LinalgError& e) {
    throw EngineError("recover " + z.to_string() + ": " + e.what());
  }
  Ray r{IntVector(p.dim), z};
  for (std::size_t i = 0; i < free_columns.size(); ++i) r.coords[free_columns[i]] = std::move(small[i]);
  if (zeroset_of(r.coords) != z)
    throw EngineError("recover " + z.to_string() + ": solution " + to_string(r.coords) + " has a different zero set");
  return r;
}

std::vector<std::size_t> all_rows(const EnumerationProblem& p) {
  std::vector<std::size_t> rows(p.equations.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

}  // namespace

Ray recover(const EnumerationProblem& p, const ZeroSet& z) { return recover_from(p, z, all_rows(p)); }

// --- Engine ------------------------------------------------------------------

VertexSet init_vertices(const EnumerationProblem& p, Representation rep, std::span<const std::size_t> remaining) {
  const std::size_t d = p.dim;
  VertexSet v(d, rep == Representation::Full ? d : remaining.size());
  v.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    ZeroSet z = ZeroSet::full(d);
    z.erase(j);
    const std::size_t idx = v.append(z.words());
    auto vals = v.values(idx);
    if (rep == Representation::Full) {
      vals[j] = 1;
    } else {
      for (std::size_t t = 0; t < remaining.size(); ++t) vals[t] = p.equations[remaining[t]][j];
    }
  }
  return v;
}

Engine::Engine(const EnumerationProblem& p, RunConfig cfg) : problem_(p), cfg_(cfg) {
  problem_.validate();
  groups_ = GroupMasks(problem_.groups, problem_.dim);
  if (cfg_.ordering.kind == OrderingStrategy::Kind::Dynamic) {
    remaining_ = all_rows(problem_);
  } else {
    remaining_ = order_static(problem_, cfg_.ordering);
  }
  vertices_ = init_vertices(problem_, cfg_.representation, remaining_);
  stats_.initial_size = vertices_.size();
  stats_.max_vertices = vertices_.size();
  stats_.initial_memory_bytes = vertices_.memory_bytes();
  stats_.peak_memory_bytes = stats_.initial_memory_bytes;
  stats_.final_count = vertices_.size();
}

int Engine::sign_at(std::size_t position, std::size_t j) const {
  if (cfg_.representation == Representation::Inner) return sgn(vertices_.values(j)[position]);
  return sgn(dot(problem_.equations[remaining_[position]], vertices_.values(j)));
}

std::size_t Engine::next_hyperplane() const {
  if (done()) throw std::logic_error("next_hyperplane: every equation has been processed");
  if (cfg_.ordering.kind != OrderingStrategy::Kind::Dynamic) return remaining_.front();
  const std::size_t pos = choose_dynamic(std::span<const std::size_t>(remaining_), vertices_.size(),
                                         [&](std::size_t c, std::size_t j) { return sign_at(c, j); });
  return remaining_[pos];
}

void Engine::step() { step(next_hyperplane()); }

Partition Engine::partition(std::size_t k) const {
  auto it = std::find(remaining_.begin(), remaining_.end(), k);
  if (it == remaining_.end()) throw EngineError("partition: equation " + std::to_string(k) + " is not unprocessed");
  const auto pos = static_cast<std::size_t>(it - remaining_.begin());
  Partition part;
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    const int s = sign_at(pos, j);
    (s == 0 ? part.zero : s > 0 ? part.positive : part.negative).push_back(j);
  }
  return part;
}

void Engine::step(std::size_t k) {
  auto it = std::find(remaining_.begin(), remaining_.end(), k);
  if (it == remaining_.end()) throw EngineError("step: equation " + std::to_string(k) + " is not unprocessed");
  const auto pos = static_cast<std::size_t>(it - remaining_.begin());
  const std::size_t d = problem_.dim;
  const bool inner = cfg_.representation == Representation::Inner;
  const VertexSet& old = vertices_;

  // Inner products with equation k: read off under Inner, computed under Full.
  std::vector<Integer> computed;
  if (!inner) {
    computed.reserve(old.size());
    for (std::size_t j = 0; j < old.size(); ++j) computed.push_back(dot(problem_.equations[k], old.values(j)));
  }
  auto head = [&](std::size_t j) -> const Integer& { return inner ? old.values(j)[pos] : computed[j]; };

  Partition part;
  for (std::size_t j = 0; j < old.size(); ++j) {
    const int s = sgn(head(j));
    (s == 0 ? part.zero : s > 0 ? part.positive : part.negative).push_back(j);
  }

  StageStats st;
  st.hyperplane = k;
  st.zero = part.zero.size();
  st.positive = part.positive.size();
  st.negative = part.negative.size();
  st.pairs = static_cast<std::uint64_t>(st.positive) * st.negative;

  const std::size_t processed_before = processed_.size();
  const std::size_t sep_before = sep_;
  const std::size_t width = inner ? old.value_width() - 1 : d;

  VertexSet next(d, width);
  next.reserve(part.zero.size() + std::min<std::size_t>(st.pairs, 4 * old.size()));

  auto copy_values = [&](std::span<const Integer> src, std::span<Integer> dst) {
    if (!inner) {
      std::copy(src.begin(), src.end(), dst.begin());
      return;
    }
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(pos), dst.begin());
    std::copy(src.begin() + static_cast<std::ptrdiff_t>(pos) + 1, src.end(),
              dst.begin() + static_cast<std::ptrdiff_t>(pos));
  };

  for (std::size_t j : part.zero) {
    const std::size_t idx = next.append(old.zero_words(j));
    copy_values(old.values(j), next.values(idx));
  }

  std::vector<std::size_t> next_processed(processed_);
  next_processed.push_back(k);
  const std::size_t stride = old.zero_stride();
  std::vector<ZeroSet::Word> common(stride);

  for (std::size_t u : part.positive) {
    const auto zu = old.zero_words(u);
    for (std::size_t w : part.negative) {
      const auto zw = old.zero_words(w);
      std::size_t common_count = 0;
      for (std::size_t i = 0; i < stride; ++i) {
        common[i] = zu[i] & zw[i];
        common_count += static_cast<std::size_t>(std::popcount(common[i]));
      }
      if (cfg_.filtering && !groups_.satisfied(common)) continue;
      ++st.pairs_compatible;
      if (!dim_prefilter(common_count, d, processed_before, sep_before, cfg_.dim_prefilter)) continue;
      ++st.pairs_dimension;
      const bool adjacent = cfg_.adjacency == Adjacency::Combinatorial
                                ? adjacent_combinatorial(common, old, u, w)
                                : adjacent_algebraic(ZeroSet::from_words(d, common), problem_, processed_);
      if (!adjacent) continue;
      ++st.pairs_adjacent;

      // v = (m.u) w - (m.w) u, which has m.v = 0.
      const Integer& hu = head(u);
      const Integer& hw = head(w);
      const std::size_t idx = next.append(common);
      auto out = next.values(idx);
      const auto vu = old.values(u);
      const auto vw = old.values(w);
      std::size_t o = 0;
      for (std::size_t t = 0; t < vu.size(); ++t) {
        if (inner && t == pos) continue;
        mpz_mul(out[o].get_mpz_t(), hu.get_mpz_t(), vw[t].get_mpz_t());
        mpz_submul(out[o].get_mpz_t(), hw.get_mpz_t(), vu[t].get_mpz_t());
        ++o;
      }
      divide_by_content(out);
      if (!inner) {
        for (std::size_t t = 0; t < d; ++t)
          if ((sgn(out[t]) == 0) != ((common[t / 64] >> (t % 64)) & 1u))
            throw EngineError("step: zero set of new vertex disagrees with its coordinates");
      }
    }
  }

  if (!part.positive.empty() && !part.negative.empty()) ++sep_;
  processed_ = std::move(next_processed);
  remaining_.erase(remaining_.begin() + static_cast<std::ptrdiff_t>(pos));
  vertices_ = std::move(next);

  st.size = vertices_.size();
  st.sep = sep_;
  st.memory_bytes = vertices_.memory_bytes();
  stats_.stages.push_back(st);
  stats_.max_vertices = std::max(stats_.max_vertices, st.size);
  stats_.final_count = st.size;
  stats_.sep = sep_;
  record_memory(st.memory_bytes);
}

void Engine::record_memory(std::size_t bytes) { stats_.peak_memory_bytes = std::max(stats_.peak_memory_bytes, bytes); }

Ray Engine::full_vertex(std::size_t j) const {
  const ZeroSet z = vertices_.zeros(j);
  if (cfg_.representation == Representation::Inner) return recover_from(problem_, z, processed_);
  const auto vals = vertices_.values(j);
  return Ray{IntVector(vals.begin(), vals.end()), z};
}

RayInner Engine::inner_vertex(std::size_t j) const {
  RayInner r{{}, vertices_.zeros(j)};
  const auto vals = vertices_.values(j);
  for (std::size_t t = 0; t < remaining_.size(); ++t) {
    if (cfg_.representation == Representation::Inner)
      r.products.emplace(remaining_[t], vals[t]);
    else
      r.products.emplace(remaining_[t], dot(problem_.equations[remaining_[t]], vals));
  }
  return r;
}

std::vector<ZeroSet> Engine::zero_sets() const {
  std::vector<ZeroSet> out;
  out.reserve(vertices_.size());
  for (std::size_t j = 0; j < vertices_.size(); ++j) out.push_back(vertices_.zeros(j));
  return out;
}

std::vector<IntVector> Engine::rays() const {
  std::vector<IntVector> out;
  out.reserve(vertices_.size());
  for (std::size_t j = 0; j < vertices_.size(); ++j) out.push_back(full_vertex(j).coords);
  canonicalize_rays(out);
  return out;
}

RunResult run(const EnumerationProblem& p, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Engine engine(p, cfg);
  while (!engine.done()) engine.step();
  RunResult result{engine.rays(), engine.stats()};
  result.stats.final_count = result.rays.size();
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace conedd
