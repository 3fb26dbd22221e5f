#include "mstep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace mstep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kBiases[] = {0.5, 0.7, 0.85, 0.95};

}  // namespace

Instance corpus_instance(const CorpusSpec& spec, std::size_t index) {
  if (spec.max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  if (spec.max_parts < 2) throw std::invalid_argument("the part count must be at least 2");

  std::mt19937_64 engine(splitmix64(spec.seed ^ splitmix64(index)));
  const std::size_t max_parts = std::min(spec.max_parts, spec.max_n);
  const std::size_t k = 2 + engine() % (max_parts - 1);
  const std::size_t n = k + engine() % (spec.max_n - k + 1);
  std::vector<std::size_t> sizes(k, 1);
  for (std::size_t extra = k; extra < n; ++extra) ++sizes[engine() % k];
  const double bias = kBiases[index % std::size(kBiases)];
  return random_ranked_multipartite_tournament(sizes, engine(), bias);
}

std::optional<std::string> compare_with_oracle(const Verdict& verdict,
                                               const SequenceReport& report,
                                               const std::optional<VertexSet>& tail) {
  if (report.period != verdict.period) {
    return "period: classifier " + std::to_string(verdict.period) + ", oracle " +
           std::to_string(report.period);
  }
  if ((verdict.kind == VerdictKind::converges) != (report.period == 1)) {
    return "kind does not match the period";
  }
  if (verdict.graphs.size() != verdict.period) return "verdict is missing residues";
  const std::size_t p = report.period;
  for (std::size_t residue = 0; residue < p; ++residue) {
    // the first m >= N0 with m = residue (mod p)
    const std::size_t n0 = report.preperiod;
    const std::size_t m = n0 + (residue + p - n0 % p) % p;
    if (report.graph_at(m) != verdict.graph_at(m)) {
      return "graph differs at m = " + std::to_string(m) + " (residue " +
             std::to_string(residue) + ")";
    }
  }
  if (tail) {
    for (const auto& [residue, g] : verdict.graphs) {
      bool isolated = true;
      tail->for_each([&](std::size_t v) { isolated = isolated && g.neighbors(v).empty(); });
      if (!isolated) return "a tail vertex is not isolated at residue " + std::to_string(residue);
    }
  }
  return std::nullopt;
}

InstanceOutcome verify_instance(const CorpusSpec& spec, std::size_t index,
                                std::size_t step_budget) {
  InstanceOutcome out;
  out.index = index;
  try {
    const Instance inst = corpus_instance(spec, index);
    const StructureReport structure = analyze(inst.digraph, inst.parts);
    Verdict verdict = classify(inst.digraph, structure, {false, step_budget});
    out.case_tag = verdict.tag.to_string();
    out.period = verdict.period;
    if (verdict.conditions.diverges() != (verdict.kind == VerdictKind::diverges)) {
      out.reason = "divergence flags disagree with the verdict";
      return out;
    }
    const auto report = detect_period(inst.digraph, step_budget);
    if (!report) {
      out.reason = "oracle undetermined within " + std::to_string(step_budget) + " steps";
      return out;
    }
    std::optional<VertexSet> tail;
    const auto& dec = structure.decomposition;
    if (dec.last_nontrivial && *dec.last_nontrivial + 1 < dec.count()) {
      tail = dec.span(*dec.last_nontrivial + 1, dec.count());
    }
    if (auto reason = compare_with_oracle(verdict, *report, tail)) {
      out.reason = std::move(*reason);
      return out;
    }
    out.agree = true;
  } catch (const std::exception& e) {
    out.reason = std::string("exception: ") + e.what();
  }
  return out;
}

VerificationSummary run_verification(const CorpusSpec& spec, std::size_t jobs,
                                     std::size_t step_budget) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(spec.count, 1));

  std::vector<InstanceOutcome> outcomes(spec.count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < spec.count; i = next++) {
      outcomes[i] = verify_instance(spec, i, step_budget);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  VerificationSummary summary;
  summary.total = spec.count;
  for (InstanceOutcome& o : outcomes) {
    if (!o.case_tag.empty()) ++summary.tag_counts[o.case_tag];
    if (o.agree) {
      ++summary.agreed;
      if (o.period > 1) ++summary.diverging;
    } else {
      summary.failures.push_back(std::move(o));
    }
  }
  return summary;
}

}  // namespace mstep
