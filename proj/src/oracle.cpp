#include "mstep/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace mstep {

std::size_t step_budget_from_env() {
  const char* raw = std::getenv("TD_BUDGET");
  if (raw == nullptr) return kDefaultStepBudget;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return kDefaultStepBudget;
  }
  return value;
}

namespace {

UndirectedGraph graph_of_power(const BoolMatrix& power) {
  BoolMatrix c = gram_product(power);
  c.clear_diagonal();
  return UndirectedGraph::from_matrix(std::move(c));
}

}  // namespace

UndirectedGraph m_step_competition_graph(const Digraph& d, std::size_t m) {
  return UndirectedGraph::from_matrix(competition_matrix(d.adjacency(), m));
}

std::vector<UndirectedGraph> competition_sequence(const Digraph& d, std::size_t m_max) {
  std::vector<UndirectedGraph> out;
  if (m_max == 0) return out;
  const BoolMatrix& a = d.adjacency();
  BoolMatrix power = a;
  out.push_back(graph_of_power(power));
  for (std::size_t m = 2; m <= m_max; ++m) {
    power = bool_mul(power, a);
    out.push_back(graph_of_power(power));
  }
  return out;
}

const UndirectedGraph& SequenceReport::graph_at(std::size_t m) const {
  if (m < preperiod) {
    throw std::out_of_range("m = " + std::to_string(m) + " lies before the preperiod " +
                            std::to_string(preperiod));
  }
  return cycle_graphs[(m - preperiod) % period];
}

std::optional<SequenceReport> detect_period(const Digraph& d, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("detect_period: max_steps must be positive");
  const BoolMatrix& a = d.adjacency();

  // powers[i] = A^{i+1}
  std::vector<BoolMatrix> powers;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  std::optional<std::size_t> repeat_of;
  BoolMatrix current = a;
  while (powers.size() < max_steps) {
    auto& bucket = seen[current.hash()];
    for (std::size_t index : bucket) {
      if (powers[index] == current) {
        repeat_of = index;
        break;
      }
    }
    if (repeat_of) break;
    bucket.push_back(powers.size());
    powers.push_back(current);
    current = bool_mul(current, a);
  }
  if (!repeat_of) return std::nullopt;

  // A^m is periodic from mu with period lambda.
  const std::size_t mu = *repeat_of + 1;
  const std::size_t lambda = powers.size() + 1 - mu;

  std::vector<UndirectedGraph> graphs;  // graphs[i] = C^{i+1}
  graphs.reserve(powers.size());
  for (const BoolMatrix& p : powers) graphs.push_back(graph_of_power(p));
  const auto graph = [&](std::size_t m) -> const UndirectedGraph& {
    const std::size_t k = m < mu ? m : mu + (m - mu) % lambda;
    return graphs[k - 1];
  };

  std::size_t period = lambda;
  for (std::size_t p = 1; p <= lambda; ++p) {
    if (lambda % p != 0) continue;
    bool fits = true;
    for (std::size_t i = 0; i < lambda && fits; ++i) fits = graph(mu + i) == graph(mu + i + p);
    if (fits) {
      period = p;
      break;
    }
  }
  std::size_t preperiod = mu;
  while (preperiod > 1 && graph(preperiod - 1) == graph(preperiod - 1 + period)) --preperiod;

  SequenceReport report;
  report.preperiod = preperiod;
  report.period = period;
  report.power_preperiod = mu;
  report.power_period = lambda;
  for (std::size_t i = 0; i < period; ++i) report.cycle_graphs.push_back(graph(preperiod + i));
  return report;
}

bool walk_count_reference(const Digraph& d, std::size_t m, std::size_t u, std::size_t v) {
  const std::size_t n = d.size();
  if (n > 12) throw std::invalid_argument("walk_count_reference: n must be at most 12");
  if (m > 64) throw std::invalid_argument("walk_count_reference: m must be at most 64");
  if (u >= n || v >= n) throw std::out_of_range("walk_count_reference: vertex out of range");

  const auto reachable_in_exactly = [&](std::size_t start) {
    std::vector<bool> current(n, false);
    current[start] = true;
    for (std::size_t step = 0; step < m; ++step) {
      std::vector<bool> next(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (!current[x]) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (d.has_arc(x, y)) next[y] = true;
        }
      }
      current = std::move(next);
    }
    return current;
  };
  const std::vector<bool> from_u = reachable_in_exactly(u);
  const std::vector<bool> from_v = reachable_in_exactly(v);
  for (std::size_t w = 0; w < n; ++w) {
    if (from_u[w] && from_v[w]) return true;
  }
  return false;
}

}  // namespace mstep
