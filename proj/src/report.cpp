#include "mstep/report.hpp"

#include <sstream>

#include "mstep/io.hpp"

namespace mstep {

using nlohmann::json;

namespace {

json set_list(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const VertexSet& s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const UndirectedGraph& g) {
  json rows = json::array();
  std::istringstream in(to_matrix_text(g.adjacency()));
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

json to_json(const StructureReport& report) {
  const auto& dec = report.decomposition;
  json out;
  out["n"] = report.parts.vertex_count();
  out["partite_sets"] = set_list(report.parts.parts());
  out["components"] = set_list(dec.components);
  out["s"] = dec.count();
  if (dec.last_nontrivial) {
    out["t"] = *dec.last_nontrivial + 1;
  } else {
    out["t"] = nullptr;
  }
  if (report.profile) {
    out["kappa"] = report.profile->kappa;
    out["imprimitivity_sets"] = set_list(report.profile->classes);
  }
  if (report.head) {
    out["r"] = report.head->r;
    out["A1"] = to_json(report.head->a1);
    out["A2"] = to_json(report.head->a2);
  }
  return out;
}

json to_json(const Verdict& verdict) {
  json out;
  out["kind"] = verdict.kind == VerdictKind::converges ? "converges" : "diverges";
  out["period"] = verdict.period;
  out["case_tag"] = verdict.tag.to_string();
  if (verdict.stabilization_bound) {
    out["N"] = *verdict.stabilization_bound;
  } else {
    out["N"] = nullptr;
  }
  json graphs = json::object();
  json shapes = json::object();
  for (const auto& [residue, g] : verdict.graphs) graphs[std::to_string(residue)] = to_json(g);
  for (const auto& [residue, s] : verdict.shapes) shapes[std::to_string(residue)] = s;
  out["graphs"] = std::move(graphs);
  out["shapes"] = std::move(shapes);
  out["cliques"] = set_list(verdict.cliques);
  const DivergenceConditions& c = verdict.conditions;
  out["conditions"] = {{"a", c.a}, {"b", c.b}, {"c", c.c},
                       {"i", c.i}, {"ii", c.ii}, {"iii", c.iii}};
  return out;
}

json to_json(const SequenceReport& report) {
  json out;
  out["preperiod"] = report.preperiod;
  out["period"] = report.period;
  json cycle = json::array();
  for (const UndirectedGraph& g : report.cycle_graphs) cycle.push_back(to_json(g));
  out["matrices"] = std::move(cycle);
  out["power_preperiod"] = report.power_preperiod;
  out["power_period"] = report.power_period;
  return out;
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string describe(const StructureReport& report) {
  std::ostringstream out;
  const auto& dec = report.decomposition;
  out << "partite sets:";
  for (std::size_t i = 0; i < report.parts.part_count(); ++i) {
    out << " V" << i + 1 << "=" << format_set(report.parts.part(i));
  }
  out << "\ncomponents:";
  for (std::size_t i = 0; i < dec.count(); ++i) {
    out << " Q" << i + 1 << "=" << format_set(dec.components[i]);
  }
  out << "\n";
  if (!dec.last_nontrivial) {
    out << "t: none (every strong component is trivial)\n";
    return out.str();
  }
  out << "t=" << *dec.last_nontrivial + 1 << " s=" << dec.count() << "\n";
  if (report.profile) {
    out << "kappa=" << report.profile->kappa << " imprimitivity sets:";
    for (std::size_t i = 0; i < report.profile->classes.size(); ++i) {
      out << " U" << i + 1 << "=" << format_set(report.profile->classes[i]);
    }
    out << "\n";
  }
  if (report.head) {
    out << "r=" << report.head->r << " A1=" << format_set(report.head->a1)
        << " A2=" << format_set(report.head->a2) << "\n";
  }
  return out.str();
}

std::string describe(const Verdict& verdict) {
  std::ostringstream out;
  out << to_string(verdict.kind);
  if (verdict.kind == VerdictKind::diverges) out << " period=" << verdict.period;
  out << " case=" << verdict.tag.to_string() << "\n";
  if (verdict.stabilization_bound) {
    out << "N=" << *verdict.stabilization_bound << "\n";
  } else {
    out << "N undetermined\n";
  }
  for (std::size_t i = 0; i < verdict.cliques.size(); ++i) {
    out << "K" << i + 1 << "=" << format_set(verdict.cliques[i]) << (i + 1 < verdict.cliques.size() ? " " : "\n");
  }
  for (const auto& [residue, g] : verdict.graphs) {
    if (verdict.period == 1) {
      out << "limit (" << verdict.shapes.at(residue) << "):\n";
    } else {
      out << "m = " << residue << " (mod " << verdict.period << ") ("
          << verdict.shapes.at(residue) << "):\n";
    }
    out << to_matrix_text(g.adjacency());
  }
  return out.str();
}

std::string describe(const SequenceReport& report) {
  std::ostringstream out;
  out << "preperiod=" << report.preperiod << " period=" << report.period << "\n";
  for (std::size_t i = 0; i < report.cycle_graphs.size(); ++i) {
    out << "C^" << report.preperiod + i << ":\n" << to_matrix_text(report.cycle_graphs[i].adjacency());
  }
  return out.str();
}

}  // namespace mstep
