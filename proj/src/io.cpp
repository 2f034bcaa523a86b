#include "surreal/io.hpp"

#include "surreal/arithmetic.hpp"
#include "surreal/oracle.hpp"
#include "surreal/signexp.hpp"

#include <sstream>

namespace surreal {

std::string display(Arena& arena, NodeId x) {
  NodeId c = canonicalize(arena, x);
  auto side = [&arena](std::span<const NodeId> options) {
    std::string out;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (i > 0) out += ',';
      out += value(arena, options[i]).to_string();
    }
    return out;
  };
  return "{" + side(arena.left(c)) + "|" + side(arena.right(c)) + "}";
}

Json tree_json(Arena& arena, const Tree& tree) {
  Json days = Json::array();
  for (const auto& level : tree.days()) {
    Json nodes = Json::array();
    for (const TreeNode& n : level) {
      Json node;
      node["value"] = value(arena, n.id).to_string();
      node["parent"] = n.parent ? Json(value(arena, *n.parent).to_string())
                                : Json(nullptr);
      node["sign"] = encode(arena, n.id).to_string();
      nodes.push_back(std::move(node));
    }
    days.push_back(std::move(nodes));
  }
  Json out;
  out["days"] = std::move(days);
  return out;
}

std::string tree_dot(Arena& arena, const Tree& tree) {
  std::ostringstream out;
  out << "digraph notree {\n";
  for (const auto& level : tree.days()) {
    for (const TreeNode& n : level) {
      out << "  n" << n.id.index << " [label=\""
          << value(arena, n.id).to_string() << "\"];\n";
    }
  }
  for (const auto& level : tree.days()) {
    for (const TreeNode& n : level) {
      if (!n.parent) continue;
      out << "  n" << n.parent->index << " -> n" << n.id.index << " [label=\""
          << (n.side == Side::Left ? '-' : '+') << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json report_json(Arena& arena, const ConditionReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry;
    entry["condition"] = v.condition;
    entry["node"] = value(arena, v.node).to_string();
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  Json out;
  out["days"] = report.days;
  out["nodes_checked"] = report.nodes_checked;
  out["pairs_checked"] = report.pairs_checked;
  out["violations"] = std::move(violations);
  out["ok"] = report.ok();
  return out;
}

Json law_json(Arena& arena, const LawReport& report) {
  Json examples = Json::array();
  for (const auto& tuple : report.counterexamples) {
    Json members = Json::array();
    if (report.domain == Domain::Nodes) {
      for (NodeId x : tuple) members.push_back(value(arena, x).to_string());
    } else {
      for (std::size_t i = 0; i + 1 < tuple.size(); i += 2) {
        members.push_back(Json::array({value(arena, tuple[i]).to_string(),
                                       value(arena, tuple[i + 1]).to_string()}));
      }
    }
    examples.push_back(std::move(members));
  }
  Json out;
  out["law"] = report.law;
  out["corpus"] = report.corpus;
  out["tuples_checked"] = report.tuples_checked;
  out["failures"] = report.failures;
  out["counterexamples"] = std::move(examples);
  return out;
}

}  // namespace surreal
