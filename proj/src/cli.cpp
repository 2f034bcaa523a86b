#include "surreal/cli.hpp"

#include "surreal/arithmetic.hpp"
#include "surreal/errors.hpp"
#include "surreal/expr.hpp"
#include "surreal/io.hpp"
#include "surreal/laws.hpp"
#include "surreal/oracle.hpp"
#include "surreal/tree.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace surreal::cli {
namespace {

std::optional<std::size_t> node_budget(std::ostream& err) {
  const char* env = std::getenv("SURREAL_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  std::string_view text(env);
  std::size_t budget = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), budget);
  if (ec != std::errc() || end != text.data() + text.size() || budget == 0) {
    err << "error: SURREAL_NODE_BUDGET must be a positive integer, got '"
        << text << "'\n";
    return std::nullopt;
  }
  return budget;
}

std::string describe(const Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const Dyadic* d = std::get_if<Dyadic>(&v)) return d->to_string();
  if (const BigInt* n = std::get_if<BigInt>(&v)) return n->str();
  return std::get<SignSeq>(v).to_string();
}

Json node_json(Arena& arena, const std::string& text, NodeId x) {
  NodeId c = canonicalize(arena, x);
  Json out;
  out["expr"] = text;
  out["canonical"] = display(arena, c);
  out["value"] = value(arena, c).to_string();
  out["birthday"] = arena.birthday(c);
  out["signs"] = encode(arena, c).to_string();
  return out;
}

Json result_json(const std::string& text, const Value& v) {
  Json out;
  out["expr"] = text;
  if (const bool* b = std::get_if<bool>(&v)) {
    out["result"] = *b;
  } else if (const BigInt* n = std::get_if<BigInt>(&v)) {
    out["result"] = n->convert_to<long long>();
  } else {
    out["result"] = describe(v);
  }
  return out;
}

void print_text(Arena& arena, const Value& v, std::ostream& out) {
  if (const NodeId* x = std::get_if<NodeId>(&v)) {
    NodeId c = canonicalize(arena, *x);
    out << "canonical " << display(arena, c) << '\n'
        << "value     " << value(arena, c).to_string() << '\n'
        << "birthday  " << arena.birthday(c) << '\n'
        << "signs     " << encode(arena, c).to_string() << '\n';
  } else {
    out << describe(v) << '\n';
  }
}

// Evaluates one expression and reports it; returns the exit code.
int evaluate(Arena& arena, const std::string& text, bool json,
             std::ostream& out, std::ostream& err) {
  try {
    Value v = eval(arena, parse(text));
    if (json) {
      const NodeId* x = std::get_if<NodeId>(&v);
      out << (x ? node_json(arena, text, *x) : result_json(text, v)).dump()
          << '\n';
    } else {
      print_text(arena, v, out);
    }
    return kOk;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n'
        << "  " << text << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kUsage;
  } catch (const CutViolation& e) {
    err << "error: cut violation: left option "
        << value(arena, NodeId{e.left()}).to_string()
        << " is not less than right option "
        << value(arena, NodeId{e.right()}).to_string() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run_tree(Arena& arena, std::uint32_t days, const std::string& format,
             bool check, std::ostream& out) {
  Tree tree = generate(arena, days);
  if (format == "dot") {
    out << tree_dot(arena, tree);
  } else {
    out << tree_json(arena, tree).dump() << '\n';
  }
  if (!check) return kOk;
  ConditionReport report = check_conditions(arena, tree);
  out << report_json(arena, report).dump() << '\n';
  return report.ok() ? kOk : kFailure;
}

int run_laws(Arena& arena, const std::string& name,
             std::optional<std::uint32_t> max_day, bool positive,
             std::optional<std::uint64_t> limit, std::ostream& out,
             std::ostream& err) {
  std::vector<const LawSpec*> selected;
  if (name.empty()) {
    for (const LawSpec& law : registry()) selected.push_back(&law);
  } else if (const LawSpec* law = find_law(name)) {
    selected.push_back(law);
  } else {
    err << "error: unknown law '" << name << "'\n";
    return kUsage;
  }
  int code = kOk;
  for (const LawSpec* law : selected) {
    Corpus c = corpus(arena, max_day.value_or(law->default_max_day),
                      positive ? Filter::Positive : law->default_filter);
    LawReport report = check(arena, *law, c, limit);
    out << law_json(arena, report).dump() << '\n';
    if (!report.ok()) code = kFailure;
  }
  return code;
}

int run_repl(Arena& arena, std::istream& in, std::ostream& out,
             std::ostream& err, bool prompt) {
  std::string line;
  for (;;) {
    if (prompt) out << "surreal> " << std::flush;
    if (!std::getline(in, line)) break;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line == ":quit") break;
    evaluate(arena, line, false, out, err);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err, bool prompt) {
  CLI::App app{"Exact arithmetic on finitely-born surreal numbers", "surreal"};
  app.require_subcommand(1);

  std::string expr_text;
  bool json = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
  eval_cmd->add_option("expr", expr_text, "Expression, e.g. \"{0|1} * 2\"")
      ->required();
  eval_cmd->add_flag("--json", json, "Print one JSON object");

  std::uint32_t days = 0;
  std::string format = "json";
  bool check_tree = false;
  auto* tree_cmd = app.add_subcommand("tree", "Generate the tree of numbers");
  tree_cmd->add_option("--days", days, "Last day to generate")->required();
  tree_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  tree_cmd->add_flag("--check", check_tree,
                     "Append the condition report; exit 1 on a violation");

  std::string law_name;
  std::optional<std::uint32_t> max_day;
  bool positive = false;
  std::optional<std::uint64_t> limit;
  auto* laws_cmd = app.add_subcommand("laws", "Check registered laws");
  laws_cmd->add_option("--law", law_name, "Run only this law");
  laws_cmd->add_option("--max-day", max_day,
                       "Corpus birthday bound (default: per law)");
  laws_cmd->add_flag("--positive", positive, "Restrict the corpus to positives");
  laws_cmd->add_option("--limit", limit, "Stop each law after this many tuples");

  auto* repl_cmd = app.add_subcommand("repl", "Evaluate expressions line by line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<std::size_t> budget = node_budget(err);
  if (!budget) return kUsage;
  Arena arena(*budget);

  try {
    if (*eval_cmd) return evaluate(arena, expr_text, json, out, err);
    if (*tree_cmd) return run_tree(arena, days, format, check_tree, out);
    if (*laws_cmd) {
      return run_laws(arena, law_name, max_day, positive, limit, out, err);
    }
    if (*repl_cmd) return run_repl(arena, in, out, err, prompt);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace surreal::cli
