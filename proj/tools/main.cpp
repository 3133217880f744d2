#include "cli.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

namespace bsg::cli {

namespace {

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_csv(std::ostream& os, const Json& report) {
  Json rows = report.contains("rows") && report["rows"].is_array() ? report["rows"] : Json::array({report});
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
    if (it.key() != "rows") cols.push_back(it.key());
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? cell(r[cols[i]]) : "");
    os << "\n";
  }
}

}  // namespace

void emit(const Context& ctx, const Json& report) {
  if (ctx.format == "csv") {
    emit_csv(std::cout, report);
  } else if (ctx.format == "text" && report.is_object()) {
    for (auto it = report.begin(); it != report.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

void on_run(CLI::App* sub, Context& ctx, std::function<int()> cb) {
  sub->callback([&ctx, cb = std::move(cb)] { ctx.exit_code = cb(); });
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Splices key=value lines from --config into argv after the subcommand path.
// Keys already given on the command line are left alone; unknown keys are usage errors.
std::vector<std::string> apply_config(const CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  const CLI::App* leaf = &app;
  std::size_t insert_at = 1;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i].empty() || args[i][0] == '-') continue;
    if (const CLI::App* sub = leaf->get_subcommand_no_throw(args[i])) {
      leaf = sub;
      insert_at = i + 1;
    }
  }

  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open config " + path);
  std::vector<std::string> extra;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ConversionError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    std::string flag = "--" + key;
    const CLI::Option* opt = nullptr;
    for (const CLI::App* a = leaf; a && !opt; a = a->get_parent())
      opt = a->get_option_no_throw(flag);
    if (!opt || key == "config" || key == "help")
      throw CLI::ConversionError("unknown config key '" + key + "' for '" + leaf->get_name() + "'");
    bool given = std::any_of(args.begin() + 1, args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    extra.push_back(flag + "=" + value);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(insert_at), extra.begin(), extra.end());
  return args;
}

}  // namespace

}  // namespace bsg::cli

int main(int argc, char** argv) {
  using namespace bsg::cli;
  Context ctx;
  CLI::App app{"Baumslag-Solitar groups, their measured groupoids and cocycles", "bsg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--config", ctx.config, "flat key=value file of option defaults");

  add_bs(app, ctx);
  add_tree(app, ctx);
  add_groupoid(app, ctx);
  add_cocycle(app, ctx);
  add_profinite(app, ctx);
  add_dynamics(app, ctx);
  add_suite(app, ctx);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = apply_config(app, std::move(args));
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  } catch (const bsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return ctx.exit_code;
}
