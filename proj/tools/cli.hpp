#pragma once

#include "io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace bsg::cli {

using io::Json;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Context {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string config;
  int exit_code = kOk;
};

// Prints a report in the selected format. CSV takes rows from a "rows" array when present.
void emit(const Context& ctx, const Json& report);

// Registers cb as the subcommand callback; its return value becomes the exit code.
void on_run(CLI::App* sub, Context& ctx, std::function<int()> cb);

struct ParamOpts {
  long long p = 2, q = 3;
};
void add_params(CLI::App* sub, ParamOpts& o);
BSParams make_params(const ParamOpts& o);

void add_bs(CLI::App& app, Context& ctx);
void add_tree(CLI::App& app, Context& ctx);
void add_groupoid(CLI::App& app, Context& ctx);
void add_cocycle(CLI::App& app, Context& ctx);
void add_profinite(CLI::App& app, Context& ctx);
void add_dynamics(CLI::App& app, Context& ctx);
void add_suite(CLI::App& app, Context& ctx);

}  // namespace bsg::cli
