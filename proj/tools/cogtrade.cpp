#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "cogtrade/core/commands.hpp"
#include "cogtrade/error.hpp"

namespace fs = std::filesystem;
using cogtrade::Error;
using cogtrade::ErrorCode;

namespace {

struct ConfigFlags {
  std::string config;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool config_required = true) {
  auto* c = cmd->add_option("--config", f.config, "JSON run config");
  if (config_required) c->required();
  cmd->add_option("--set", f.sets, "Override a config key, e.g. --set strategy.ema.p_long=50");
  cmd->add_option("--seed", f.seed, "Override the config seed");
  cmd->add_option("--out", f.out, "Output directory (overrides the config)");
}

cogtrade::core::RunConfig load(const ConfigFlags& f, const std::optional<std::string>& mode = {}) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  fs::path base = fs::current_path();
  if (!f.config.empty()) {
    j = cogtrade::core::read_config_json(f.config);
    base = fs::absolute(f.config).parent_path();
  }
  for (const auto& s : f.sets) cogtrade::core::apply_override(j, s);
  if (f.seed) j["seed"] = *f.seed;
  if (mode) j["optimize"]["mode"] = *mode;
  auto rc = cogtrade::core::parse_run_config(j, base);
  if (!f.out.empty()) rc.output = fs::absolute(f.out);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cogtrade: indicators, strategies, backtests and neuroevolution on candle data"};
  app.require_subcommand(1);

  cogtrade::core::IngestOptions ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Validate a candle CSV and store it in a warehouse");
  c_ingest->add_option("--input", ingest.input, "CSV with timestamp,open,high,low,close,volume")->required();
  c_ingest->add_option("--symbol", ingest.symbol, "Symbol name")->required();
  c_ingest->add_option("--interval", ingest.interval, "Bar interval in seconds")->required();
  c_ingest->add_option("--warehouse", ingest.warehouse, "Warehouse root directory")->required();
  c_ingest->add_flag("--allow-gaps", ingest.allow_gaps, "Accept missing bars");

  ConfigFlags f_ind, f_bt, f_paper, f_opt, f_rep;
  std::vector<std::string> specs;
  auto* c_ind = app.add_subcommand("indicator", "Compute indicator columns for the configured data");
  add_config_flags(c_ind, f_ind);
  c_ind->add_option("--spec", specs, "Indicator spec such as macd:fast=12,slow=26,signal=9");

  auto* c_bt = app.add_subcommand("backtest", "Backtest the configured strategy");
  add_config_flags(c_bt, f_bt);

  auto* c_paper = app.add_subcommand("paper", "Backtest, then replay through the simulated exchange");
  add_config_flags(c_paper, f_paper);

  std::string mode;
  auto* c_opt = app.add_subcommand("optimize", "Tune parameters or evolve a network strategy");
  add_config_flags(c_opt, f_opt);
  c_opt->add_option("--mode", mode, "tune or evolve")->check(CLI::IsMember({"tune", "evolve"}));

  std::string report_dir;
  auto* c_rep = app.add_subcommand("report", "Emit chart data for a backtest report");
  add_config_flags(c_rep, f_rep);
  c_rep->add_option("--report", report_dir, "Directory holding report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c_ingest) {
      cogtrade::core::cmd_ingest(ingest, std::cout);
    } else if (*c_ind) {
      std::vector<cogtrade::indicators::IndicatorSpec> parsed;
      for (const auto& s : specs) {
        parsed.push_back(cogtrade::indicators::normalize(cogtrade::indicators::parse_indicator_spec(s)));
      }
      cogtrade::core::cmd_indicator(load(f_ind), parsed, std::cout);
    } else if (*c_bt) {
      cogtrade::core::cmd_backtest(load(f_bt), std::cout);
    } else if (*c_paper) {
      cogtrade::core::cmd_paper(load(f_paper), std::cout);
    } else if (*c_opt) {
      cogtrade::core::cmd_optimize(load(f_opt, mode.empty() ? std::nullopt : std::optional(mode)),
                                   std::cout);
    } else if (*c_rep) {
      const auto rc = load(f_rep);
      const fs::path out = f_rep.out.empty() ? fs::path(report_dir) : rc.output;
      cogtrade::core::cmd_report(report_dir, rc, out, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.line()) std::cerr << " (line " << *e.line() << ")";
    std::cerr << '\n';
    return cogtrade::is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
