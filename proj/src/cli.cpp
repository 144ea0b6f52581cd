#include "ocvar/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ocvar/extraction.hpp"
#include "ocvar/json_io.hpp"
#include "ocvar/layout.hpp"
#include "ocvar/ocel.hpp"

namespace ocvar::cli {
namespace {

/// Carries an exit code and a machine-readable error kind to the top level.
class Failure : public std::runtime_error {
 public:
  Failure(int code, std::string kind, std::string message)
      : std::runtime_error(std::move(message)), code_(code), kind_(std::move(kind)) {}
  int code() const noexcept { return code_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  int code_;
  std::string kind_;
};

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  ordered_json j = {{"error", kind}, {"message", message}};
  err << j.dump() << '\n';
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure(kInputError, "UnreadableInput", "cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

EventLog load(const RunConfig& config, std::istream& in, std::ostream& err) {
  const std::string text = read_input(config.input, in);
  EventLog log;
  try {
    log = parse_log(text);
  } catch (const LogError& e) {
    throw Failure(kInputError, to_string(e.kind()), e.what());
  }
  if (!config.quiet) {
    constexpr std::size_t kShown = 5;
    const auto& warnings = log.warnings();
    for (std::size_t i = 0; i < warnings.size() && i < kShown; ++i) err << "warning: " << warnings[i] << '\n';
    if (warnings.size() > kShown) err << "warning: " << warnings.size() - kShown << " more warnings\n";
  }
  return log;
}

void validate(const RunConfig& config) {
  if (config.strategy != "components" && config.strategy != "leading") {
    throw Failure(kConfigError, "InvalidConfig", "--strategy must be 'components' or 'leading'");
  }
  if (config.strategy == "leading" && !config.leading_type) {
    throw Failure(kConfigError, "InvalidConfig", "--strategy leading requires --leading-type");
  }
  if (config.wl_iterations < 1) throw Failure(kConfigError, "InvalidConfig", "--wl-iterations must be >= 1");
  if (config.geometry.cell_width <= 0 || config.geometry.cell_height <= 0) {
    throw Failure(kConfigError, "InvalidConfig", "cell dimensions must be positive");
  }
  if (config.rank && *config.rank == 0) throw Failure(kConfigError, "InvalidConfig", "--rank starts at 1");
}

std::string strategy_key(const RunConfig& config) {
  return config.strategy == "leading" ? "leading:" + *config.leading_type : "components";
}

std::vector<ProcessExecution> extract(const RunConfig& config, const ExecutionExtractor& extractor) {
  if (config.strategy == "components") return extractor.components();
  const auto type = extractor.log().find_type(*config.leading_type);
  if (!type) {
    throw Failure(kConfigError, "UnknownType", "unknown object type '" + *config.leading_type + "'");
  }
  return extractor.leading_type(*type, config.threads);
}

VariantReport mine(const RunConfig& config, const EventLog& log, const std::vector<ProcessExecution>& execs,
                   std::ostream& err) {
  MiningOptions options;
  options.mode = config.mode;
  options.wl_iterations = config.wl_iterations;
  options.threads = config.threads;
  if (!config.quiet) {
    options.progress = [&err](std::size_t done) { err << "progress: hashed " << done << " executions\n"; };
  }
  try {
    return mine_variants(log, execs, config.attribute, options);
  } catch (const MissingAttribute& e) {
    throw Failure(kConfigError, "MissingAttribute", e.what());
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output || *config.output == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!file) throw Failure(kConfigError, "UnwritableOutput", "cannot write '" + *config.output + "'");
  file << text << '\n';
}

int cmd_stats(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const EventLog log = load(config, in, err);
  const ExecutionExtractor extractor(log);
  const auto execs = extract(config, extractor);
  const std::size_t variants = execs.empty() ? 0 : mine(config, log, execs, err).classes.size();

  ordered_json j = stats_to_json(log_stats(log));
  ordered_json per_strategy = ordered_json::object();
  per_strategy[strategy_key(config)] = summary_to_json(summarize(execs), variants);
  j["per_strategy"] = std::move(per_strategy);
  emit(config, j.dump(2), out);
  return kSuccess;
}

int cmd_extract(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const EventLog log = load(config, in, err);
  const ExecutionExtractor extractor(log);
  emit(config, executions_to_json(log, extract(config, extractor)).dump(2), out);
  return kSuccess;
}

int cmd_variants(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const EventLog log = load(config, in, err);
  const ExecutionExtractor extractor(log);
  const auto execs = extract(config, extractor);
  VariantReport report;
  report.attribute = config.attribute;
  report.mode = config.mode;
  if (!execs.empty()) report = mine(config, log, execs, err);
  emit(config, report_to_json(log, execs, report).dump(2), out);
  return kSuccess;
}

int cmd_render(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const EventLog log = load(config, in, err);
  const ExecutionExtractor extractor(log);
  const auto execs = extract(config, extractor);
  if (execs.empty()) throw Failure(kConfigError, "NoVariants", "the log yields no executions");
  const VariantReport report = mine(config, log, execs, err);

  std::vector<std::size_t> ranks;
  if (config.rank) {
    if (*config.rank > report.classes.size()) {
      throw Failure(kConfigError, "RankOutOfRange",
                    "rank " + std::to_string(*config.rank) + " exceeds the " +
                        std::to_string(report.classes.size()) + " mined variants");
    }
    ranks.push_back(*config.rank);
  } else {
    std::size_t top = config.top;
    if (top > report.classes.size()) {
      err << "warning: requested top " << top << " but only " << report.classes.size() << " variants exist\n";
      top = report.classes.size();
    }
    for (std::size_t r = 1; r <= top; ++r) ranks.push_back(r);
  }

  const std::filesystem::path dir = config.output.value_or(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure(kConfigError, "UnwritableOutput", "cannot create '" + dir.string() + "'");

  for (std::size_t rank : ranks) {
    const EquivalenceClass& cls = report.classes[rank - 1];
    const ProcessExecution& exec = execs[cls.representative];
    const LayoutGrid grid = layout_variant(log, cls.representative_projection, exec);
    std::map<std::string, std::string> labels;
    for (const Cell& cell : grid.cells) {
      labels[cell.event_id] = cls.representative_projection.node_label(cell.node).value;
    }
    const Palette palette = Palette::build(log.types(), grid);
    for (const auto& w : palette.warnings) err << "warning: " << w << '\n';
    const auto path = dir / ("variant-" + std::to_string(rank) + "-" + cls.class_id + ".svg");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Failure(kConfigError, "UnwritableOutput", "cannot write '" + path.string() + "'");
    file << render_svg(grid, labels, palette, config.geometry);
    if (!config.quiet) out << path.string() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string mode = "exact";

  CLI::App app{"Object-centric process execution extraction and variant mining", "ocvar"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "OCEL JSON log ('-' for stdin)")->required();
    sub->add_option("--strategy", config.strategy, "components | leading")->capture_default_str();
    sub->add_option("--leading-type", config.leading_type, "object type for the leading strategy");
    sub->add_option("--out", config.output, "output file (directory for render)");
    sub->add_option("--threads", config.threads, "worker cap, 0 = all cores")->capture_default_str();
    sub->add_flag("--quiet", config.quiet, "suppress progress and warnings");
  };
  auto add_mining = [&](CLI::App* sub) {
    sub->add_option("--attribute", config.attribute, "event attribute to project on")->capture_default_str();
    sub->add_option("--mode", mode, "exact | approximate")->capture_default_str();
    sub->add_option("--wl-iterations", config.wl_iterations, "Weisfeiler-Lehman rounds")->capture_default_str();
  };

  auto* stats = app.add_subcommand("stats", "log and extraction statistics");
  add_common(stats);
  add_mining(stats);
  auto* extract_cmd = app.add_subcommand("extract", "write process executions as JSON");
  add_common(extract_cmd);
  auto* variants = app.add_subcommand("variants", "mine object-centric variants");
  add_common(variants);
  add_mining(variants);
  auto* render = app.add_subcommand("render", "render variants as SVG chevron diagrams");
  add_common(render);
  add_mining(render);
  render->add_option("--top", config.top, "render the k most frequent variants")->capture_default_str();
  render->add_option("--rank", config.rank, "render only this rank (1 = most frequent)");
  render->add_option("--cell-width", config.geometry.cell_width, "chevron width in px")->capture_default_str();
  render->add_option("--cell-height", config.geometry.cell_height, "chevron height in px")->capture_default_str();
  render->add_option("--arrow-depth", config.geometry.arrow_depth, "chevron arrow depth in px")->capture_default_str();
  render->add_option("--lane-gap", config.geometry.lane_gap, "vertical gap between lanes in px")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("ocvar");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(err, "InvalidConfig", e.what());
    return kConfigError;
  }

  try {
    if (mode == "exact") config.mode = MiningMode::Exact;
    else if (mode == "approximate") config.mode = MiningMode::Approximate;
    else throw Failure(kConfigError, "InvalidConfig", "--mode must be 'exact' or 'approximate'");
    validate(config);

    if (stats->parsed()) return cmd_stats(config, in, out, err);
    if (extract_cmd->parsed()) return cmd_extract(config, in, out, err);
    if (variants->parsed()) return cmd_variants(config, in, out, err);
    return cmd_render(config, in, out, err);
  } catch (const Failure& f) {
    report_error(err, f.kind(), f.what());
    return f.code();
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kInternalError;
  }
}

}  // namespace ocvar::cli
