#include "starseq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "starseq/error.hpp"
#include "starseq/oracle.hpp"
#include "starseq/records.hpp"
#include "starseq/star.hpp"
#include "starseq/zagreb.hpp"

namespace starseq {

namespace {

// Exhaustive runs are verified and emitted in blocks of this many graphs.
constexpr std::uint64_t kVerifyBlock = 2048;

enum class InputFormat { inferred, edgelist, graph6 };

struct InputItem {
  std::string id;
  std::optional<Graph> graph;
  std::string error;
};

struct CommonOptions {
  std::string input;
  std::string format = "auto";
  bool json = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

InputFormat resolve_format(const CommonOptions& opts) {
  if (opts.format == "edgelist") return InputFormat::edgelist;
  if (opts.format == "graph6") return InputFormat::graph6;
  return opts.input.ends_with(".g6") ? InputFormat::graph6
                                     : InputFormat::edgelist;
}

std::vector<InputItem> load_inputs(const CommonOptions& opts) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (opts.input != "-") {
    file.open(opts.input);
    if (!file) throw UsageError("cannot open '" + opts.input + "'");
    in = &file;
  }

  std::vector<InputItem> items;
  if (resolve_format(opts) == InputFormat::edgelist) {
    InputItem item{opts.input, std::nullopt, {}};
    try {
      item.graph = parse_edge_list(*in);
    } catch (const Error& e) {
      item.error = e.what();
    }
    items.push_back(std::move(item));
    return items;
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    InputItem item{opts.input + ":" + std::to_string(line_no), std::nullopt, {}};
    try {
      item.graph = parse_graph6(line);
    } catch (const Error& e) {
      item.error = e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::ostream& err, bool json)
      : out_(out), err_(err), json_(json) {}

  void record(const Json& r) {
    if (json_)
      out_ << r.dump() << '\n';
    else
      write_text(out_, r);
  }

  void error(const std::string& id, const std::string& message) {
    had_input_error_ = true;
    err_ << id << ": " << message << '\n';
    if (json_) out_ << error_record(id, message).dump() << '\n';
  }

  bool had_input_error() const { return had_input_error_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool json_;
  bool had_input_error_ = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool input_required) {
  auto* input = cmd->add_option("input", opts.input,
                                "Edge-list or graph6 file ('-' for stdin)");
  if (input_required) input->required();
  cmd->add_option("--format", opts.format, "Input format (default: .g6 means graph6)")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  cmd->add_flag("--json", opts.json, "Newline-delimited JSON output");
}

int cmd_info(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  Emitter emit(out, err, opts.json);
  for (const auto& item : load_inputs(opts)) {
    if (!item.graph) {
      emit.error(item.id, item.error);
      continue;
    }
    emit.record(info_record(item.id, *item.graph));
  }
  return emit.had_input_error() ? kExitInputError : kExitOk;
}

int cmd_zagreb(const CommonOptions& opts, std::uint64_t p,
               const std::string& method, std::ostream& out,
               std::ostream& err) {
  if (method == "star" && p == 0)
    throw UsageError(
        "--method star needs --p >= 1: the star formula gives 2m at p = 0; "
        "use --method direct for Z_0 = n");
  Emitter emit(out, err, opts.json);
  bool disagreement = false;
  for (const auto& item : load_inputs(opts)) {
    if (!item.graph) {
      emit.error(item.id, item.error);
      continue;
    }
    const Graph& g = *item.graph;
    ZagrebValues values;
    values.p = p;
    const bool all = method == "all";
    if (all || method == "direct") values.direct = zagreb_direct(g, p);
    if ((all && p >= 1) || method == "star")
      values.star = zagreb_from_stars(star_sequence(g), p);
    if (all || method == "recurrence")
      values.recurrence = zagreb_by_recurrence(g, p);
    if (!values.agree()) {
      disagreement = true;
      err << item.id << ": Zagreb routes disagree at p = " << p << '\n';
    }
    emit.record(zagreb_record(item.id, g, values));
  }
  if (disagreement) return kExitVerificationFailure;
  return emit.had_input_error() ? kExitInputError : kExitOk;
}

int cmd_genfunc(const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
  Emitter emit(out, err, opts.json);
  for (const auto& item : load_inputs(opts)) {
    if (!item.graph) {
      emit.error(item.id, item.error);
      continue;
    }
    emit.record(genfunc_record(item.id, genfunc_numerator(*item.graph)));
  }
  return emit.had_input_error() ? kExitInputError : kExitOk;
}

struct VerifyOptions {
  bool exhaustive = false;
  std::size_t n = 0;
  std::uint64_t p_max = 8;
  std::uint64_t m_max = 4;
  unsigned jobs = 1;
};

struct VerifySummary {
  std::uint64_t graphs = 0;
  std::uint64_t identities = 0;
  std::uint64_t failures = 0;
  std::uint64_t failed_graphs = 0;
  std::map<std::string, std::uint64_t> errata;

  void add(const TheoremReport& r) {
    ++graphs;
    identities += r.cases();
    failures += r.failures();
    if (!r.passed()) ++failed_graphs;
    for (const auto& e : r.errata) ++errata[e.id];
  }

  Json to_json(std::uint64_t input_errors) const {
    Json e = Json::object();
    for (const auto& [id, count] : errata) e[id] = count;
    return {{"summary",
             {{"graphs", graphs},
              {"identities", identities},
              {"failures", failures},
              {"failed_graphs", failed_graphs},
              {"input_errors", input_errors},
              {"errata_graphs", e}}}};
  }
};

// Verifies graphs [0, count) produced by `make` with `jobs` workers, handing
// reports to `sink` in index order.
template <class Make, class Sink>
void verify_in_order(std::uint64_t count, unsigned jobs,
                     const VerifyOptions& opts, Make make, Sink sink) {
  std::vector<std::optional<TheoremReport>> block;
  for (std::uint64_t start = 0; start < count; start += kVerifyBlock) {
    const std::uint64_t len = std::min(kVerifyBlock, count - start);
    block.assign(len, std::nullopt);
    auto work = [&](unsigned worker) {
      for (std::uint64_t i = worker; i < len; i += jobs) {
        auto [id, graph] = make(start + i);
        block[i] = verify_all_identities(graph, opts.p_max, opts.m_max, id);
      }
    };
    if (jobs <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& r : block) sink(*r);
  }
}

int cmd_verify(const CommonOptions& opts, VerifyOptions vopts,
               std::ostream& out, std::ostream& err) {
  if (vopts.exhaustive == !opts.input.empty())
    throw UsageError("verify takes either an input file or --exhaustive --n N");
  if (vopts.exhaustive &&
      (vopts.n == 0 || vopts.n > kMaxEnumerationVertices))
    throw UsageError("--n must be in [1, " +
                     std::to_string(kMaxEnumerationVertices) +
                     "] for --exhaustive");
  if (vopts.jobs == 0) vopts.jobs = std::max(1U, std::thread::hardware_concurrency());

  Emitter emit(out, err, opts.json);
  VerifySummary summary;
  auto sink = [&](const TheoremReport& r) {
    summary.add(r);
    emit.record(report_record(r));
  };

  if (vopts.exhaustive) {
    const LabeledGraphs graphs(vopts.n);
    verify_in_order(graphs.size(), vopts.jobs, vopts,
                    [&](std::uint64_t mask) {
                      return std::pair{"n=" + std::to_string(vopts.n) +
                                           " mask=" + std::to_string(mask),
                                       graph_from_mask(vopts.n, mask)};
                    },
                    sink);
  } else {
    // Input errors are reported in input order between the reports.
    const auto items = load_inputs(opts);
    std::vector<std::size_t> good;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].graph) good.push_back(i);
    std::size_t next_item = 0;
    auto flush_errors_before = [&](std::size_t index) {
      for (; next_item < index; ++next_item)
        if (!items[next_item].graph)
          emit.error(items[next_item].id, items[next_item].error);
      next_item = index + 1;
    };
    std::uint64_t emitted = 0;
    verify_in_order(good.size(), vopts.jobs, vopts,
                    [&](std::uint64_t i) {
                      const auto& item = items[good[i]];
                      return std::pair{item.id, *item.graph};
                    },
                    [&](const TheoremReport& r) {
                      flush_errors_before(good[emitted++]);
                      sink(r);
                    });
    flush_errors_before(items.size());
  }

  std::uint64_t input_errors = emit.had_input_error() ? 1 : 0;
  if (opts.json) {
    out << summary.to_json(input_errors).dump() << '\n';
  } else {
    out << "summary: graphs=" << summary.graphs
        << " identities=" << summary.identities
        << " failures=" << summary.failures
        << " failed_graphs=" << summary.failed_graphs;
    for (const auto& [id, count] : summary.errata)
      out << " erratum." << id << "=" << count;
    out << '\n';
  }
  if (summary.failures > 0) return kExitVerificationFailure;
  return emit.had_input_error() ? kExitInputError : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Star sequences, frequency sequences and general first Zagreb indices "
      "of simple graphs"};
  app.require_subcommand(1);

  CommonOptions info_opts, zagreb_opts, genfunc_opts, verify_opts;
  std::uint64_t p = 0;
  std::string method = "all";
  VerifyOptions vopts;

  auto* info = app.add_subcommand("info", "Degrees, frequency and star sequences, classification");
  add_common(info, info_opts, true);

  auto* zagreb = app.add_subcommand("zagreb", "General first Zagreb index Z_p");
  add_common(zagreb, zagreb_opts, true);
  zagreb->add_option("--p", p, "Exponent p >= 0")->required();
  zagreb->add_option("--method", method, "Evaluation route")
      ->check(CLI::IsMember({"direct", "star", "recurrence", "all"}));

  auto* genfunc = app.add_subcommand("genfunc", "Generating-function numerator of Z_p");
  add_common(genfunc, genfunc_opts, true);

  auto* verify = app.add_subcommand("verify", "Check every identity against brute force");
  add_common(verify, verify_opts, false);
  verify->add_flag("--exhaustive", vopts.exhaustive, "Enumerate all labeled graphs on --n vertices");
  verify->add_option("--n", vopts.n, "Vertex count for --exhaustive");
  verify->add_option("--p-max", vopts.p_max, "Largest Zagreb exponent")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000}));
  verify->add_option("--m-max", vopts.m_max, "Largest moment order")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000}));
  verify->add_option("--jobs", vopts.jobs, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*info) return cmd_info(info_opts, out, err);
    if (*zagreb) return cmd_zagreb(zagreb_opts, p, method, out, err);
    if (*genfunc) return cmd_genfunc(genfunc_opts, out, err);
    if (*verify) return cmd_verify(verify_opts, vopts, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace starseq
