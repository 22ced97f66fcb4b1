// crosstopo — decidable cross-topology predicates on the rational unit
// square, raster connectivity checks, cross-mapping classification, and
// the pointwise-approximation harnesses, behind one JSON-in/JSON-out CLI.
//
// Exit codes: 0 success (and verdict matches --expect when given),
//             2 verdict mismatch against --expect,
//             1 unreadable input, schema violations, or runtime errors.

#include "crosstopo/json_io.hpp"
#include "crosstopo/suites.hpp"
#include "crosstopo/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace crosstopo;

Json load_input(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) {
      throw ValidationError("cannot open input file '" + arg + "'");
    }
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

void emit_report(const Json& report, const std::string& output_path) {
  const std::string text = report.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(output_path, text);
  }
}

int finish(Json report, const std::string& output_path,
           const std::string& expect) {
  const std::string verdict = report.at("verdict").get<std::string>();
  emit_report(report, output_path);
  if (!expect.empty() && expect != verdict) {
    std::cerr << "expected verdict '" << expect << "', got '" << verdict
              << "'\n";
    return 2;
  }
  return 0;
}

std::vector<Rat> parse_level_list(const std::string& csv) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    const std::string item = csv.substr(start, comma - start);
    if (!item.empty()) out.push_back(parse_rat(item, "levels"));
    start = comma + 1;
  }
  return out;
}

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* cap = std::getenv("CROSSTOPO_BUDGET")) {
    limits.max_yield = std::strtoull(cap, nullptr, 10);
  }
  return limits;
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string expect;
  std::string svg;
};

void attach_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
  auto* in = cmd->add_option("--input,-i", opts.input,
                             "input file path or inline JSON");
  if (needs_input) in->required();
  cmd->add_option("--output,-o", opts.output,
                  "report file (stdout when omitted)");
  cmd->add_option("--expect", opts.expect,
                  "expected verdict; mismatches exit with status 2");
  cmd->add_option("--svg", opts.svg, "write a figure to this SVG file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-topology verification toolkit"};
  app.require_subcommand(1);

  CommonOpts gamma_open_opts;
  std::string gamma_open_mode = "direct";
  auto* cmd_gamma_open =
      app.add_subcommand("gamma-open", "decide cross-topology openness");
  attach_common(cmd_gamma_open, gamma_open_opts);
  cmd_gamma_open->add_option("--mode", gamma_open_mode,
                             "direct or complement (default direct)");

  CommonOpts gamma_compact_opts;
  auto* cmd_gamma_compact = app.add_subcommand(
      "gamma-compact", "decide cross-topology compactness with certificates");
  attach_common(cmd_gamma_compact, gamma_compact_opts);

  CommonOpts gamma_limit_opts;
  auto* cmd_gamma_limit =
      app.add_subcommand("gamma-limit", "cross-topology limit of a sequence");
  attach_common(cmd_gamma_limit, gamma_limit_opts);

  CommonOpts gamma_discrete_opts;
  auto* cmd_gamma_discrete = app.add_subcommand(
      "gamma-discrete", "certify discreteness of a point family");
  attach_common(cmd_gamma_discrete, gamma_discrete_opts);

  CommonOpts coincide_opts;
  auto* cmd_coincide = app.add_subcommand(
      "coincide", "product/cross coincidence neighborhood on a finite cross");
  attach_common(cmd_coincide, coincide_opts);

  CommonOpts raster_opts;
  int raster_n = 64;
  auto* cmd_raster =
      app.add_subcommand("raster", "rasterize a set and label components");
  attach_common(cmd_raster, raster_opts);
  cmd_raster->add_option("--n", raster_n, "grid resolution (default 64)");

  auto* cmd_crossmap =
      app.add_subcommand("crossmap", "cross-mapping classification tools");
  cmd_crossmap->require_subcommand(1);
  CommonOpts classify_opts;
  auto* cmd_classify = cmd_crossmap->add_subcommand(
      "classify", "row/column collapse of a sampled cross-mapping");
  attach_common(cmd_classify, classify_opts);
  CommonOpts enumerate_opts;
  int enum_n = 2;
  std::string enum_a, enum_b;
  bool count_only = false;
  auto* cmd_enumerate = cmd_crossmap->add_subcommand(
      "enumerate", "exhaustively enumerate admissible grid mappings");
  attach_common(cmd_enumerate, enumerate_opts, /*needs_input=*/false);
  cmd_enumerate->add_option("--n", enum_n, "resolution (1..4)")->required();
  cmd_enumerate->add_option("--a", enum_a, "column levels, comma separated");
  cmd_enumerate->add_option("--b", enum_b, "row levels, comma separated");
  cmd_enumerate->add_flag("--count-only", count_only,
                          "report the count without the mappings");

  auto* cmd_lebesgue =
      app.add_subcommand("lebesgue", "pointwise approximation harnesses");
  cmd_lebesgue->require_subcommand(1);
  CommonOpts refute_opts;
  int refute_window = 8;
  auto* cmd_refute = cmd_lebesgue->add_subcommand(
      "refute", "refute pointwise convergence to the identity");
  attach_common(cmd_refute, refute_opts);
  cmd_refute->add_option("--window", refute_window,
                         "minimum inspection window (default 8)");
  CommonOpts approx_opts;
  int approx_depth = 12, approx_level = 1;
  std::string approx_oracle = "builtin:lipschitz";
  auto* cmd_approx = cmd_lebesgue->add_subcommand(
      "approx", "cylinder-level approximants of a separately continuous map");
  attach_common(cmd_approx, approx_opts, /*needs_input=*/false);
  cmd_approx->add_option("--depth", approx_depth,
                         "model depth D (default 12)");
  cmd_approx->add_option("--level", approx_level, "approximation level n");
  cmd_approx->add_option("--oracle", approx_oracle,
                         "builtin:<constant-x|depth1|lipschitz>");

  CommonOpts suite_opts;
  std::string suite_name;
  std::uint64_t suite_seed = 42;
  auto* cmd_suite =
      app.add_subcommand("suite", "run a bundled verification suite");
  cmd_suite->add_option("name", suite_name, "suite name")->required();
  cmd_suite->add_option("--seed", suite_seed, "rng seed (default 42)");
  cmd_suite->add_option("--output,-o", suite_opts.output,
                        "report file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gamma_open->parsed()) {
      const SetDesc s = setdesc_from_json(load_input(gamma_open_opts.input));
      if (gamma_open_mode != "direct" && gamma_open_mode != "complement") {
        throw ValidationError("mode must be 'direct' or 'complement'");
      }
      const bool open = is_gamma_open(s, gamma_open_mode == "direct"
                                             ? GammaMode::direct
                                             : GammaMode::complement);
      Json report = make_report("gamma-open", open ? "open" : "not-open");
      report["mode"] = gamma_open_mode;
      return finish(report, gamma_open_opts.output, gamma_open_opts.expect);
    }
    if (cmd_gamma_compact->parsed()) {
      const SetDesc s =
          setdesc_from_json(load_input(gamma_compact_opts.input));
      const GammaCompactResult result = is_gamma_compact(s);
      Json payload = compact_result_to_json(result);
      Json report = make_report("gamma-compact",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      Json replay = Json::array();
      if (const auto* cert = std::get_if<GammaCompactCert>(&result)) {
        replay.push_back(cross_cover_includes(s, cert->cross_cover)
                             ? "cross cover inclusion re-verified"
                             : "cross cover inclusion FAILED re-verification");
      }
      report["replay_log"] = replay;
      return finish(report, gamma_compact_opts.output,
                    gamma_compact_opts.expect);
    }
    if (cmd_gamma_limit->parsed()) {
      const SeqSpec seq =
          seqspec_from_json(load_input(gamma_limit_opts.input), "seq");
      Json payload = gamma_limit_to_json(gamma_limit(seq));
      Json report = make_report("gamma-limit",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      return finish(report, gamma_limit_opts.output, gamma_limit_opts.expect);
    }
    if (cmd_gamma_discrete->parsed()) {
      const Json input = load_input(gamma_discrete_opts.input);
      DiscreteResult result;
      if (input.contains("points")) {
        std::vector<Point> pts;
        const Json& arr = input.at("points");
        for (std::size_t i = 0; i < arr.size(); ++i) {
          pts.push_back(
              point_from_json(arr[i], "points[" + std::to_string(i) + "]"));
        }
        result = verify_gamma_discrete(pts);
      } else {
        result = verify_gamma_discrete(seqspec_from_json(input, "seq"));
      }
      Json payload = discrete_result_to_json(result);
      Json report = make_report("gamma-discrete",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      return finish(report, gamma_discrete_opts.output,
                    gamma_discrete_opts.expect);
    }
    if (cmd_coincide->parsed()) {
      const Json input = load_input(coincide_opts.input);
      std::vector<Rat> a, b;
      for (const Json& v : require_field(input, "a", "")) {
        a.push_back(rat_from_json(v, "a"));
      }
      for (const Json& v : require_field(input, "b", "")) {
        b.push_back(rat_from_json(v, "b"));
      }
      const Point p = point_from_json(require_field(input, "p", ""), "p");
      Json payload =
          coincidence_to_json(local_coincidence_neighborhood(a, b, p));
      Json report = make_report("coincide",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      return finish(report, coincide_opts.output, coincide_opts.expect);
    }
    if (cmd_raster->parsed()) {
      const Json input = load_input(raster_opts.input);
      SetDesc s;
      std::vector<Point> punctures;
      if (input.contains("set")) {
        s = setdesc_from_json(input.at("set"), "set");
        if (input.contains("punctures")) {
          const Json& arr = input.at("punctures");
          for (std::size_t i = 0; i < arr.size(); ++i) {
            punctures.push_back(point_from_json(
                arr[i], "punctures[" + std::to_string(i) + "]"));
          }
        }
      } else {
        s = setdesc_from_json(input);
      }
      GridMask mask = rasterize(s, raster_n);
      for (const Point& p : punctures) {
        const auto [col, row] = cell_of(raster_n, p);
        mask.set(col, row, false);
      }
      const ComponentLabels labels = label_components(mask);
      Json payload = components_to_json(mask, labels);
      Json report = make_report("raster", "report");
      report.update(payload);
      if (!raster_opts.svg.empty()) {
        write_text_file(raster_opts.svg, mask_svg(mask, labels));
        report["svg"] = raster_opts.svg;
      }
      return finish(report, raster_opts.output, raster_opts.expect);
    }
    if (cmd_classify->parsed()) {
      const Json input = load_input(classify_opts.input);
      const GridFn f = gridfn_from_json(require_field(input, "f", ""), "f");
      std::vector<Rat> a, b;
      if (input.contains("a")) {
        for (const Json& v : input.at("a")) {
          a.push_back(rat_from_json(v, "a"));
        }
      }
      if (input.contains("b")) {
        for (const Json& v : input.at("b")) {
          b.push_back(rat_from_json(v, "b"));
        }
      }
      Json payload = classify_to_json(classify_cross_mapping(f, a, b));
      Json report = make_report("crossmap-classify",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      return finish(report, classify_opts.output, classify_opts.expect);
    }
    if (cmd_enumerate->parsed()) {
      const std::vector<Rat> a = parse_level_list(enum_a);
      const std::vector<Rat> b = parse_level_list(enum_b);
      Json mappings = Json::array();
      const std::uint64_t count = enumerate_cross_mappings(
          enum_n, a, b,
          [&](const GridFn& f) {
            if (!count_only) mappings.push_back(gridfn_to_json(f));
          },
          limits_from_env());
      Json report = make_report("crossmap-enumerate", "report");
      report["count"] = count;
      if (!count_only) report["mappings"] = mappings;
      return finish(report, enumerate_opts.output, enumerate_opts.expect);
    }
    if (cmd_refute->parsed()) {
      const Json input = load_input(refute_opts.input);
      const CandidateSeq c = candidates_from_json(input);
      std::vector<Point> probes;
      if (input.contains("probes")) {
        const Json& arr = input.at("probes");
        for (std::size_t i = 0; i < arr.size(); ++i) {
          probes.push_back(
              point_from_json(arr[i], "probes[" + std::to_string(i) + "]"));
        }
      }
      const RefuteWitness w =
          refute_pointwise_identity(c, probes, refute_window);
      Json payload = refute_witness_to_json(w, replay_refutation(w));
      Json report = make_report("lebesgue-refute",
                                payload.at("verdict").get<std::string>());
      report.update(payload);
      return finish(report, refute_opts.output, refute_opts.expect);
    }
    if (cmd_approx->parsed()) {
      const std::string prefix = "builtin:";
      if (approx_oracle.rfind(prefix, 0) != 0) {
        throw ValidationError(
            "oracle must be builtin:<name>; known names: constant-x, "
            "depth1, lipschitz");
      }
      const UltraModel m = make_ultra_model(approx_depth);
      const SepOracle oracle =
          builtin_oracle(approx_oracle.substr(prefix.size()), approx_depth);
      const Baire1Approximant fn =
          baire1_approximate(oracle, m, approx_level);
      std::vector<std::pair<std::uint32_t, Rat>> samples;
      for (int j = 0; j < 32; ++j) {
        samples.push_back(
            {static_cast<std::uint32_t>((j * 2654435761u) % m.point_count()),
             Rat(2 * j + 1) / Rat(64)});
      }
      const ConvergenceReport conv =
          verify_pointwise_convergence(oracle, m, approx_depth, samples);
      Json reps = Json::array();
      for (std::uint32_t q = 0; q < fn.reps.size(); ++q) {
        reps.push_back(
            Json{{"cylinder", format_bits(q, approx_level)},
                 {"representative", format_bits(fn.reps[q], approx_depth)}});
      }
      Json payload = convergence_report_to_json(conv, approx_depth);
      Json report = make_report("lebesgue-approx", "report");
      report["oracle"] = oracle.name;
      report["depth"] = approx_depth;
      report["level"] = approx_level;
      report["representatives"] = reps;
      report.update(payload);
      if (!approx_opts.svg.empty()) {
        std::vector<std::vector<Rat>> curves;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < conv.samples.size() && i < 8; ++i) {
          curves.push_back(conv.samples[i].errors);
          names.push_back("x=" +
                          format_bits(conv.samples[i].x, approx_depth));
        }
        write_text_file(approx_opts.svg, error_curves_svg(curves, names));
        report["svg"] = approx_opts.svg;
      }
      return finish(report, approx_opts.output, approx_opts.expect);
    }
    if (cmd_suite->parsed()) {
      const SuiteReport r = run_suite(suite_name, suite_seed);
      for (const SuiteCheck& c : r.checks) {
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << r.name << "/" << c.id
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
      emit_report(suite_report_to_json(r), suite_opts.output);
      return r.passed() ? 0 : 2;
    }
  } catch (const InsufficientEvidence& e) {
    std::cerr << "insufficient evidence: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
