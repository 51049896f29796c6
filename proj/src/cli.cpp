#include "htg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "htg/exporting.hpp"
#include "htg/hamilton.hpp"
#include "htg/oracle.hpp"
#include "htg/predict.hpp"

namespace htg::cli {

namespace {

struct Range {
  int lo = 0;
  int hi = -1;
  bool all = false;  // "*", meaning every valid normalized jump
};

Range parse_range(const std::string& text) {
  Range r;
  if (text == "*") {
    r.all = true;
    return r;
  }
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw std::invalid_argument("empty range: " + text);
  return r;
}

// Grammar: comma-separated var=spec with spec = INT | INT..INT | * (jumps
// only). Example: "m=1..4,n=4..12,l=*". Omitted l defaults to *.
struct Sweep {
  Range m, n, l;
};

Sweep parse_sweep(const std::string& text) {
  Sweep sweep;
  sweep.l.all = true;
  bool have_m = false, have_n = false;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("bad sweep item: " + item);
    }
    std::string var = item.substr(0, eq);
    Range range = parse_range(item.substr(eq + 1));
    if (var == "m") {
      if (range.all) throw std::invalid_argument("m range cannot be *");
      sweep.m = range;
      have_m = true;
    } else if (var == "n") {
      if (range.all) throw std::invalid_argument("n range cannot be *");
      sweep.n = range;
      have_n = true;
    } else if (var == "l") {
      sweep.l = range;
    } else {
      throw std::invalid_argument("unknown sweep variable: " + var);
    }
  }
  if (!have_m || !have_n) {
    throw std::invalid_argument("sweep needs both m and n ranges");
  }
  return sweep;
}

std::vector<HtgParams> expand_sweep(const Sweep& sweep, std::ostream& err) {
  std::vector<HtgParams> out;
  for (int m = sweep.m.lo; m <= sweep.m.hi; ++m) {
    for (int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
      if (sweep.l.all) {
        if (m < 1 || n < 4 || n % 2 != 0) {
          err << "sweep: skip m=" << m << " n=" << n
              << " (need m >= 1 and even n >= 4)\n";
          continue;
        }
        for (int l : valid_jumps(m, n, true)) out.push_back({m, n, l});
      } else {
        for (int l = sweep.l.lo; l <= sweep.l.hi; ++l) {
          try {
            out.push_back(validate_params(m, n, l));
          } catch (const HtgError& e) {
            err << "sweep: skip m=" << m << " n=" << n << " l=" << l << " ("
                << errc_name(e.code()) << ")\n";
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int exit_code_for(const std::vector<predict::PropertyReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == predict::Verdict::Mismatch) return 1;
    if (r.verdict == predict::Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

struct AuditRun {
  std::vector<HtgParams> triples;
  std::vector<std::string> checks;
  std::uint64_t budget = oracle::kDefaultBudget;
  int jobs = 1;
  bool json = false;
};

int run_audit(const AuditRun& spec, std::ostream& out) {
  std::vector<std::vector<predict::PropertyReport>> results(spec.triples.size());
  auto work = [&](std::size_t k) {
    predict::AuditOptions options;
    options.budget = spec.budget;
    results[k] = predict::audit(spec.triples[k], spec.checks, options);
  };
  if (spec.jobs <= 1) {
    for (std::size_t k = 0; k < spec.triples.size(); ++k) work(k);
  } else {
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (int t = 0; t < spec.jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t k;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= spec.triples.size()) return;
            k = next++;
          }
          work(k);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<predict::PropertyReport> merged;
  for (auto& rows : results) {
    merged.insert(merged.end(), rows.begin(), rows.end());
  }
  if (spec.json) {
    out << predict::reports_json(merged, spec.budget);
  } else {
    out << "# budget=" << spec.budget << '\n';
    out << predict::report_tsv_header();
    for (const auto& r : merged) out << predict::report_tsv_row(r);
  }
  return exit_code_for(merged);
}

void check_properties(const std::vector<std::string>& checks) {
  const auto& known = predict::known_properties();
  for (const auto& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw CLI::ValidationError("--check", "unknown property: " + c);
    }
  }
  if (checks.empty()) {
    throw CLI::ValidationError("--check", "no properties given");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"honeycomb toroidal graph toolkit"};
  app.name("htg");
  app.require_subcommand(1);

  int m = 0, n = 0, l = 0;
  std::string format = "edges";
  std::string check_list;
  std::string sweep_text;
  std::string out_file;
  std::uint64_t budget = oracle::kDefaultBudget;
  int jobs = 1;

  auto add_params = [&](CLI::App* cmd, bool required) {
    auto* om = cmd->add_option("-m", m, "number of columns");
    auto* on = cmd->add_option("-n", n, "column cycle length (even >= 4)");
    auto* ol = cmd->add_option("-l", l, "wrap-around jump");
    if (required) {
      om->required();
      on->required();
      ol->required();
    }
  };

  auto* gen = app.add_subcommand("gen", "construct a graph and export it");
  add_params(gen, true);
  gen->add_option("--format", format, "edges|dot|json")
      ->check(CLI::IsMember({"edges", "dot", "json"}));
  gen->add_option("--out", out_file, "write to file instead of stdout");

  auto* ham = app.add_subcommand(
      "hamilton", "construct a Hamilton cycle and validate it");
  add_params(ham, true);
  std::string ham_format = "lines";
  ham->add_option("--format", ham_format, "lines|json")
      ->check(CLI::IsMember({"lines", "json"}));

  std::string lace_format = "text";
  auto* lace = app.add_subcommand(
      "laceable", "exhaustive Hamilton-laceability check from u_{0,0}");
  add_params(lace, true);
  lace->add_option("--budget", budget, "node expansions per endpoint pair");
  lace->add_option("--jobs", jobs, "parallel searches");
  lace->add_option("--format", lace_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string report_format = "tsv";
  auto* props = app.add_subcommand(
      "props", "predicted vs observed properties for one graph");
  add_params(props, true);
  props->add_option("--check", check_list, "comma-separated properties")
      ->required();
  props->add_option("--budget", budget, "node expansion budget");
  props->add_option("--format", report_format, "tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* audit_cmd = app.add_subcommand(
      "audit", "audit one triple or a sweep, emitting TSV or JSON");
  add_params(audit_cmd, false);
  audit_cmd->add_option("--sweep", sweep_text, "e.g. \"m=1..4,n=4..12,l=*\"");
  audit_cmd->add_option("--check", check_list, "comma-separated properties")
      ->required();
  audit_cmd->add_option("--budget", budget, "node expansion budget");
  audit_cmd->add_option("--jobs", jobs, "work pool size");
  audit_cmd->add_option("--out", out_file, "write the report to a file");
  audit_cmd->add_option("--format", report_format, "tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "audit a parameter sweep, emitting TSV or JSON");
  sweep_cmd->add_option("--sweep", sweep_text, "e.g. \"m=1..4,n=4..12,l=*\"")
      ->required();
  sweep_cmd->add_option("--check", check_list, "comma-separated properties")
      ->required();
  sweep_cmd->add_option("--budget", budget, "node expansion budget");
  sweep_cmd->add_option("--jobs", jobs, "work pool size");
  sweep_cmd->add_option("--out", out_file, "write the report to a file");
  sweep_cmd->add_option("--format", report_format, "tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file_stream;
  std::ostream* sink = &out;
  if (!out_file.empty()) {
    file_stream.open(out_file);
    if (!file_stream) {
      err << "error: cannot open " << out_file << '\n';
      return 2;
    }
    sink = &file_stream;
  }

  try {
    if (gen->parsed()) {
      HtgGraph g = build(validate_params(m, n, l));
      ExportFormat f = format == "dot"    ? ExportFormat::Dot
                       : format == "json" ? ExportFormat::Json
                                          : ExportFormat::EdgeList;
      *sink << export_graph(g, f);
      return 0;
    }

    if (ham->parsed()) {
      HtgParams p = validate_params(m, n, l);
      VertexSeq cycle = hamilton::hamilton_cycle(p);
      if (ham_format == "json") {
        *sink << seq_to_json(cycle);
      } else {
        for (const VertexId& v : cycle.vertices) {
          *sink << v.i << ',' << v.j << '\n';
        }
      }
      HtgGraph g = build(p);
      bool ok = is_hamilton_cycle(g, cycle);
      err << (ok ? "valid hamilton cycle, " : "INVALID cycle, ")
          << cycle.vertices.size() << " vertices\n";
      return ok ? 0 : 1;
    }

    if (lace->parsed()) {
      HtgParams p = validate_params(m, n, l);
      auto verdict = oracle::is_hamilton_laceable(p, budget, jobs);
      if (lace_format == "json") *sink << oracle::verdict_json(verdict);
      switch (verdict.kind) {
        case oracle::LaceabilityVerdict::Kind::Laceable:
          if (lace_format == "text") *sink << "laceable\n";
          return 0;
        case oracle::LaceabilityVerdict::Kind::Counterexample: {
          auto [s, t] = *verdict.counterexample;
          if (lace_format == "text") {
            *sink << "counterexample " << s.i << ',' << s.j << " " << t.i
                  << ',' << t.j << '\n';
          }
          return 1;
        }
        case oracle::LaceabilityVerdict::Kind::Inconclusive:
          if (lace_format == "text") *sink << "inconclusive\n";
          return 3;
      }
    }

    if (props->parsed()) {
      auto checks = split_csv(check_list);
      check_properties(checks);
      AuditRun spec;
      spec.triples = {validate_params(m, n, l)};
      spec.checks = checks;
      spec.budget = budget;
      spec.json = report_format == "json";
      return run_audit(spec, *sink);
    }

    if (audit_cmd->parsed() || sweep_cmd->parsed()) {
      auto checks = split_csv(check_list);
      check_properties(checks);
      AuditRun spec;
      spec.checks = checks;
      spec.budget = budget;
      spec.jobs = jobs;
      spec.json = report_format == "json";
      if (!sweep_text.empty()) {
        spec.triples = expand_sweep(parse_sweep(sweep_text), err);
      } else if (audit_cmd->parsed() && audit_cmd->count("-m")) {
        spec.triples = {validate_params(m, n, l)};
      } else {
        err << "error: need -m/-n/-l or --sweep\n";
        return 2;
      }
      return run_audit(spec, *sink);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const HtgError& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace htg::cli
