#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldilocks/chambers.hpp"
#include "goldilocks/classify.hpp"
#include "goldilocks/selftest.hpp"

using nlohmann::json;
using namespace goldilocks;

namespace {

struct cli_state {
  int workers = 1;
  int max_n_direct = 7;
  int max_n_sd = 7;
  std::string format = "text";
  std::string config_path;

  enumeration_budget budget() const {
    enumeration_budget b;
    b.max_n_direct = max_n_direct;
    b.max_n_sd = max_n_sd;
    b.workers = workers;
    return b;
  }
};

void apply_config_file(cli_state& state) {
  if (state.config_path.empty()) return;
  std::ifstream in(state.config_path);
  if (!in) throw parse_error("cannot open config file " + state.config_path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw parse_error("config line " + std::to_string(lineno) + " is not key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "workers") {
      state.workers = std::stoi(value);
    } else if (key == "max_n_direct") {
      state.max_n_direct = std::stoi(value);
    } else if (key == "max_n_sd") {
      state.max_n_sd = std::stoi(value);
    } else if (key == "format") {
      state.format = value;
    } else {
      throw parse_error("unknown config key: " + key);
    }
  }
  if (state.workers < 1) throw parse_error("workers must be >= 1");
  if (state.max_n_direct > arity_max || state.max_n_sd > arity_max) {
    throw parse_error("arity caps cannot exceed " + std::to_string(arity_max));
  }
}

genus_class parse_genus(const std::string& text) {
  if (text == "0" || text == "zero") return genus_class::zero;
  if (text == "positive" || text == "g+") return genus_class::positive;
  throw parse_error("genus must be 0 or positive, got " + text);
}

engine_kind parse_engine(const std::string& text) {
  if (text == "direct") return engine_kind::direct;
  if (text == "sd") return engine_kind::sd;
  if (text == "both") return engine_kind::both;
  throw parse_error("engine must be direct, sd or both");
}

std::string genus_name(genus_class g) {
  return g == genus_class::zero ? "0" : "positive";
}

weight_vector parse_weights(const std::string& text, genus_class genus) {
  weight_vector wv;
  wv.genus = genus;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw parse_error("empty weight entry");
    wv.w.push_back(rational_from_string(item));
  }
  if (wv.w.empty()) throw parse_error("no weights given");
  return wv;
}

json realization_to_json(const realization& r) {
  json out;
  out["w"] = json::array();
  for (const mpq_class& wi : r.w()) out["w"].push_back(rational_to_string(wi));
  out["theta"] = rational_to_string(r.theta());
  out["positive"] = r.positive();
  out["small"] = r.small();
  out["ample"] = r.ample();
  return out;
}

json certificate_to_json(const certificate& cert) {
  json out;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, not_separable_certificate>) {
          out["kind"] = "not_separable";
          out["c"] = json::array();
          for (const mpz_class& v : c.witness.c) out["c"].push_back(v.get_str());
        } else if constexpr (std::is_same_v<T, not_positive_certificate>) {
          out["kind"] = "not_positive";
          out["x_code"] = c.x_code;
          out["y_code"] = c.y_code;
        } else if constexpr (std::is_same_v<T, not_small_certificate>) {
          out["kind"] = "not_small";
          out["index"] = c.index;
        } else {
          out["kind"] = "not_ample";
          out["x_code"] = c.x_code;
        }
      },
      cert);
  return out;
}

json report_to_json(const boolean_function& f, const class_report& report) {
  json out;
  out["truth_table"] = f.to_binary();
  out["arity"] = f.arity();
  out["is_ltf"] = report.is_ltf;
  out["positive"] = report.positive;
  out["small"] = report.small;
  out["ample"] = report.ample;
  out["semi_goldilocks"] = report.semi_goldilocks;
  out["goldilocks"] = report.goldilocks;
  out["degree"] = report.degree;
  out["chow"] = report.chow.to_string();
  out["realization"] =
      report.witness_realization ? realization_to_json(*report.witness_realization) : json();
  out["certificate"] =
      report.failure_certificate ? certificate_to_json(*report.failure_certificate) : json();
  return out;
}

std::vector<count_row> table_rows(int max_n, const std::string& genus_text,
                                  engine_kind engine, const cli_state& state) {
  std::vector<count_row> rows;
  const bool both = genus_text == "both";
  if (both || genus_text == "positive") {
    for (int n = 1; n <= max_n; ++n) {
      rows.push_back(count_chambers(n, genus_class::positive, engine, state.budget()));
    }
  }
  if (both || genus_text == "0" || genus_text == "zero") {
    for (int n = 3; n <= max_n; ++n) {
      rows.push_back(count_chambers(n, genus_class::zero, engine, state.budget()));
    }
  }
  return rows;
}

void print_table(const std::vector<count_row>& rows, const std::string& format,
                 std::ostream& os) {
  if (format == "csv") {
    os << "n,genus,count,count_mod_sn\n";
    for (const count_row& r : rows) {
      os << r.n << "," << genus_name(r.genus) << "," << r.count << "," << r.orbit_count
         << "\n";
    }
  } else if (format == "json") {
    json out = json::array();
    for (const count_row& r : rows) {
      out.push_back({{"n", r.n},
                     {"genus", genus_name(r.genus)},
                     {"count", r.count},
                     {"count_mod_sn", r.orbit_count}});
    }
    os << out.dump() << "\n";
  } else { // md (also the text default)
    genus_class current = genus_class::positive;
    bool open = false;
    for (const count_row& r : rows) {
      if (!open || r.genus != current) {
        if (open) os << "\n";
        current = r.genus;
        open = true;
        os << "| n | count (genus " << genus_name(r.genus) << ") | count/S_n |\n";
        os << "|---|---|---|\n";
      }
      os << "| " << r.n << " | " << r.count << " | " << r.orbit_count << " |\n";
    }
  }
}

int run(int argc, char** argv) {
  cli_state state;
  if (const char* env = std::getenv("GOLDILOCKS_WORKERS")) {
    state.workers = std::max(1, std::atoi(env));
  }

  CLI::App app{"Chamber counting for the domain of admissible weights via threshold functions"};
  app.require_subcommand(1);
  app.fallthrough(); // global options may appear after the subcommand
  app.add_option("--workers", state.workers, "worker threads");
  app.add_option("--format", state.format, "output format: text|json (table: md|csv|json)");
  app.add_option("--config", state.config_path, "key=value config file");

  // count
  int count_n = 0;
  std::string count_genus, count_engine = "both";
  bool count_orbits = false;
  CLI::App* count_cmd = app.add_subcommand("count", "count chambers for one (n, genus)");
  count_cmd->add_option("--n", count_n, "number of marked points")->required();
  count_cmd->add_option("--genus", count_genus, "0 or positive")->required();
  count_cmd->add_option("--engine", count_engine, "direct|sd|both");
  count_cmd->add_flag("--orbits", count_orbits, "also print the count up to S_n");

  // classify
  std::string classify_table;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify a truth table against the chamber criteria");
  classify_cmd->add_option("--truth-table", classify_table, "binary or 0x-hex table")
      ->required();

  // realize
  std::string realize_table;
  bool want_positive = false, want_small = false, want_ample = false;
  CLI::App* realize_cmd =
      app.add_subcommand("realize", "find an exact rational realization");
  realize_cmd->add_option("--truth-table", realize_table, "binary or 0x-hex table")
      ->required();
  realize_cmd->add_flag("--positive", want_positive, "require all weights positive");
  realize_cmd->add_flag("--small", want_small, "require all weights <= theta");
  realize_cmd->add_flag("--ample", want_ample, "require total weight > 2 theta");

  // chamber
  std::string chamber_weights, chamber_genus = "positive";
  CLI::App* chamber_cmd =
      app.add_subcommand("chamber", "map an admissible weight vector to its chamber");
  chamber_cmd->add_option("--weights", chamber_weights, "comma-separated rationals")
      ->required();
  chamber_cmd->add_option("--genus", chamber_genus, "0 or positive");

  // table
  int table_max_n = 5;
  std::string table_genus = "both", table_engine = "both";
  CLI::App* table_cmd = app.add_subcommand("table", "print chamber counts for n = 1..max-n");
  table_cmd->add_option("--max-n", table_max_n, "largest n")->required();
  table_cmd->add_option("--genus", table_genus, "0, positive or both");
  table_cmd->add_option("--engine", table_engine, "direct|sd|both");

  // identity-check
  int identity_n = 3;
  CLI::App* identity_cmd =
      app.add_subcommand("identity-check", "verify the separable-function count identity");
  identity_cmd->add_option("--n", identity_n, "number of variables (<= 4)")->required();

  // asymptotics
  int asym_n = 4;
  CLI::App* asym_cmd =
      app.add_subcommand("asymptotics", "binomial-sum estimate and exact ratios");
  asym_cmd->add_option("--n", asym_n, "number of marked points")->required();

  // selftest
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the exhaustive n <= 4 oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // help output
    throw parse_error(e.what());
  }
  apply_config_file(state);
  if (state.workers < 1) throw parse_error("workers must be >= 1");

  std::ostream& os = std::cout;
  if (count_cmd->parsed()) {
    const count_row row = count_chambers(count_n, parse_genus(count_genus),
                                         parse_engine(count_engine), state.budget());
    if (state.format == "json") {
      json out{{"n", row.n},
               {"genus", genus_name(row.genus)},
               {"engine", count_engine},
               {"count", row.count},
               {"count_mod_sn", row.orbit_count}};
      os << out.dump() << "\n";
    } else if (count_orbits) {
      os << row.count << " " << row.orbit_count << "\n";
    } else {
      os << row.count << "\n";
    }
  } else if (classify_cmd->parsed()) {
    const boolean_function f = boolean_function::parse(classify_table);
    os << report_to_json(f, classify(f)).dump() << "\n";
  } else if (realize_cmd->parsed()) {
    const boolean_function f = boolean_function::parse(realize_table);
    constraint_set cs;
    cs.positive = want_positive;
    cs.small = want_small;
    cs.ample = want_ample;
    const realization_result res = find_realization(f, cs);
    json out;
    out["feasible"] = res.value.has_value();
    if (res.value) {
      out.update(realization_to_json(*res.value));
    } else if (res.witness) {
      json c = json::array();
      for (const mpz_class& v : res.witness->c) c.push_back(v.get_str());
      out["witness"] = {{"kind", "not_separable"}, {"c", c}};
    }
    os << out.dump() << "\n";
  } else if (chamber_cmd->parsed()) {
    const genus_class genus = parse_genus(chamber_genus);
    const weight_vector wv = parse_weights(chamber_weights, genus);
    const boolean_function f = phi_map(wv);
    json out = report_to_json(f, classify(f));
    out["on_wall"] = on_wall(wv);
    out["genus"] = genus_name(genus);
    os << out.dump() << "\n";
  } else if (table_cmd->parsed()) {
    const std::vector<count_row> rows =
        table_rows(table_max_n, table_genus, parse_engine(table_engine), state);
    const std::string fmt = state.format == "text" ? "md" : state.format;
    print_table(rows, fmt, os);
  } else if (identity_cmd->parsed()) {
    const identity_report report = ltf_identity_check(identity_n, state.budget());
    if (state.format == "json") {
      json out{{"n", identity_n},
               {"lhs", report.lhs.get_str()},
               {"rhs", report.rhs.get_str()},
               {"ok", report.ok}};
      os << out.dump() << "\n";
    } else {
      os << "LTF(" << identity_n << ") = " << report.lhs.get_str()
         << ", binomial sum = " << report.rhs.get_str() << ", "
         << (report.ok ? "ok" : "MISMATCH") << "\n";
    }
    if (!report.ok) return 2;
  } else if (asym_cmd->parsed()) {
    const asymptotics_report report = ratio_report(asym_n, state.budget());
    if (state.format == "json") {
      json out{{"n", report.n},
               {"estimate", report.estimate.get_str()},
               {"genus_ratio", rational_to_string(report.genus_ratio)},
               {"estimate_ratio", rational_to_string(report.estimate_ratio)}};
      os << out.dump() << "\n";
    } else {
      os << "estimate(" << report.n << ") = " << report.estimate.get_str() << "\n"
         << "genus ratio = " << rational_to_string(report.genus_ratio) << "\n"
         << "estimate ratio = " << rational_to_string(report.estimate_ratio) << "\n";
    }
  } else if (selftest_cmd->parsed()) {
    const selftest_report report = run_selftest(state.workers);
    if (state.format == "json") {
      json out{{"checks", report.checks}, {"failures", report.failures}};
      os << out.dump() << "\n";
    } else {
      for (const std::string& failure : report.failures) {
        os << "FAIL " << failure << "\n";
      }
      os << report.checks << " checks, " << report.failures.size() << " failures\n";
    }
    if (!report.ok()) return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::string format = "text";
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--format" && i + 1 < argc) format = argv[i + 1];
  }
  auto emit_error = [&](const std::string& message, int code) {
    if (format == "json") {
      std::cerr << json{{"error", message}, {"exit", code}}.dump() << "\n";
    } else {
      std::cerr << "error: " << message << "\n";
    }
    return code;
  };
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    return emit_error(e.what(), 3);
  } catch (const engine_mismatch_error& e) {
    return emit_error(e.what(), 2);
  } catch (const error& e) {
    return emit_error(e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error(e.what(), 2);
  }
}
