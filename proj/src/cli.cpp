#include "halin/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "halin/embedding.hpp"
#include "halin/genfun.hpp"
#include "halin/overlap.hpp"
#include "halin/params.hpp"
#include "halin/recurrence.hpp"

namespace halin {

namespace {

struct CommonOpts {
  std::string m_text;
  int threads = 1;
  std::optional<int> budget_bits;
  std::vector<int> trunc;
};

GenusPoly run_engine(const std::string& engine, const ParamTuple& params,
                     const CommonOpts& opts) {
  if (engine == "recurrence") return euler_genus_poly(params);
  if (engine == "matrix") {
    EnumerateOptions eo;
    eo.budget_bits = opts.budget_bits.value_or(eo.budget_bits);
    eo.threads = opts.threads;
    return matrix_engine_distribution(params, eo);
  }
  if (engine == "embedding") {
    EmbedOptions eo;
    eo.budget_bits = opts.budget_bits.value_or(eo.budget_bits);
    eo.threads = opts.threads;
    return embedding_distribution(params, eo);
  }
  if (engine == "genfun") return extract_E(params, opts.trunc);
  throw std::invalid_argument("unknown engine '" + engine + "'");
}

void print_poly(const GenusPoly& poly, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : poly.to_decimal_strings()) arr.push_back(c);
    out << arr.dump() << "\n";
  } else if (format == "csv") {
    const auto strings = poly.to_decimal_strings();
    for (std::size_t g = 0; g < strings.size(); ++g) out << g << "," << strings[g] << "\n";
  } else {
    out << poly.to_text() << "\n";
  }
}

// Cache: one JSON file per canonical tuple, polynomials keyed by engine.
// Distributions are isomorphism invariants, so isomorphic tuples share an
// entry; entries are exact and immutable.
std::filesystem::path cache_file(const std::string& dir, const ParamTuple& canon) {
  std::string name = canon.to_string();
  for (auto& ch : name)
    if (ch == ',') ch = '-';
  return std::filesystem::path(dir) / (name + ".json");
}

std::optional<GenusPoly> cache_lookup(const std::string& dir, const ParamTuple& canon,
                                      const std::string& engine) {
  std::ifstream in(cache_file(dir, canon));
  if (!in) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.contains("engines") || !doc["engines"].contains(engine)) return std::nullopt;
    return GenusPoly::from_decimal_strings(
        doc["engines"][engine].get<std::vector<std::string>>());
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void cache_store(const std::string& dir, const ParamTuple& canon, const std::string& engine,
                 const GenusPoly& poly) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::json doc;
  {
    std::ifstream in(cache_file(dir, canon));
    if (in) {
      try {
        doc = nlohmann::json::parse(in);
      } catch (const std::exception&) {
        doc = nlohmann::json();
      }
    }
  }
  doc["tuple"] = canon.to_string();
  doc["engines"][engine] = poly.to_decimal_strings();
  std::ofstream out(cache_file(dir, canon), std::ios::trunc);
  out << doc.dump(2) << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Euler-genus distributions of cubic caterpillar-Halin graphs"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string format = "text";
  std::string engine = "recurrence";
  std::string engines_text = "recurrence,matrix,embedding";
  std::string cache_dir;
  std::string which = "E1";
  std::string trunc_text;
  int genus = 0;
  bool dump_graph = false;

  const auto engine_names = std::vector<std::string>{"recurrence", "matrix", "embedding", "genfun"};

  auto add_common = [&](CLI::App* cmd, bool with_budget) {
    cmd->add_option("--m", opts.m_text, "parameter tuple, e.g. 2,2,4")->required();
    if (with_budget) {
      cmd->add_option("--threads", opts.threads, "worker count (results are identical for any value)")
          ->check(CLI::Range(1, 256));
      cmd->add_option("--budget-bits", opts.budget_bits,
                      "enumeration budget: assignment bits (matrix, default 26) or "
                      "|V|+beta (embedding, default 24)");
      cmd->add_option("--trunc", trunc_text,
                      "genfun truncation override: comma list, one window per variable");
    }
  };

  CLI::App* dist = app.add_subcommand("dist", "compute a genus distribution");
  add_common(dist, true);
  dist->add_option("--engine", engine, "recurrence|matrix|embedding|genfun")
      ->check(CLI::IsMember(engine_names));
  dist->add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  dist->add_option("--cache-dir", cache_dir, "result cache directory")->envname("HGD_CACHE_DIR");
  dist->add_flag("--dump-graph", dump_graph,
                 "print the constructed graph as JSON instead of a distribution");

  CLI::App* crosscheck = app.add_subcommand("crosscheck", "compare engines coefficient-for-coefficient");
  add_common(crosscheck, true);
  crosscheck->add_option("--engines", engines_text, "comma list of engines to compare");

  CLI::App* closed = app.add_subcommand("closed", "evaluate a low-genus closed form");
  add_common(closed, false);
  closed->add_option("--genus", genus, "0, 1 or 2")->required()->check(CLI::Range(0, 2));

  CLI::App* canon = app.add_subcommand("canon", "canonicalize a parameter tuple");
  add_common(canon, false);

  CLI::App* series = app.add_subcommand("series", "dump generating-function coefficients (JSON)");
  add_common(series, true);
  series->add_option("--which", which, "lambda1|lambda2|E1|E2")
      ->check(CLI::IsMember({"lambda1", "lambda2", "E1", "E2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the error message
    return rc == 0 ? 0 : 2;
  }

  try {
    const ParamTuple params = ParamTuple::parse(opts.m_text);
    if (!trunc_text.empty()) {
      const ParamTuple t = ParamTuple::parse(trunc_text);
      opts.trunc = t.m;
    }

    if (dist->parsed()) {
      params.require_valid();
      if (dump_graph) {
        std::cout << graph_json(build_halin(params)) << "\n";
        return 0;
      }
      GenusPoly poly;
      bool have = false;
      const ParamTuple canon_tuple = canonicalize(params);
      if (!cache_dir.empty()) {
        if (auto hit = cache_lookup(cache_dir, canon_tuple, engine)) {
          poly = *hit;
          have = true;
        }
      }
      if (!have) {
        poly = run_engine(engine, params, opts);
        if (!cache_dir.empty()) cache_store(cache_dir, canon_tuple, engine, poly);
      }
      print_poly(poly, format, std::cout);
      return 0;
    }

    if (crosscheck->parsed()) {
      params.require_valid();
      const std::vector<std::string> names = split_list(engines_text);
      if (names.size() < 2)
        throw std::invalid_argument("crosscheck needs at least two engines");
      std::vector<GenusPoly> polys;
      for (const auto& name : names) {
        polys.push_back(run_engine(name, params, opts));
        std::cout << name << ": " << polys.back().to_text() << "\n";
      }
      for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i] == polys[0]) continue;
        const int top = std::max(polys[i].degree(), polys[0].degree());
        for (int g = 0; g <= top; ++g) {
          if (polys[0].at(g) != polys[i].at(g)) {
            std::cout << "MISMATCH at genus " << g << ": " << names[0] << "="
                      << polys[0].at(g).str() << " " << names[i] << "=" << polys[i].at(g).str()
                      << "\n";
            return 1;
          }
        }
      }
      std::cout << "MATCH\n";
      return 0;
    }

    if (closed->parsed()) {
      std::cout << closed_form_eps(params, genus).str() << "\n";
      return 0;
    }

    if (canon->parsed()) {
      std::cout << canonicalize(params).to_string() << "\n";
      return 0;
    }

    if (series->parsed()) {
      const SeriesBundle bundle = bundle_for(params, opts.trunc);
      const LaurentSeries& s = which == "lambda1"   ? bundle.lam1
                               : which == "lambda2" ? bundle.lam2
                               : which == "E2"      ? bundle.E2
                                                    : bundle.E1;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [key, zrow] : s.terms()) {
        for (std::size_t z = 0; z < zrow.size(); ++z) {
          if (zrow[z] == 0) continue;
          nlohmann::json row;
          row["t"] = std::vector<int>(key.begin(), key.end());
          row["z"] = static_cast<int>(z);
          row["c"] = zrow[z].str();
          arr.push_back(row);
        }
      }
      std::cout << arr.dump() << "\n";
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace halin
