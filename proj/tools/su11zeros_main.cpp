#include <charconv>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "su11/errors.hpp"
#include "su11/runner.hpp"

namespace {

using su11::ConfigError;
using su11::RunConfig;

std::string trim(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const std::size_t last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("key '" + key + "': bad value '" + value + "'");
  return out;
}

std::complex<double> parse_point(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    return {parse_number<double>("at", trim(text)), 0.0};
  return {parse_number<double>("at", trim(text.substr(0, comma))),
          parse_number<double>("at", trim(text.substr(comma + 1)))};
}

// Settings file: one `key = value` pair per line, `#` starts a comment,
// blank lines ignored.  Keys are the long option names without the dashes.
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    pairs.emplace_back(key, value);
  }
  return pairs;
}

struct Binding {
  CLI::Option* option = nullptr;
  std::function<void(const std::string&)> apply;
};
using BindingMap = std::map<std::string, Binding>;

class CommandSetup {
 public:
  CommandSetup(CLI::App* cmd, RunConfig& rc, BindingMap& bindings)
      : cmd_(cmd), rc_(rc), bindings_(bindings) {}

  template <typename T>
  void number(const std::string& name, T& target, const std::string& desc) {
    CLI::Option* opt = cmd_->add_option("--" + name, target, desc);
    bindings_[name] = {opt, [&target, name](const std::string& v) {
                         target = parse_number<T>(name, v);
                       }};
  }

  void text(const std::string& name, std::string& target,
            const std::string& desc) {
    CLI::Option* opt = cmd_->add_option("--" + name, target, desc);
    bindings_[name] = {opt,
                       [&target](const std::string& v) { target = v; }};
  }

  void seed() {
    number("seed", rc_.seed, "base RNG seed (also env SU11_SEED)");
  }
  void threads() { number("threads", rc_.threads, "worker threads, 0 = auto"); }
  void trials() { number("trials", rc_.trials, "number of trials"); }
  void weight() { number("l", rc_.l, "ensemble weight parameter, l >= 1"); }
  void degree() { number("n", rc_.n, "polynomial degree"); }
  void output(bool required) {
    text("output", rc_.output, "destination CSV path");
    if (required) bindings_["output"].option->required();
  }
  void format() {
    CLI::Option* opt =
        cmd_->add_option("--format", rc_.format,
                         "csv, or svg to also write a plot")
            ->check(CLI::IsMember({"csv", "svg"}));
    bindings_["format"] = {opt, [this](const std::string& v) {
                             rc_.format = v;
                           }};
  }

 private:
  CLI::App* cmd_;
  RunConfig& rc_;
  BindingMap& bindings_;
};

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  std::string config_path;
  std::vector<std::string> at_text;

  CLI::App app{"zero statistics of Gaussian random polynomials whose "
               "coefficient weights are hyperbolic-invariant on the unit "
               "disk"};
  app.require_subcommand(1);
  std::map<const CLI::App*, BindingMap> all_bindings;

  const auto make = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--config", config_path,
                    "key=value settings file (flags win)");
    return CommandSetup(cmd, rc, all_bindings[cmd]);
  };

  {
    CommandSetup c = make("simulate-density",
                          "histogram of the boundary-scaled zero density");
    c.weight();
    c.degree();
    c.trials();
    c.seed();
    c.threads();
    c.number("s-lo", rc.s_lo, "lower edge of the s histogram");
    c.number("s-hi", rc.s_hi, "upper edge of the s histogram");
    c.number("bins", rc.bins, "histogram bin count");
    c.output(true);
    c.format();
    c.text("dump-zeros", rc.dump_zeros, "also write every zero to this CSV");
  }
  {
    CommandSetup c = make("simulate-distribution",
                          "empirical distribution of the scaled coordinate");
    c.weight();
    c.degree();
    c.trials();
    c.seed();
    c.threads();
    c.number("s-lo", rc.s_lo, "lowest grid point");
    c.number("s-hi", rc.s_hi, "highest grid point");
    c.number("points", rc.points, "grid size");
    c.output(true);
    c.format();
  }
  {
    CommandSetup c = make("simulate-correlation",
                          "two-point correlation of zeros in a subdisk");
    c.weight();
    c.trials();
    c.seed();
    c.threads();
    c.number("r-max", rc.r_max, "zeros kept up to this radius");
    c.number("bins", rc.bins, "tau bin count");
    c.number("quadrature-points", rc.quadrature_points,
             "Halton points for the pair baseline");
    c.number("tail-eps", rc.tail_eps, "series truncation budget");
    c.output(true);
    c.format();
  }
  {
    CommandSetup c = make("simulate-outer",
                          "correlation of outer zeros mapped by w = 1/z, "
                          "plus inner/outer independence");
    c.weight();
    c.degree();
    c.trials();
    c.seed();
    c.threads();
    c.number("w-max", rc.w_max,
             "mapped radius; outer means |z| >= 1/w-max");
    c.number("bins", rc.bins, "tau bin count");
    c.number("quadrature-points", rc.quadrature_points,
             "Halton points for the pair baseline");
    c.output(true);
    c.format();
  }
  {
    CommandSetup c = make("theory-table", "closed-form curves as CSV");
    c.text("kind", rc.kind, "density, correlation, or finite-n");
    c.weight();
    c.degree();
    c.number("s-lo", rc.s_lo, "lowest grid point");
    c.number("s-hi", rc.s_hi, "highest grid point");
    c.number("points", rc.points, "grid size");
    c.number("r-max", rc.r_max, "largest r for correlation tables");
    c.output(true);
    c.format();
  }
  {
    CommandSetup c = make("kacrice-eval",
                          "n-point zero correlation through both the "
                          "permanent and the Grassmann route");
    c.weight();
    CLI::Option* at = app.get_subcommand("kacrice-eval")
                          ->add_option("--at", at_text,
                                       "evaluation point 're,im'; repeat for "
                                       "multi-point correlations");
    all_bindings[app.get_subcommand("kacrice-eval")]["at"] = {
        at, [&at_text](const std::string& v) {
          std::size_t start = 0;
          for (;;) {
            const std::size_t semi = v.find(';', start);
            at_text.push_back(v.substr(start, semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
          }
        }};
    c.output(false);
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "compare", "column-wise comparison of two CSV files");
    cmd->add_option("left", rc.compare_a, "first CSV")->required();
    cmd->add_option("right", rc.compare_b, "second CSV")->required();
    cmd->add_option("--tol", rc.tolerance, "largest accepted |difference|");
    all_bindings[cmd] = {};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    rc.command = active->get_name();
    BindingMap& bindings = all_bindings[active];

    bool config_sets_seed = false;
    if (!config_path.empty()) {
      for (const auto& [key, value] : parse_config_file(config_path)) {
        const auto it = bindings.find(key);
        if (it == bindings.end())
          throw ConfigError("unknown config key '" + key + "' for " +
                            rc.command);
        if (it->second.option->count() == 0) {
          it->second.apply(value);
          if (key == "seed") config_sets_seed = true;
        }
      }
    }
    const auto seed_binding = bindings.find("seed");
    if (seed_binding != bindings.end() &&
        seed_binding->second.option->count() == 0 && !config_sets_seed) {
      if (const char* env = std::getenv("SU11_SEED"))
        rc.seed = parse_number<std::uint64_t>("SU11_SEED", env);
    }
    for (const std::string& text : at_text) rc.at.push_back(parse_point(text));

    return su11::run(rc, std::cout);
  } catch (const su11::Error& e) {
    std::cerr << "error [" << e.kind() << "] " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
