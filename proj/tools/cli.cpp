#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "quadff/classify.hpp"
#include "quadff/error.hpp"
#include "quadff/record_io.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

namespace quadff::cli {

namespace {

struct FieldArgs {
  std::optional<int> q;
  std::optional<int> p;
  std::optional<int> n;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  auto* q = cmd->add_option("--q", f.q, "field order (2,3,4,5,7,8,9)");
  auto* p = cmd->add_option("--p", f.p, "field characteristic");
  auto* n = cmd->add_option("--n", f.n, "field degree over F_p")->needs(p);
  q->excludes(p)->excludes(n);
}

FieldPtr field_from(const FieldArgs& f) {
  if (f.q) return Field::of_order(*f.q);
  if (f.p) return Field::make(*f.p, f.n.value_or(1));
  throw Error(Errc::invalid_argument, "a field is required (--q, or --p with optional --n)");
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                         {"jsonl", Format::jsonl}}));
}

std::string field_echo(const FieldArgs& f) {
  if (f.q) return "q=" + std::to_string(*f.q);
  if (f.p) return "p=" + std::to_string(*f.p) + " n=" + std::to_string(f.n.value_or(1));
  return "no field";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions, class numbers and the exponent-two classification of quadratic function fields",
               "quadff"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(QUADFF_VERSION));

  FieldArgs field;
  std::string curve_text;
  Format format = Format::text;
  int g = 0;
  std::int64_t h = 0;
  unsigned jobs = 0;
  bool no_cache = false;
  bool strict_gamma = false;

  auto* zeta = app.add_subcommand("zeta", "L-polynomial, place counts and class number of one curve");
  add_field_options(zeta, field);
  zeta->add_option("curve", curve_text, "curve equation")->required();
  add_format_option(zeta, format);

  auto* classify = app.add_subcommand("classify", "exponent-two test for one curve");
  add_field_options(classify, field);
  classify->add_option("curve", curve_text, "curve equation")->required();
  add_format_option(classify, format);

  auto* search_cmd = app.add_subcommand("search", "isomorphism classes with class number h and genus g");
  search_cmd->set_help_flag("--help", "Print this help message and exit");
  add_field_options(search_cmd, field);
  search_cmd->add_option("--g", g, "genus")->required();
  search_cmd->add_option("--h", h, "class number")->required();

  auto* tables = app.add_subcommand("tables", "the complete classification");
  auto* selftest_cmd = app.add_subcommand("selftest", "replay the published curves and invariant suites");

  for (auto* cmd : {search_cmd, tables}) {
    add_format_option(cmd, format);
    cmd->add_flag("--no-cache", no_cache, "recompute instead of reading the cache");
    cmd->add_flag("--strict-gamma", strict_gamma, "also enumerate higher odd pole orders (q even)");
  }
  for (auto* cmd : {search_cmd, tables, selftest_cmd}) {
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  SearchOptions options;
  options.jobs = jobs;
  options.strict_gamma = strict_gamma;
  if (!no_cache) options.cache_dir = default_cache_dir();

  std::string echo;
  try {
    std::string report;
    if (zeta->parsed()) {
      echo = field_echo(field) + " \"" + curve_text + "\"";
      const ZetaReport r = l_polynomial(parse_curve(curve_text, field_from(field)));
      report = format == Format::jsonl ? zeta_jsonl(r) + "\n" : zeta_text(r);
    } else if (classify->parsed()) {
      echo = field_echo(field) + " \"" + curve_text + "\"";
      const ClassificationRecord r = is_exponent_two(parse_curve(curve_text, field_from(field)));
      report = format == Format::jsonl ? record_jsonl(r) + "\n" : record_text(r);
    } else if (search_cmd->parsed()) {
      echo = field_echo(field) + " g=" + std::to_string(g) + " h=" + std::to_string(h);
      const int q = static_cast<int>(field_from(field)->order());
      report = search_output(search(q, g, h, options), format);
    } else if (tables->parsed()) {
      echo = "tables";
      report = table_output(full_classification(options), format);
    } else {
      return selftest(jobs, out);
    }
    out << report;
    return 0;
  } catch (const Error& e) {
    err << "quadff: " << e.what() << " [input: " << echo << "]\n";
    return 1;
  }
}

}  // namespace quadff::cli
