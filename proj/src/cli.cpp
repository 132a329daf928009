#include "polygeo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polygeo/cfrac.hpp"
#include "polygeo/flow.hpp"
#include "polygeo/rotation.hpp"
#include "polygeo/surface.hpp"
#include "polygeo/svg.hpp"
#include "polygeo/uniformity.hpp"

namespace polygeo::cli {

using Json = nlohmann::ordered_json;

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace {

// Everything a command may read; each subcommand binds the subset it needs.
struct RunConfig {
  std::string command;
  std::string alpha = "phi";
  std::string surface = "L3";
  std::int64_t n = 100000;
  std::int64_t digits = 20;
  std::string number;  // ostrowski N, kept as text for big values
  std::string interval;
  std::string scale;   // C
  std::string eps = "0.1";
  std::string y0 = "1/2";
  std::string length = "1/q";
  std::string sweep;
  std::int64_t h = 10;
  std::int64_t samples = 1000;
  int mmax = 32;
  int start_square = 0;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  std::string format;
};

std::string json_number(const Integer& v) { return v.str(); }

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const Integer& x : v) {
    if (x <= INT64_MAX && x >= INT64_MIN) a.push_back(x.convert_to<std::int64_t>());
    else a.push_back(json_number(x));
  }
  return a;
}

Json exact(const Quad& q) { return {{"exact", q.to_string()}, {"decimal", q.to_decimal(40)}}; }

Json bracket_json(const uniformity::ThresholdBracket& b) {
  Json probes = Json::array();
  for (const auto& p : b.probes) probes.push_back({{"C", to_string(p.scale)}, {"passed", p.passed}});
  return {{"lower", to_string(b.lower)},
          {"upper", to_string(b.upper)},
          {"lower_decimal", b.lower.convert_to<double>()},
          {"upper_decimal", b.upper.convert_to<double>()},
          {"probes", probes}};
}

std::pair<Quad, Quad> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::BadArgs, "expected lo,hi, got '" + text + "'");
  return {parse_quadratic(text.substr(0, comma)), parse_quadratic(text.substr(comma + 1))};
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& fallback) : stream_(&fallback) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out);
      if (!file_) throw Error(ErrorCode::MalformedFile, "cannot write " + cfg.out);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "csv" && f != "json" && f != "svg") throw Error(ErrorCode::BadArgs, "unknown format '" + f + "'");
  return f;
}

flow::Start start_of(const RunConfig& cfg) { return {cfg.start_square, parse_rational(cfg.y0)}; }

int cmd_cf(const RunConfig& cfg, std::ostream& out) {
  if (cfg.digits < 1) throw Error(ErrorCode::BadArgs, "--digits must be >= 1");
  const Quad alpha = parse_quadratic(cfg.alpha);
  const cfrac::ContinuedFraction cf = cfrac::expand(alpha);
  const auto count = static_cast<std::size_t>(cfg.digits);
  std::vector<Integer> p, q;
  for (const auto& c : cfrac::convergents(cf, count)) {
    p.push_back(c.p);
    q.push_back(c.q);
  }
  Json j{{"alpha", alpha.to_string()},      {"digits", integers(cf.digits(count))}, {"q", integers(q)},
         {"p", integers(p)},                {"preperiod", integers(cf.preperiod)},  {"period", integers(cf.period)},
         {"digit_bound", integers({cf.digit_bound})[0]}};
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_ostrowski(const RunConfig& cfg, std::ostream& out) {
  const Quad alpha = parse_quadratic(cfg.alpha);
  const cfrac::ContinuedFraction cf = cfrac::expand(alpha);
  const Rational value = parse_rational(cfg.number);
  if (boost::multiprecision::denominator(value) != 1) throw Error(ErrorCode::BadArgs, "--n must be an integer");
  const Integer n = boost::multiprecision::numerator(value);
  const cfrac::OstrowskiDigits d = cfrac::ostrowski_decompose(n, cf);
  std::vector<Integer> q;
  for (const auto& c : cfrac::convergents(cf, d.digits.size())) q.push_back(c.q);
  Json j{{"alpha", alpha.to_string()},
         {"n", integers({n})[0]},
         {"digits", integers(d.digits)},
         {"q", integers(q)},
         {"valid", cfrac::ostrowski_validate(d, cf)}};
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_rotate(const RunConfig& cfg, std::ostream& out) {
  const Quad alpha = parse_quadratic(cfg.alpha);
  const rotation::OrbitPrefix o = rotation::orbit(alpha, cfg.n);
  const std::string fmt = format_or(cfg, cfg.interval.empty() ? "csv" : "json");
  if (fmt == "csv") {
    Sink sink(cfg, out);
    *sink << "k,frac_decimal_40\n";
    for (std::size_t k = 0; k < o.points.size(); ++k) *sink << k + 1 << ',' << o.points[k].to_decimal(40) << '\n';
    return 0;
  }
  if (fmt == "svg") {
    std::vector<double> xs;
    for (const Quad& p : o.points) xs.push_back(p.to_double());
    *Sink(cfg, out) << svg::histogram({xs}, {"{k alpha}"}, 50, "rotation orbit, n = " + std::to_string(cfg.n));
    return 0;
  }
  if (cfg.interval.empty()) throw Error(ErrorCode::BadArgs, "json output needs --interval lo,hi");
  auto [lo, hi] = parse_pair(cfg.interval);
  const rotation::UnitInterval iv(lo, hi);
  const std::int64_t v = rotation::visiting_number(o, iv);
  const Quad expected = iv.length() * Quad(cfg.n);
  Json j{{"alpha", alpha.to_string()}, {"n", cfg.n},
         {"interval", {lo.to_string(), hi.to_string()}},
         {"visits", v},
         {"expected", exact(expected)},
         {"deviation", exact(abs(Quad(v) - expected))}};
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_lemma1(const RunConfig& cfg, std::ostream& out) {
  const Quad alpha = parse_quadratic(cfg.alpha);
  const cfrac::ContinuedFraction cf = cfrac::expand(alpha);
  if (cfg.h < 1) throw Error(ErrorCode::BadArgs, "--h must be >= 1");
  const auto h = static_cast<std::size_t>(cfg.h);
  const Integer q = cfrac::convergent(cf, h).q;
  Json j{{"alpha", alpha.to_string()}, {"h", cfg.h}, {"q_h", integers({q})[0]}};
  if (!cfg.interval.empty()) {
    auto [lo, hi] = parse_pair(cfg.interval);
    j["interval"] = {lo.to_string(), hi.to_string()};
    j["count"] = rotation::lemma1_count(alpha, cf, h, lo, hi);
  } else {
    // `c/q` means c / q_h
    Rational length;
    if (cfg.length.ends_with("/q")) length = parse_rational(cfg.length.substr(0, cfg.length.size() - 2)) / Rational(q);
    else length = parse_rational(cfg.length);
    if (length <= 0) throw Error(ErrorCode::BadArgs, "--len must be positive");
    const rotation::Lemma1Sweep s = rotation::lemma1_sweep(alpha, cf, h, length, cfg.samples, cfg.seed);
    j["length"] = to_string(length);
    j["samples"] = s.samples;
    j["seed"] = cfg.seed;
    j["min_count"] = s.min_count;
    j["max_count"] = s.max_count;
    if (length <= Rational(1) / Rational(q)) j["at_most_3"] = s.max_count <= 3;
    if (length >= Rational(3) / Rational(q)) j["at_least_1"] = s.min_count >= 1;
  }
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_threshold_a(const RunConfig& cfg, std::ostream& out) {
  const Quad alpha = parse_quadratic(cfg.alpha);
  const Rational eps = parse_rational(cfg.eps);
  const auto b = rotation::theorem_a_threshold(alpha, cfg.n, eps);
  Json j{{"alpha", alpha.to_string()}, {"n", cfg.n}, {"eps", to_string(eps)}, {"bracket", bracket_json(b)}};
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  const auto surf = surface::resolve(cfg.surface);
  const Quad alpha = parse_quadratic(cfg.alpha);
  const flow::CrossingSet x = flow::trace_crossings(surf, alpha, start_of(cfg), cfg.n);
  const std::string fmt = format_or(cfg, "csv");
  Sink sink(cfg, out);
  if (fmt == "csv") {
    *sink << "k,edge,height_decimal_40\n";
    for (const auto& c : x.crossings) *sink << c.k << ',' << c.edge << ',' << c.height.to_decimal(40) << '\n';
  } else if (fmt == "svg") {
    std::vector<std::vector<double>> per_edge(static_cast<std::size_t>(surf.squares));
    std::vector<std::string> labels;
    for (const auto& c : x.crossings) per_edge[static_cast<std::size_t>(c.edge)].push_back(c.height.to_double());
    for (int e = 0; e < surf.squares; ++e) labels.push_back("edge " + std::to_string(e));
    *sink << svg::histogram(per_edge, labels, 40, "crossing heights, n = " + std::to_string(cfg.n));
  } else {
    Json rows = Json::array();
    for (const auto& c : x.crossings) rows.push_back({{"k", c.k}, {"edge", c.edge}, {"height", c.height.to_decimal(40)}});
    *sink << Json{{"n", cfg.n}, {"alpha", alpha.to_string()}, {"crossings", rows}}.dump() << '\n';
  }
  return 0;
}

int cmd_superdensity(const RunConfig& cfg, std::ostream& out) {
  const auto surf = surface::resolve(cfg.surface);
  const Quad alpha = parse_quadratic(cfg.alpha);
  if (cfg.mmax < 1) throw Error(ErrorCode::BadArgs, "--mmax must be >= 1");
  std::vector<int> ms;
  for (int m = 1; m <= cfg.mmax; m *= 2) ms.push_back(m);
  std::vector<flow::CoverageEstimate> est(ms.size());
  const flow::Start start = start_of(cfg);
  const auto count = static_cast<std::int64_t>(ms.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    est[static_cast<std::size_t>(i)] = flow::coverage_radius_estimate(surf, alpha, start, ms[static_cast<std::size_t>(i)]);
  }
  const std::string fmt = format_or(cfg, "json");
  Sink sink(cfg, out);
  double lo = 1e300, hi = 0;
  for (const auto& e : est) {
    lo = std::min(lo, e.arc_length / e.m);
    hi = std::max(hi, e.arc_length / e.m);
  }
  if (fmt == "csv") {
    *sink << "m,horizontal,arc_length,arc_per_m\n";
    for (const auto& e : est) *sink << e.m << ',' << to_string(e.horizontal) << ',' << e.arc_length << ',' << e.arc_length / e.m << '\n';
  } else if (fmt == "svg") {
    svg::Series s{"T(m)/m", {}, {}};
    for (const auto& e : est) {
      s.x.push_back(e.m);
      s.y.push_back(e.arc_length / e.m);
    }
    *sink << svg::line_plot({s}, "superdensity estimate", "m", "T(m)/m", true);
  } else {
    Json rows = Json::array();
    for (const auto& e : est) {
      rows.push_back({{"m", e.m}, {"horizontal", to_string(e.horizontal)}, {"arc_length", e.arc_length},
                      {"arc_per_m", e.arc_length / e.m}, {"probes", e.probes}});
    }
    *sink << Json{{"alpha", alpha.to_string()}, {"squares", surf.squares}, {"rows", rows},
                  {"c0_estimate", hi}, {"spread", hi / lo}}.dump()
          << '\n';
  }
  return 0;
}

uniformity::EdgeFamily family_for(const RunConfig& cfg) {
  const auto surf = surface::resolve(cfg.surface);
  const Quad alpha = parse_quadratic(cfg.alpha);
  return uniformity::edge_family(flow::trace_crossings(surf, alpha, start_of(cfg), cfg.n));
}

Json report_json(const uniformity::UniformityReport& r, const Rational& eps) {
  return {{"n", r.spec.n},
          {"C", to_string(r.spec.scale)},
          {"length", to_string(r.spec.length())},
          {"squares", r.squares},
          {"min_visit", r.min_visit},
          {"min_witness", {{"edge", r.min_edge}, {"position", r.min_position.to_decimal(40)}, {"just_after", r.min_just_after}}},
          {"max_visit", r.max_visit},
          {"max_witness", {{"edge", r.max_edge}, {"position", r.max_position.to_decimal(40)}}},
          {"expected", to_string(r.expected)},
          {"ratio", to_string(r.ratio())},
          {"sandwich", r.sandwich},
          {"case", uniformity::classify_case(r, eps) == uniformity::Case::A ? "A" : "B"}};
}

int cmd_uniformity(const RunConfig& cfg, std::ostream& out) {
  const Rational eps = parse_rational(cfg.eps);
  const auto family = family_for(cfg);
  const std::string fmt = format_or(cfg, cfg.scale.empty() ? "csv" : "json");
  Sink sink(cfg, out);
  if (fmt == "json") {
    if (cfg.scale.empty()) throw Error(ErrorCode::BadArgs, "json report needs --C");
    *sink << report_json(uniformity::family_extremes(family, parse_rational(cfg.scale)), eps).dump() << '\n';
    return 0;
  }
  std::vector<Rational> scales;
  if (!cfg.sweep.empty()) scales = parse_list(cfg.sweep);
  else for (std::int64_t c = 2; c < cfg.n; c *= 2) scales.emplace_back(c);
  const auto rows = uniformity::scale_sweep(family, scales, eps);
  if (fmt == "csv") {
    *sink << "C,min,max,ratio,case\n";
    for (const auto& r : rows) {
      *sink << to_string(r.scale) << ',' << r.min << ',' << r.max << ',' << r.ratio.convert_to<double>() << ','
            << (r.label == uniformity::Case::A ? "A" : "B") << '\n';
    }
  } else {
    svg::Series ratio{"min/max", {}, {}}, line{"1 - eps", {}, {}};
    for (const auto& r : rows) {
      ratio.x.push_back(r.scale.convert_to<double>());
      ratio.y.push_back(r.ratio.convert_to<double>());
      line.x.push_back(r.scale.convert_to<double>());
      line.y.push_back((1 - eps).convert_to<double>());
    }
    *sink << svg::line_plot({ratio, line}, "visiting-number ratio sweep", "C", "min/max", true);
  }
  return 0;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  const Rational eps = parse_rational(cfg.eps);
  const auto family = family_for(cfg);
  const auto b = uniformity::theorem1_threshold(family, eps);
  Json j{{"n_grid", {cfg.n}}, {"eps", to_string(eps)}, {"squares", family.squares()}, {"bracket", bracket_json(b)}};
  for (const Rational& c : {b.upper, Rational(2 * b.upper)}) {
    if (c > 1 && c < cfg.n) {
      const auto r = uniformity::family_extremes(family, c);
      j["case_at"].push_back({{"C", to_string(c)}, {"ratio", to_string(r.ratio())},
                              {"case", uniformity::classify_case(r, eps) == uniformity::Case::A ? "A" : "B"}});
    }
  }
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

int cmd_lemma3(const RunConfig& cfg, std::ostream& out) {
  const Rational eps = parse_rational(cfg.eps);
  const auto family = family_for(cfg);
  Rational scale;
  if (!cfg.scale.empty()) {
    scale = parse_rational(cfg.scale);
  } else {
    scale = uniformity::first_case_a_scale(family, uniformity::theorem1_threshold(family, eps).upper, eps);
  }
  const auto report = uniformity::family_extremes(family, scale);
  const Rational j_len = 3 * scale / (eps * cfg.n);
  if (j_len > 1) throw Error(ErrorCode::BadArgs, "3C/(eps n) exceeds the edge length");
  const auto js = uniformity::random_intervals(family.squares(), j_len, cfg.samples, cfg.seed);
  const Rational factor = 3 * eps / (1 - eps);
  std::int64_t lemma_fail = 0, bound_fail = 0;
  double worst = 0;
  for (const auto& j : js) {
    if (!uniformity::lemma3_check(family, report, eps, j).holds) ++lemma_fail;
    const auto d = uniformity::deviation_check(family, j, factor);
    if (!d.holds) ++bound_fail;
    worst = std::max(worst, (d.deviation / d.expected).to_double());
  }
  Json j{{"C", to_string(scale)},
         {"case", "A"},
         {"J_length", to_string(j_len)},
         {"samples", cfg.samples},
         {"seed", cfg.seed},
         {"lemma_failures", lemma_fail},
         {"bound_factor", factor.convert_to<double>()},
         {"bound_failures", bound_fail},
         {"worst_relative_deviation", worst}};
  *Sink(cfg, out) << j.dump() << '\n';
  return 0;
}

void report_error(std::ostream& err, std::string_view code, const std::string& detail) {
  err << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"polygeo: exact geodesic flow and visiting-number analytics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "cap on OpenMP workers (also POLYGEO_THREADS)");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");

  const auto add_out = [&](CLI::App* c) {
    c->add_option("--out", cfg.out, "output path (default stdout)");
    c->add_option("--format", cfg.format, "csv, json or svg");
  };
  const auto add_flow = [&](CLI::App* c) {
    c->add_option("--surface", cfg.surface, "fixture name (torus, L3) or JSON path");
    c->add_option("--alpha", cfg.alpha, "slope: phi, sqrt2, sqrt3, quad:a,b,c,d");
    c->add_option("--y0", cfg.y0, "rational starting height");
    c->add_option("--square", cfg.start_square, "starting square");
    c->add_option("--n", cfg.n, "number of vertical crossings");
  };

  auto* cf = app.add_subcommand("cf", "continued fraction digits and convergents");
  cf->add_option("--alpha", cfg.alpha);
  cf->add_option("--digits", cfg.digits);
  add_out(cf);

  auto* ost = app.add_subcommand("ostrowski", "Ostrowski digits of N");
  ost->add_option("--alpha", cfg.alpha);
  ost->add_option("--n", cfg.number)->required();
  add_out(ost);

  auto* rot = app.add_subcommand("rotate", "rotation orbit and visiting number");
  rot->add_option("--alpha", cfg.alpha);
  rot->add_option("--n", cfg.n);
  rot->add_option("--interval", cfg.interval, "lo,hi");
  add_out(rot);

  auto* l1 = app.add_subcommand("lemma1", "count solutions of {beta + k alpha} = 0");
  l1->set_help_flag("--help");
  l1->add_option("--alpha", cfg.alpha);
  l1->add_option("--h", cfg.h);
  l1->add_option("--len", cfg.length, "interval length: c/q (relative to q_h) or rational");
  l1->add_option("--interval", cfg.interval, "single closed interval lo,hi");
  l1->add_option("--samples", cfg.samples);
  l1->add_option("--seed", cfg.seed);
  add_out(l1);

  auto* ta = app.add_subcommand("threshold-a", "threshold scale for the rotation orbit");
  ta->add_option("--alpha", cfg.alpha);
  ta->add_option("--n", cfg.n);
  ta->add_option("--eps", cfg.eps);
  add_out(ta);

  auto* tr = app.add_subcommand("trace", "vertical-edge crossings of a geodesic");
  add_flow(tr);
  add_out(tr);

  auto* sd = app.add_subcommand("superdensity", "coverage length estimates T(m)");
  add_flow(sd);
  sd->add_option("--mmax", cfg.mmax);
  add_out(sd);

  auto* un = app.add_subcommand("uniformity", "min/max visiting numbers at scale C");
  add_flow(un);
  un->add_option("--C", cfg.scale);
  un->add_option("--eps", cfg.eps);
  un->add_option("--sweep", cfg.sweep, "comma-separated C values for the csv/svg sweep");
  add_out(un);

  auto* th = app.add_subcommand("threshold", "threshold scale on a polysquare surface");
  add_flow(th);
  th->add_option("--eps", cfg.eps);
  add_out(th);

  auto* l3 = app.add_subcommand("lemma3", "random-J check of the Case-A bounds");
  add_flow(l3);
  l3->add_option("--C", cfg.scale);
  l3->add_option("--eps", cfg.eps);
  l3->add_option("--samples", cfg.samples);
  l3->add_option("--seed", cfg.seed);
  add_out(l3);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorCode::BadArgs), e.what());
    return 2;
  }

  if (cfg.threads <= 0) {
    if (const char* env = std::getenv("POLYGEO_THREADS")) cfg.threads = std::atoi(env);
  }
  set_threads(cfg.threads);

  try {
    if (cf->parsed()) return cmd_cf(cfg, out);
    if (ost->parsed()) return cmd_ostrowski(cfg, out);
    if (rot->parsed()) return cmd_rotate(cfg, out);
    if (l1->parsed()) return cmd_lemma1(cfg, out);
    if (ta->parsed()) return cmd_threshold_a(cfg, out);
    if (tr->parsed()) return cmd_trace(cfg, out);
    if (sd->parsed()) return cmd_superdensity(cfg, out);
    if (un->parsed()) return cmd_uniformity(cfg, out);
    if (th->parsed()) return cmd_threshold(cfg, out);
    if (l3->parsed()) return cmd_lemma3(cfg, out);
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, "Internal", e.what());
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polygeo::cli
