// syz: command-line front end over the syz library.
//
//   syz [--order O] [--field K] [--json] [--seed N] [--degree-cap D] <command> [options] FILE
//
// FILE is an ideal file ("-" reads stdin). Exit status: 0 success, 2 when a
// degree cap stopped the computation, 1 on any error.

#include "syz/syz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCapped = 2;

struct Settings {
  std::string command;
  std::string file;
  std::string order;
  std::string field;
  bool json = false;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::optional<int> degree_cap;
  std::string poly;
  int dmax = 10;
  std::size_t drop = 0;
  std::string keep;
  std::string weight;
  std::vector<std::string> stages;
  bool check = true;
  bool schreyer = false;
  bool generic = false;
  bool divide_only = false;
  int m = -1;
  int trials = 3;
  int n = 1;
  bool affine = false;
  bool j_ideal = false;
};

/// What a command produces: a text rendering and a JSON "result" value.
struct Outcome {
  std::string text;
  json result;
  bool capped = false;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    w.push_back(std::stol(item, &used));
    if (used != item.size()) throw std::invalid_argument("malformed weight '" + item + "'");
  }
  return w;
}

template <syz::Field F>
json strings_json(const std::vector<syz::Polynomial<F>>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(syz::to_string(f));
  return a;
}

/// f in k[x_0..x_{n-1}] using only x_k.. rewritten in `target` = k[x_k..].
template <syz::Field F>
syz::Polynomial<F> drop_leading(const syz::Polynomial<F>& f, const syz::RingPtr<F>& target, std::size_t k) {
  std::vector<typename syz::Polynomial<F>::term_type> ts;
  for (const auto& t : f) {
    syz::Monomial m(target->nvars());
    for (std::size_t i = 0; i < target->nvars(); ++i) m.set(i, t.mono[k + i]);
    ts.push_back({t.coeff, std::move(m)});
  }
  return syz::Polynomial<F>::from_terms(target, std::move(ts));
}

template <syz::Field F>
class Runner {
 public:
  Runner(const Settings& s, F field, syz::RingPtr<F> ring, std::vector<syz::Polynomial<F>> gens)
      : s_(s), k_(std::move(field)), I_{std::move(ring), std::move(gens)} {}

  Outcome run() {
    const auto& c = s_.command;
    if (c == "gb") return gb();
    if (c == "reduce") return reduce();
    if (c == "member") return member();
    if (c == "eliminate") return eliminate();
    if (c == "saturate") return saturate();
    if (c == "quotient") return quotient();
    if (c == "hilbert") return hilbert();
    if (c == "resolve") return resolve();
    if (c == "betti") return betti();
    if (c == "regularity") return regularity();
    if (c == "inideal") return inideal();
    if (c == "borel") return borel();
    if (c == "satdefect") return satdefect();
    if (c == "degenerate") return degenerate();
    if (c == "bs-regular") return bs_regular();
    throw std::logic_error("unhandled command " + c);
  }

 private:
  syz::Polynomial<F> poly_arg() const {
    if (s_.poly.empty()) throw std::invalid_argument(s_.command + " needs --poly");
    return syz::parse_polynomial(s_.poly, I_.ring);
  }

  Outcome ideal_outcome(const syz::RingPtr<F>& ring, const std::vector<syz::Polynomial<F>>& gens,
                        const std::string& prefix = "g") const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(prefix + std::to_string(i + 1));
    Outcome o;
    o.text = syz::print_ideal_file(ring, gens, names);
    o.result = strings_json(gens);
    return o;
  }

  syz::ResolutionOptions resolution_options() const {
    syz::ResolutionOptions r;
    r.minimal = !s_.schreyer;
    r.degree_cap = s_.degree_cap;
    return r;
  }

  Outcome gb() {
    syz::GroebnerOptions opts;
    opts.track_transform = false;
    opts.degree_cap = s_.degree_cap;
    if (s_.seed_given) opts.pair_seed = s_.seed;
    auto basis = syz::general_groebner_basis(I_, std::nullopt, opts);
    auto o = ideal_outcome(I_.ring, basis.elements);
    o.capped = !basis.complete;
    o.result = {{"basis", strings_json(basis.elements)},
                {"complete", basis.complete},
                {"stats",
                 {{"pairs_created", basis.stats.pairs_created},
                  {"pairs_skipped", basis.stats.pairs_skipped},
                  {"pairs_reduced", basis.stats.pairs_reduced},
                  {"zero_reductions", basis.stats.zero_reductions},
                  {"max_degree", basis.stats.max_degree}}}};
    return o;
  }

  Outcome reduce() {
    const auto g = poly_arg();
    std::vector<syz::Polynomial<F>> divisors;
    if (s_.divide_only) {
      divisors = I_.nonzero();
    } else {
      syz::GroebnerOptions opts;
      opts.track_transform = false;
      divisors = syz::general_groebner_basis(I_, std::nullopt, opts).elements;
    }
    const auto r = divisors.empty() ? g : syz::divide(g, divisors).remainder;
    Outcome o;
    o.text = syz::to_string(r) + "\n";
    o.result = {{"remainder", syz::to_string(r)}};
    return o;
  }

  Outcome member() {
    const auto cert = syz::membership(poly_arg(), I_);
    Outcome o;
    o.text = cert.member ? "true\n" : "false\n";
    json coeffs = json::array();
    for (std::size_t i = 0; i < cert.coefficients.size(); ++i) {
      coeffs.push_back(syz::to_string(cert.coefficients[i]));
      o.text += "  f" + std::to_string(i + 1) + ": " + syz::to_string(cert.coefficients[i]) + "\n";
    }
    o.result = {{"member", cert.member}, {"certificate", coeffs}};
    return o;
  }

  Outcome eliminate() {
    const auto& vars = I_.ring->variables();
    std::size_t k = s_.drop;
    if (!s_.keep.empty()) {
      std::vector<std::string> kept;
      std::stringstream ss(s_.keep);
      std::string v;
      while (std::getline(ss, v, ',')) kept.push_back(v);
      if (kept.size() > vars.size() || !std::equal(kept.begin(), kept.end(), vars.end() - kept.size())) {
        throw std::invalid_argument("--keep must name the trailing variables of the ring, in ring order");
      }
      k = vars.size() - kept.size();
    }
    if (k == 0 || k >= vars.size()) throw std::invalid_argument("eliminate needs 0 < k < number of variables");
    std::optional<syz::MonomialOrder> order;
    if (!s_.order.empty()) order = I_.ring->order();
    auto E = syz::eliminate(I_, k, order);
    auto sub = syz::PolynomialRing<F>::make(k_, std::vector<std::string>(vars.begin() + k, vars.end()));
    std::vector<syz::Polynomial<F>> gens;
    for (const auto& g : E.gens) gens.push_back(drop_leading(g, sub, k));
    return ideal_outcome(sub, gens);
  }

  Outcome saturate() {
    if (!s_.poly.empty()) {
      auto S = syz::ideal_quotient_stable(I_, poly_arg());
      return ideal_outcome(S.ring, S.gens);
    }
    syz::SaturationOptions opts;
    opts.seed = s_.seed;
    auto S = syz::saturation(I_, opts);
    return ideal_outcome(S.ring, S.gens);
  }

  Outcome quotient() {
    auto Q = syz::ideal_quotient(I_, poly_arg());
    return ideal_outcome(Q.ring, Q.gens);
  }

  Outcome hilbert() {
    const auto h = syz::hilbert_function(I_, s_.dmax);
    const auto num = syz::hilbert_numerator(I_);
    Outcome o;
    for (std::size_t d = 0; d < h.size(); ++d) o.text += (d ? "," : "") + std::to_string(h[d]);
    o.text += "\n";
    o.result = {{"values", h}, {"numerator", num}};
    return o;
  }

  static json shifts_json(const syz::FreeResolution<F>& res) {
    json a = json::array();
    for (const auto& s : res.shifts()) a.push_back(s);
    return a;
  }

  static json betti_json(const syz::BettiTable& b) {
    json a = json::array();
    for (const auto& [key, v] : b.entries()) a.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
    return a;
  }

  Outcome resolve() {
    const auto res = syz::free_resolution(I_, resolution_options());
    Outcome o;
    o.capped = !res.complete;
    json maps = json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < res.maps.size(); ++k) {
      const auto& M = res.maps[k];
      text << "map " << k << " (" << M.rows << " x " << M.cols << "):\n";
      json rows = json::array();
      for (std::size_t r = 0; r < M.rows; ++r) {
        json row = json::array();
        text << "  [";
        for (std::size_t c = 0; c < M.cols; ++c) {
          const auto e = syz::to_string(M.at(r, c));
          row.push_back(e);
          text << (c ? ", " : "") << e;
        }
        text << "]\n";
        rows.push_back(row);
      }
      maps.push_back(rows);
    }
    const auto b = res.betti();
    text << b.to_ascii();
    o.text = text.str();
    o.result = {{"minimal", res.minimal}, {"complete", res.complete}, {"length", res.length()},
                {"shifts", shifts_json(res)}, {"maps", maps},  {"betti", betti_json(b)}};
    return o;
  }

  Outcome betti() {
    const auto res = syz::free_resolution(I_, resolution_options());
    Outcome o;
    o.capped = !res.complete;
    o.text = res.betti().to_ascii();
    o.result = {{"complete", res.complete}, {"betti", betti_json(res.betti())}};
    return o;
  }

  Outcome regularity() {
    auto opts = resolution_options();
    opts.minimal = true;
    const auto res = syz::free_resolution(I_, opts);
    Outcome o;
    if (!res.complete) {
      o.capped = true;
      o.text = "incomplete\n";
      o.result = {{"regularity", nullptr}, {"complete", false}};
      return o;
    }
    if (res.modules.empty()) throw std::domain_error("regularity of the zero ideal");
    const int reg = syz::regularity(res);
    o.text = std::to_string(reg) + "\n";
    o.result = {{"regularity", reg}, {"complete", true}};
    return o;
  }

  /// A seeded generic linear change of coordinates.
  syz::Ideal<F> generic() const {
    std::mt19937_64 rng(s_.seed);
    std::vector<syz::Polynomial<F>> images;
    for (std::size_t i = 0; i < I_.ring->nvars(); ++i) {
      syz::Polynomial<F> l(I_.ring);
      for (std::size_t j = 0; j < I_.ring->nvars(); ++j) {
        l += syz::variable(I_.ring, j).scaled(syz::detail::random_scalar(rng, k_));
      }
      images.push_back(l);
    }
    return syz::apply_change(I_, images);
  }

  Outcome monomial_outcome(const syz::MonomialIdeal& in) const {
    Outcome o;
    json gens = json::array();
    for (const auto& m : in.generators()) {
      const auto s = syz::monomial_to_string(m, I_.ring->variables());
      gens.push_back(s);
      o.text += s + "\n";
    }
    o.result = {{"generators", gens}};
    return o;
  }

  Outcome inideal() { return monomial_outcome(syz::initial_ideal(s_.generic ? generic() : I_)); }

  Outcome borel() {
    const auto in = syz::initial_ideal(s_.generic ? generic() : I_);
    const bool fixed = syz::is_borel_fixed(in);
    auto o = monomial_outcome(in);
    o.text = std::string("borel-fixed: ") + (fixed ? "true" : "false") + "\n" + o.text;
    o.result["borel_fixed"] = fixed;
    return o;
  }

  Outcome satdefect() {
    syz::SaturationOptions opts;
    opts.seed = s_.seed;
    const auto d = syz::sat_defect(I_, opts);
    Outcome o;
    std::ostringstream text;
    text << "per-degree:";
    for (auto x : d.per_degree) text << " " << x;
    if (d.per_degree.empty()) text << " none";
    text << "\ntotal: " << d.total << "\nregularity: " << d.regularity << "\nbound: " << d.bound
         << "\nwithin-bound: " << (d.within_bound() ? "true" : "false") << "\n";
    o.text = text.str();
    o.result = {{"per_degree", d.per_degree}, {"total", d.total},   {"regularity", d.regularity},
                {"bound", d.bound},           {"within_bound", d.within_bound()}};
    return o;
  }

  json family_json(const syz::FlatFamily<F>& fam, std::ostringstream& text) const {
    json members = json::array();
    const auto& vars = fam.ring->variables();
    for (std::size_t j = 0; j < fam.generators.size(); ++j) {
      text << "h" << j + 1 << " = " << fam.to_string(j) << "\n";
      json terms = json::array();
      for (std::size_t t = 0; t < fam.generators[j].size(); ++t) {
        const auto& term = fam.generators[j].terms()[t];
        terms.push_back({{"monomial", syz::monomial_to_string(term.mono, vars)},
                         {"coeff", fam.ring->field().to_string(term.coeff)},
                         {"t_exp", fam.t_exponents[j][t]}});
      }
      members.push_back({{"polynomial", fam.to_string(j)}, {"baseline", fam.baselines[j]}, {"terms", terms}});
    }
    json out = {{"weights", fam.weights}, {"members", members}};
    if (s_.check) {
      const auto rep = syz::flatness_check(fam, s_.dmax);
      text << "flat: " << (rep.flat ? "true" : "false");
      if (rep.first_bad_degree) text << " (first difference in degree " << *rep.first_bad_degree << ")";
      text << "\n";
      out["flat"] = rep.flat;
      out["first_bad_degree"] = rep.first_bad_degree ? json(*rep.first_bad_degree) : json(nullptr);
      out["checked_through"] = rep.checked_through;
    }
    return out;
  }

  Outcome degenerate() {
    std::vector<std::vector<long>> ws;
    if (!s_.weight.empty()) ws.push_back(parse_weights(s_.weight));
    for (const auto& st : s_.stages) ws.push_back(parse_weights(st));
    if (ws.empty()) throw std::invalid_argument("degenerate needs --weight or --stage");
    for (const auto& w : ws) {
      if (w.size() != I_.ring->nvars()) throw std::invalid_argument("weight vector length must match the ring");
    }
    const auto fams = ws.size() == 1 ? std::vector<syz::FlatFamily<F>>{syz::flat_family(I_, ws[0])}
                                     : syz::staged_flat_family(I_, ws);
    Outcome o;
    std::ostringstream text;
    json stages = json::array();
    for (std::size_t i = 0; i < fams.size(); ++i) {
      if (fams.size() > 1) text << "# stage " << i + 1 << "\n";
      stages.push_back(family_json(fams[i], text));
    }
    o.text = text.str();
    o.result = fams.size() == 1 ? stages[0] : json{{"stages", stages}};
    return o;
  }

  Outcome bs_regular() {
    if (s_.m < 0) throw std::invalid_argument("bs-regular needs --m >= 0");
    syz::BayerStillmanOptions opts;
    opts.trials = s_.trials;
    opts.seed = s_.seed;
    const auto rep = syz::bayer_stillman_test(I_, s_.m, opts);
    Outcome o;
    o.text = syz::to_string(rep.verdict) + "\n";
    o.result = {{"verdict", syz::to_string(rep.verdict)},
                {"m", s_.m},
                {"max_generator_degree", rep.max_generator_degree},
                {"trials_run", rep.trials_run},
                {"failed_at", rep.failed_at}};
    return o;
  }

  const Settings& s_;
  F k_;
  syz::Ideal<F> I_;
};

void emit(const Settings& s, const std::string& order, const std::string& field, const json& gens, const Outcome& o,
          double parse_ms, double compute_ms) {
  if (!s.json) {
    std::cout << o.text;
    return;
  }
  json out = {{"command", s.command},
              {"order", order},
              {"field", field},
              {"generators", gens},
              {"result", o.result},
              {"timings", {{"parse_ms", parse_ms}, {"compute_ms", compute_ms}}}};
  std::cout << out.dump(2) << "\n";
}

template <syz::Field F>
int run_with_field(const Settings& s, const F& k, const std::string& text, Clock::time_point t0) {
  const auto header = syz::parse_ideal_header(text);
  const auto order = s.order.empty() ? syz::MonomialOrder::grevlex(header.variables.size())
                                     : syz::MonomialOrder::parse(s.order, header.variables.size());
  auto file = syz::parse_ideal_file(text, k, order);
  const double parse_ms = ms_since(t0);
  const auto t1 = Clock::now();
  Runner<F> runner(s, k, file.ring, file.generators);
  const auto o = runner.run();
  emit(s, order.to_string(), file.ring->field().name(), strings_json(file.generators), o, parse_ms, ms_since(t1));
  if (o.capped) {
    std::cerr << "syz: degree cap " << *s.degree_cap << " reached; output is partial\n";
    return kExitCapped;
  }
  return kExitOk;
}

template <syz::Field F>
int run_mayr_meyer(const Settings& s, const F& k) {
  const auto t0 = Clock::now();
  auto I = s.j_ideal ? syz::mayr_meyer_j(s.n, k) : syz::mayr_meyer(s.n, !s.affine, k);
  Outcome o;
  o.text = syz::print_ideal_file(I.ring, I.gens);
  o.result = strings_json(I.gens);
  emit(s, I.ring->order().to_string(), I.ring->field().name(), json::array(), o, 0.0, ms_since(t0));
  return kExitOk;
}

syz::FieldSpec resolve_field(const Settings& s, const std::optional<syz::FieldSpec>& declared) {
  if (!s.field.empty()) return syz::FieldSpec::parse(s.field);
  if (declared) return *declared;
  return syz::FieldSpec::parse("Fp:32003");
}

int dispatch(const Settings& s) {
  if (s.command == "mayr-meyer") {
    const auto spec = resolve_field(s, std::nullopt);
    if (spec.is_rational()) return run_mayr_meyer(s, syz::Rationals{});
    return run_mayr_meyer(s, syz::PrimeField(spec.modulus));
  }
  const auto t0 = Clock::now();
  const auto text = read_input(s.file);
  const auto spec = resolve_field(s, syz::parse_ideal_header(text).field);
  if (spec.is_rational()) return run_with_field(s, syz::Rationals{}, text, t0);
  return run_with_field(s, syz::PrimeField(spec.modulus), text, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syz: Groebner bases, syzygies, resolutions and regularity"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--order", s.order, "monomial order: lex | grevlex | elim:k | weight:w0,...,wn[;lex]");
  app.add_option("--field", s.field, "coefficient field QQ or Fp:p (overrides the file)");
  app.add_flag("--json", s.json, "JSON on stdout");
  app.add_option("--seed", s.seed, "random seed")->each([&](const std::string&) { s.seed_given = true; });
  app.add_option("--degree-cap", s.degree_cap, "stop at this degree (exit status 2)");

  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", s.file, "ideal file, '-' for stdin")->required();
    return c;
  };
  file_command("gb", "reduced Groebner basis");
  auto* red = file_command("reduce", "normal form of --poly");
  red->add_option("--poly", s.poly)->required();
  red->add_flag("--divide", s.divide_only, "divide by the listed generators in file order, no Groebner basis");
  file_command("member", "ideal membership of --poly with a certificate")->add_option("--poly", s.poly)->required();
  auto* elim = file_command("eliminate", "intersection with a subring of trailing variables");
  elim->add_option("--drop", s.drop, "number of leading variables to eliminate");
  elim->add_option("--keep", s.keep, "comma-separated trailing variables to keep");
  file_command("saturate", "saturation by the irrelevant ideal, or by --poly")->add_option("--poly", s.poly);
  file_command("quotient", "ideal quotient (I : --poly)")->add_option("--poly", s.poly)->required();
  file_command("hilbert", "Hilbert function of S/I")->add_option("--dmax", s.dmax, "last degree")->capture_default_str();
  file_command("resolve", "free resolution with maps")->add_flag("--schreyer", s.schreyer, "non-minimal Schreyer resolution");
  file_command("betti", "Betti table")->add_flag("--schreyer", s.schreyer, "non-minimal Schreyer resolution");
  file_command("regularity", "Castelnuovo-Mumford regularity");
  file_command("inideal", "initial ideal")->add_flag("--generic", s.generic, "after a seeded generic change");
  file_command("borel", "is the initial ideal Borel-fixed")->add_flag("--generic", s.generic, "after a seeded generic change");
  file_command("satdefect", "dim (sat I / I) against its regularity bound");
  auto* deg = file_command("degenerate", "flat family of a weight degeneration");
  deg->add_option("--weight", s.weight, "w0,...,wn");
  deg->add_option("--stage", s.stages, "one weight vector per stage (repeatable)");
  deg->add_option("--dmax", s.dmax, "flatness check through this degree")->capture_default_str();
  deg->add_flag("!--no-check", s.check, "skip the flatness check");
  auto* bs = file_command("bs-regular", "Bayer-Stillman m-regularity test");
  bs->add_option("--m", s.m, "candidate regularity")->required();
  bs->add_option("--trials", s.trials, "random linear forms per step")->capture_default_str();
  auto* mm = app.add_subcommand("mayr-meyer", "Mayr-Meyer ideal of level n");
  mm->add_option("--n", s.n, "level")->capture_default_str();
  mm->add_flag("--affine", s.affine, "the inhomogeneous ideal");
  mm->add_flag("--j", s.j_ideal, "the ideal J^H");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  s.command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(s);
  } catch (const syz::ParseError& e) {
    std::cerr << "syz: " << (s.file == "-" ? "<stdin>" : s.file) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "syz: error: " << e.what() << "\n";
  }
  return kExitError;
}
