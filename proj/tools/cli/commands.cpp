#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ahp/backend_factory.hpp"
#include "ahp/fourgon.hpp"
#include "ahp/free_group.hpp"
#include "ahp/geometry.hpp"
#include "ahp/harness.hpp"
#include "ahp/random.hpp"
#include "ahp/word_periodicity.hpp"

namespace ahp::cli {

namespace {

struct Globals {
  std::string backend = "free:2";
  std::string profile;
  std::uint64_t seed = 1;
  bool json = false;
  bool csv = false;
  std::string out;
  std::int64_t max_exponent = 8;
  int conjugator_bound = 4;
  std::int64_t max_window = 4096;
  int dehn_radius = 4;
};

struct Options {
  std::string word;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string a;
  std::string b;
  std::string g;
  std::string x = "1";
  std::string y = "1";
  std::string xp = "1";
  std::string xq = "1";
  std::int64_t r = 0;
  std::vector<std::int64_t> rs{0};
  std::vector<std::int64_t> sweep;
  int radius = 3;
  int eps = 0;
  std::size_t max_triangles = 4000;
  std::int64_t n_max = 8;
  std::int64_t n_min = 0;
  std::int64_t line_n_max = 2;
  int length_bound = 3;
  std::int64_t window = 0;
  bool sharp_free = false;
  bool weak = false;
  std::optional<std::int64_t> periods;
  std::int64_t max_periods = 8;
  std::size_t count = 200;
  std::size_t max_side = 3;
  std::size_t max_start = 3;
  std::string input;
  unsigned jobs = 1;
  std::string record;
};

struct Outcome {
  json result = json::object();
  std::string certificate = std::string(to_string(Certificate::exact));
  int exit_code = kExitOk;
};

class Context {
 public:
  explicit Context(const Globals& g) : g_(g) {}

  const Group& group() {
    if (!group_) {
      DehnOptions d;
      d.ball_radius = g_.dehn_radius;
      group_ = make_backend(g_.backend, d);
    }
    return *group_;
  }

  const ConstantsProfile* profile() {
    if (g_.profile.empty()) return nullptr;
    if (!profile_) profile_ = load_profile(g_.profile);
    return &*profile_;
  }

  const ConstantsProfile& require_profile() {
    if (const auto* p = profile()) return *p;
    throw std::invalid_argument("this subcommand needs --profile");
  }

  GroupElement element(const std::string& text) { return group().parse(text); }
  std::string format(const GroupElement& e) { return group().format(e); }

  SearchBounds bounds() const {
    SearchBounds b;
    b.max_exponent = g_.max_exponent;
    b.conjugator_bound = g_.conjugator_bound;
    b.max_window = g_.max_window;
    return b;
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  std::shared_ptr<const Group> group_;
  std::optional<ConstantsProfile> profile_;
};

using Handler = std::function<Outcome(Context&)>;

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

Outcome report_outcome(const HarnessReport& rep) {
  Outcome out;
  out.result = report_to_json(rep);
  out.certificate = rep.certificate.empty() ? "none" : rep.certificate;
  if (rep.hypothesis_failed() || !rep.witness_found) out.exit_code = kExitNoWitness;
  return out;
}

TheoremInstance make_instance(Context& ctx, const Options& o) {
  TheoremInstance inst;
  inst.a = ctx.element(o.a);
  inst.b = ctx.element(o.b);
  inst.x = ctx.element(o.x);
  inst.y = ctx.element(o.y);
  inst.r = o.r;
  inst.bounds = ctx.bounds();
  return inst;
}

std::vector<std::string> item_argv(const json& item) {
  if (item.contains("argv")) return item.at("argv").get<std::vector<std::string>>();
  std::vector<std::string> args{item.value("check", std::string("theorem"))};
  for (const auto& [key, value] : item.items()) {
    if (key == "check") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      for (const json& v : value) {
        args.push_back(flag);
        args.push_back(text(v));
      }
    } else {
      args.push_back(flag);
      args.push_back(text(value));
    }
  }
  return args;
}

std::vector<json> records_in(const json& j) {
  if (j.is_array()) return {j.begin(), j.end()};
  if (j.value("subcommand", std::string()) == "batch" && j.contains("result"))
    return j.at("result").at("records").get<std::vector<json>>();
  return {j};
}

void add_global_options(CLI::App& app, Globals& g) {
  app.add_option("--backend", g.backend, "free:N, zmzn:m,n or dehn:<path>");
  app.add_option("--profile", g.profile, "Constants profile (JSON)");
  app.add_option("--seed", g.seed, "Seed for sampled estimates");
  app.add_flag("--json", g.json, "Emit the full run record as JSON");
  app.add_flag("--csv", g.csv, "Emit CSV");
  app.add_option("--out", g.out, "Write output to a file");
  app.add_option("--max-exponent", g.max_exponent, "Witness search bound on |s|, |t|, n");
  app.add_option("--conjugator-bound", g.conjugator_bound, "Conjugator ball radius for bounded searches");
  app.add_option("--max-window", g.max_window, "Cap on materialized line periods");
  app.add_option("--dehn-radius", g.dehn_radius, "Ball radius explored by dehn backends");
}

std::map<std::string, Handler> add_subcommands(CLI::App& app, Options& o) {
  std::map<std::string, Handler> h;

  auto* c = app.add_subcommand("periods", "All period lengths of a word");
  c->add_option("--word", o.word)->required();
  h["periods"] = [&o](Context&) {
    Outcome out;
    out.result["word"] = o.word;
    out.result["periods"] = words::period_lengths(o.word);
    return out;
  };

  c = app.add_subcommand("fine-wilf", "Common root of two periods");
  c->add_option("--word", o.word)->required();
  c->add_option("--p", o.p)->required();
  c->add_option("--q", o.q)->required();
  h["fine-wilf"] = [&o](Context&) {
    Outcome out;
    try {
      const auto root = words::fine_wilf_root(o.word, o.p, o.q);
      out.result["root"] = root;
      out.result["gcd"] = root.size();
    } catch (const words::PeriodicityError& e) {
      out.result["failed_hypothesis"] = e.what();
      out.exit_code = kExitNoWitness;
    }
    return out;
  };

  c = app.add_subcommand("primroot", "Primitive root and exponent");
  c->add_option("--word", o.word)->required();
  h["primroot"] = [&o](Context&) {
    Outcome out;
    const auto pr = words::primitive_root(o.word);
    out.result["root"] = pr.root;
    out.result["exponent"] = pr.exponent;
    return out;
  };

  c = app.add_subcommand("free-reduce", "Free and cyclic reduction (letters a-z, A-Z)");
  c->add_option("--word", o.word)->required();
  h["free-reduce"] = [&o](Context&) {
    Outcome out;
    const auto cr = free::cyclic_reduce(o.word);
    out.result["reduced"] = free::free_reduce(o.word);
    out.result["cyclic_core"] = cr.core;
    out.result["conjugator"] = cr.conjugator;
    return out;
  };

  c = app.add_subcommand("overlap-root", "Common primitive root from a long overlap of L(a) and L(b)");
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  h["overlap-root"] = [&o](Context&) {
    Outcome out;
    free::validate(o.a);
    free::validate(o.b);
    const auto ov = free::overlap_root(o.a, o.b);
    out.result["found"] = ov.has_value();
    if (ov) {
      out.result["c"] = ov->c;
      out.result["shift_a"] = ov->shift_a;
      out.result["shift_b"] = ov->shift_b;
      out.result["b_inverted"] = ov->b_inverted;
    }
    return out;
  };

  c = app.add_subcommand("commensurate", "Search a^s = g^-1 b^t g");
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  h["commensurate"] = [&o](Context& ctx) {
    Outcome out;
    const auto res = commensurability_search(ctx.group(), ctx.element(o.a), ctx.element(o.b),
                                             ctx.globals().max_exponent, ctx.globals().conjugator_bound);
    out.result["found"] = res.witness.has_value();
    out.result["label"] = res.label;
    if (res.witness) {
      out.result["g"] = ctx.format(res.witness->g);
      out.result["s"] = res.witness->s;
      out.result["t"] = res.witness->t;
    } else {
      out.exit_code = kExitNoWitness;
    }
    out.certificate = to_string(res.certificate);
    return out;
  };

  c = app.add_subcommand("delta", "Slimness of geodesic triangles in a ball");
  c->add_option("--radius", o.radius);
  c->add_option("--max-triangles", o.max_triangles);
  h["delta"] = [&o](Context& ctx) {
    Outcome out;
    DeltaOptions d;
    d.max_triangles = o.max_triangles;
    d.seed = ctx.globals().seed;
    const auto est = estimate_delta(ctx.group(), o.radius, d);
    out.result["delta"] = rational_to_json(est.delta);
    out.result["radius"] = est.radius;
    out.result["triangles"] = est.triangles;
    out.result["skipped"] = est.skipped;
    out.result["sampled"] = est.sampled;
    out.certificate = to_string(est.certificate);
    return out;
  };

  c = app.add_subcommand("stable-norm", "min |g^n|/n over n <= n-max");
  c->add_option("--g", o.g)->required();
  c->add_option("--n-max", o.n_max);
  h["stable-norm"] = [&o](Context& ctx) {
    Outcome out;
    const GroupElement e = ctx.element(o.g);
    const auto est = stable_norm_estimate(ctx.group(), e, o.n_max);
    out.result["value"] = rational_to_json(est.value);
    out.result["attained_at"] = est.attained_at;
    const auto exact = stable_norm_exact(ctx.group(), e);
    out.result["exact"] = exact ? rational_to_json(*exact) : json(nullptr);
    out.certificate = to_string(est.certificate);
    return out;
  };

  c = app.add_subcommand("classify", "Elliptic or loxodromic");
  c->add_option("--g", o.g)->required();
  c->add_option("--n-max", o.n_max);
  h["classify"] = [&o](Context& ctx) {
    Outcome out;
    const auto cl = classify_element(ctx.group(), ctx.element(o.g), o.n_max);
    out.result["kind"] = to_string(cl.kind);
    out.result["order"] = optional_int(cl.order);
    out.result["reason"] = cl.reason;
    if (cl.kind == ElementKind::undecided) out.certificate = to_string(Certificate::bounded);
    return out;
  };

  c = app.add_subcommand("inj-radius", "Minimum stable norm of loxodromics in a ball");
  c->add_option("--length-bound", o.length_bound);
  c->add_option("--n-max", o.n_max);
  h["inj-radius"] = [&o](Context& ctx) {
    Outcome out;
    const auto est = injectivity_radius_estimate(ctx.group(), o.length_bound, o.n_max);
    out.result["value"] = rational_to_json(est.value);
    out.result["witness"] = ctx.format(est.witness);
    out.result["length_bound"] = est.length_bound;
    out.result["scanned"] = est.scanned;
    out.certificate = to_string(est.certificate);
    return out;
  };

  c = app.add_subcommand("acyl-profile", "Acylindricity counts on a ball");
  c->add_option("--eps", o.eps)->required();
  c->add_option("--radius", o.radius)->required();
  h["acyl-profile"] = [&o](Context& ctx) {
    Outcome out;
    const auto prof = acylindricity_profile(ctx.group(), o.eps, o.radius);
    out.result["eps"] = prof.eps;
    out.result["radius"] = prof.radius;
    out.result["R"] = prof.R;
    out.result["N"] = prof.N;
    out.result["counts"] = prof.counts;
    out.certificate = to_string(prof.certificate);
    return out;
  };

  c = app.add_subcommand("line", "Window of the periodic line L(x, a)");
  c->add_option("--x", o.x);
  c->add_option("--a", o.a)->required();
  c->add_option("--n-min", o.n_min);
  c->add_option("--n-max", o.line_n_max);
  h["line"] = [&o](Context& ctx) {
    Outcome out;
    const auto p = periodic_line(ctx.group(), ctx.element(o.x), ctx.element(o.a), o.n_min, o.line_n_max);
    out.result["label"] = ctx.group().format(p.label);
    json vs = json::array();
    for (const auto& v : p.vertices) vs.push_back(ctx.format(v));
    out.result["vertices"] = vs;
    out.result["phase_indices"] = p.phase_indices.value_or(std::vector<std::size_t>{});
    out.result["periods"] = p.periods();
    return out;
  };

  c = app.add_subcommand("constants", "Derived constants of a profile");
  c->add_option("--r", o.rs, "Values of r");
  h["constants"] = [&o](Context& ctx) {
    Outcome out;
    const ConstantsProfile& p = ctx.require_profile();
    out.result["kappa0"] = p.kappa0();
    out.result["eps0"] = p.eps0();
    out.result["mu"] = rational_to_json(p.mu());
    out.result["two_delta_two_mu"] = p.two_delta_two_mu();
    try {
      out.result["C"] = rational_to_json(p.C());
    } catch (const ConstantsError& e) {
      out.result["C"] = nullptr;
      out.result["C_error"] = e.what();
    }
    json rows = json::array();
    for (std::int64_t r : o.rs) {
      json row;
      row["r"] = r;
      row["eps"] = rational_to_json(p.eps_of_r(r));
      std::vector<std::string> errors;
      try {
        const KStep k = p.K_step(r);
        row["R"] = rational_to_json(k.acyl.R);
        row["N"] = k.acyl.N;
        row["S"] = k.S;
        row["K"] = k.K;
      } catch (const ConstantsError& e) {
        for (const char* k : {"R", "N", "S", "K"}) row[k] = nullptr;
        errors.push_back(e.what());
      }
      try {
        row["F"] = p.F_of_r(r);
      } catch (const ConstantsError& e) {
        row["F"] = nullptr;
        errors.push_back(e.what());
      }
      try {
        row["f"] = rational_to_json(p.f(Rational(r)));
        row["k"] = p.k_trim(r);
      } catch (const ConstantsError& e) {
        row["f"] = nullptr;
        row["k"] = nullptr;
        errors.push_back(e.what());
      }
      row["error"] = errors.empty() ? json(nullptr) : json(errors.front());
      rows.push_back(row);
    }
    out.result["rows"] = rows;
    return out;
  };

  c = app.add_subcommand("lemma41", "Parallel b-lines: search (A^-1 B) b^n = b^n (A^-1 B)");
  c->add_option("--b", o.b)->required();
  c->add_option("--xp", o.xp);
  c->add_option("--xq", o.xq);
  c->add_option("--window", o.window)->required();
  c->add_option("--r", o.r);
  h["lemma41"] = [&o](Context& ctx) {
    return report_outcome(lemma41_check(ctx.group(), ctx.element(o.b), ctx.element(o.xp), ctx.element(o.xq), o.window,
                                        o.r, ctx.profile(), ctx.bounds()));
  };

  c = app.add_subcommand("theorem", "Periodicity theorem check on one instance");
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  c->add_option("--x", o.x);
  c->add_option("--y", o.y);
  c->add_option("--r", o.r);
  c->add_flag("--sharp-free", o.sharp_free, "Free groups at r = 0: two periods");
  c->add_flag("--weak", o.weak, "Run the weak form directly");
  c->add_option("--periods", o.periods, "Override the number of a-periods");
  h["theorem"] = [&o](Context& ctx) {
    const TheoremInstance inst = make_instance(ctx, o);
    if (o.weak) {
      WeakOptions wo;
      wo.periods = o.periods;
      wo.require_F = !o.periods.has_value();
      return report_outcome(weak_theorem_check(ctx.group(), inst, ctx.profile(), wo));
    }
    MainOptions mo;
    mo.sharp_free = o.sharp_free;
    mo.periods = o.periods;
    return report_outcome(main_theorem_check(ctx.group(), inst, ctx.profile(), mo));
  };

  c = app.add_subcommand("threshold", "Smallest period count for which the conclusion is observed");
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  c->add_option("--x", o.x);
  c->add_option("--y", o.y);
  c->add_option("--r", o.r);
  c->add_option("--max-periods", o.max_periods);
  c->add_option("--sweep", o.sweep, "Values of r (CSV output)");
  h["threshold"] = [&o](Context& ctx) {
    Outcome out;
    out.certificate = to_string(Certificate::bounded);
    TheoremInstance inst = make_instance(ctx, o);
    const ConstantsProfile* profile = ctx.profile();
    const std::vector<std::int64_t> rs = o.sweep.empty() ? std::vector<std::int64_t>{o.r} : o.sweep;
    json rows = json::array();
    bool any = false;
    for (std::int64_t r : rs) {
      inst.r = r;
      const auto res = empirical_period_threshold(ctx.group(), inst, o.max_periods);
      json row;
      row["r"] = r;
      row["periods"] = optional_int(res.periods);
      row["s"] = optional_int(res.s);
      row["t"] = optional_int(res.t);
      json f = nullptr;
      if (profile != nullptr) {
        try {
          f = rational_to_json(profile->f(Rational(r)));
        } catch (const ConstantsError&) {
        }
      }
      row["f"] = f;
      std::string notes;
      for (const auto& n : res.notes) notes += (notes.empty() ? "" : "; ") + n;
      row["notes"] = notes;
      any = any || res.periods.has_value();
      rows.push_back(row);
    }
    out.result["max_periods"] = o.max_periods;
    out.result["rows"] = rows;
    if (!any) out.exit_code = kExitNoWitness;
    return out;
  };

  c = app.add_subcommand("fourgon-selfcheck", "Random four-gon composition identities");
  c->add_option("--count", o.count);
  c->add_option("--max-side", o.max_side);
  c->add_option("--max-start", o.max_start);
  h["fourgon-selfcheck"] = [&o](Context& ctx) {
    Outcome out;
    const Group& g = ctx.group();
    Rng rng(ctx.globals().seed);
    std::size_t failures = 0;
    std::size_t skipped = 0;
    json first = nullptr;
    for (std::size_t i = 0; i < o.count; ++i) {
      ComposablePair pair;
      try {
        pair = random_composable_pair(g, rng, o.max_side, o.max_start);
      } catch (const GeometryError&) {
        // The closing bottom side has no certified geodesic.
        ++skipped;
        continue;
      }
      std::string problem;
      try {
        const FourGon S = compose(g, pair.P, pair.Q);
        const SideElements p = side_elements(g, pair.P);
        const SideElements q = side_elements(g, pair.Q);
        const SideElements s = side_elements(g, S);
        const GroupElement h0 = translation_element(g, pair.P, pair.Q);
        if (!g.equal(g.multiply(h0, pair.Q.sides[1].start()), pair.P.sides[1].start())) problem = "translation";
        else if (!g.equal(s.left, g.multiply(p.left, g.inverse(q.left)))) problem = "left side";
        else if (!g.equal(s.top, q.bottom)) problem = "top side";
        else if (!g.equal(s.right, g.multiply(p.right, g.inverse(q.right)))) problem = "right side";
        else if (!g.equal(s.bottom, p.bottom)) problem = "bottom side";
        else if (S.sides[0].length() != pair.P.sides[0].length() + pair.Q.sides[0].length()) problem = "left length";
      } catch (const std::exception& e) {
        problem = e.what();
      }
      if (!problem.empty()) {
        if (failures == 0) first = {{"pair", i}, {"problem", problem}};
        ++failures;
      }
    }
    out.result["pairs"] = o.count;
    out.result["failures"] = failures;
    out.result["skipped"] = skipped;
    out.result["first_failure"] = first;
    if (failures > 0) out.exit_code = kExitRuntime;
    return out;
  };

  c = app.add_subcommand("batch", "Run a JSON array of invocations");
  c->add_option("--input", o.input)->required();
  c->add_option("--jobs", o.jobs);
  h["batch"] = [&o](Context&) {
    Outcome out;
    const json items = read_json_file(o.input);
    if (!items.is_array()) throw std::invalid_argument("batch input must be a JSON array");
    std::vector<json> records(items.size());
    std::vector<int> codes(items.size(), kExitOk);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        std::vector<std::string> args;
        try {
          args = item_argv(items[i]);
        } catch (const std::exception& e) {
          records[i] = {{"error", e.what()}, {"exit_code", kExitUsage}};
          codes[i] = kExitUsage;
          continue;
        }
        if (!args.empty() && args.front() == "batch") {
          records[i] = {{"argv", args}, {"error", "nested batch"}, {"exit_code", kExitUsage}};
          codes[i] = kExitUsage;
          continue;
        }
        Execution ex = execute(args);
        records[i] = std::move(ex.record);
        codes[i] = ex.exit_code;
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(items.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::size_t errors = 0;
    std::size_t misses = 0;
    for (int code : codes) {
      if (code == kExitNoWitness) ++misses;
      else if (code != kExitOk) ++errors;
    }
    out.result["count"] = items.size();
    out.result["errors"] = errors;
    out.result["no_witness"] = misses;
    out.result["records"] = records;
    out.certificate = "per record";
    out.exit_code = errors > 0 ? kExitRuntime : (misses > 0 ? kExitNoWitness : kExitOk);
    return out;
  };

  c = app.add_subcommand("replay", "Re-run recorded invocations and compare results");
  c->add_option("--record", o.record)->required();
  h["replay"] = [&o](Context&) {
    Outcome out;
    const std::vector<json> recs = records_in(read_json_file(o.record));
    json mismatches = json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const json& rec = recs[i];
      if (!rec.contains("argv")) throw std::invalid_argument("record " + std::to_string(i) + " has no argv");
      const Execution ex = execute(rec.at("argv").get<std::vector<std::string>>());
      for (const char* key : {"result", "certificate", "exit_code"}) {
        const json before = rec.value(key, json(nullptr));
        const json after = ex.record.value(key, json(nullptr));
        if (before != after) mismatches.push_back({{"record", i}, {"field", key}});
      }
    }
    out.result["records"] = recs.size();
    out.result["identical"] = mismatches.empty();
    out.result["mismatches"] = mismatches;
    if (!mismatches.empty()) out.exit_code = kExitRuntime;
    return out;
  };

  return h;
}

json collect_inputs(const CLI::App& app, const CLI::App& sub) {
  json in = json::object();
  auto add = [&in](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      if (opt->get_lnames().empty()) continue;
      const std::string name = opt->get_lnames().front();
      if (name == "help" || name == "json" || name == "csv" || name == "out") continue;
      if (opt->count() > 0) {
        if (opt->get_type_size() == 0) {
          in[name] = true;
        } else if (opt->get_items_expected_max() > 1) {
          in[name] = opt->results();
        } else {
          in[name] = opt->results().back();
        }
      } else if (!opt->get_default_str().empty()) {
        in[name] = opt->get_default_str();
      }
    }
  };
  add(app);
  add(sub);
  return in;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const json& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
    return s;
  }
  return v.dump();
}

std::string csv_field(const json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void write_table(std::ostream& os, const json& rows, bool csv) {
  std::vector<std::string> cols;
  for (const auto& [k, _] : rows.front().items()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  for (const json& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : cols) line.push_back(csv ? csv_field(row.value(k, json(nullptr))) : scalar_text(row.value(k, json(nullptr))));
    cells.push_back(std::move(line));
  }
  if (csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << line[i];
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << (i ? "  " : "  ") << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size(), ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

Execution execute(const std::vector<std::string>& args) {
  const auto t0 = std::chrono::steady_clock::now();
  Execution ex;
  Globals g;
  Options o;
  CLI::App app{"Periodicity experiments on hyperbolic groups", "ahp"};
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.require_subcommand(1);
  add_global_options(app, g);
  const auto handlers = add_subcommands(app, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    ex.parser_output = out.str() + err.str();
    ex.exit_code = code == 0 ? kExitOk : kExitUsage;
    ex.record = {{"argv", args}, {"error", code == 0 ? "" : e.what()}, {"exit_code", ex.exit_code}};
    return ex;
  }

  const CLI::App& sub = *app.get_subcommands().front();
  const std::string name = sub.get_name();
  ex.mode = g.json ? OutputMode::json : g.csv ? OutputMode::csv : OutputMode::text;
  if (!g.json && !g.csv) {
    if (name == "batch" || name == "replay") ex.mode = OutputMode::json;
    if (name == "threshold" && !o.sweep.empty()) ex.mode = OutputMode::csv;
  }
  if (!g.out.empty()) ex.out_path = g.out;

  Context ctx(g);
  Outcome outcome;
  try {
    outcome = handlers.at(name)(ctx);
  } catch (const BudgetExceeded& e) {
    outcome = Outcome{{{"error", e.what()}, {"largest_completed_radius", e.largest_completed_radius()}}, "none",
                      kExitRuntime};
  } catch (const std::invalid_argument& e) {
    outcome = Outcome{{{"error", e.what()}}, "none", kExitUsage};
  } catch (const std::exception& e) {
    outcome = Outcome{{{"error", e.what()}}, "none", kExitRuntime};
  }

  json profile = nullptr;
  std::string provenance = "none";
  try {
    if (const auto* p = ctx.profile()) {
      profile = profile_to_json(*p);
      provenance = to_string(p->mu_provenance());
    }
  } catch (const std::exception&) {
  }

  ex.exit_code = outcome.exit_code;
  json& rec = ex.record;
  rec["subcommand"] = name;
  rec["argv"] = args;
  rec["backend"] = g.backend;
  rec["inputs"] = collect_inputs(app, sub);
  rec["result"] = std::move(outcome.result);
  rec["certificate"] = outcome.certificate;
  rec["exit_code"] = outcome.exit_code;
  rec["profile"] = profile;
  rec["mu_provenance"] = provenance;
  rec["seed"] = g.seed;
  rec["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return ex;
}

std::string render(const Execution& e) {
  if (!e.parser_output.empty() || !e.record.contains("result")) return e.parser_output;
  std::ostringstream os;
  const json& rec = e.record;
  const json& result = rec.at("result");
  if (e.mode == OutputMode::json) {
    os << rec.dump(2) << '\n';
    return os.str();
  }
  if (e.mode == OutputMode::csv) {
    if (result.contains("rows") && is_table(result.at("rows"))) {
      write_table(os, result.at("rows"), true);
    } else {
      os << "key,value\n";
      for (const auto& [k, v] : result.items()) os << k << ',' << csv_field(v) << '\n';
      os << "certificate," << csv_field(rec.at("certificate")) << '\n';
      os << "mu_provenance," << csv_field(rec.at("mu_provenance")) << '\n';
    }
    return os.str();
  }
  for (const auto& [k, v] : result.items()) {
    if (is_table(v)) {
      os << k << ":\n";
      write_table(os, v, false);
    } else if (v.is_object()) {
      os << k << ":" << (v.empty() ? " -" : "") << '\n';
      for (const auto& [kk, vv] : v.items()) os << "  " << kk << ": " << scalar_text(vv) << '\n';
    } else {
      os << k << ": " << scalar_text(v) << '\n';
    }
  }
  os << "certificate: " << rec.at("certificate").get<std::string>() << '\n';
  os << "mu provenance: " << rec.at("mu_provenance").get<std::string>() << '\n';
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Execution ex = execute(args);
  const std::string text = render(ex);
  if (!ex.parser_output.empty()) {
    (ex.exit_code == kExitOk ? out : err) << text;
    return ex.exit_code;
  }
  if (ex.record.at("result").contains("error")) {
    err << "ahp: " << ex.record.at("result").at("error").get<std::string>() << '\n';
  }
  if (ex.out_path) {
    std::ofstream f(*ex.out_path);
    if (!f) {
      err << "ahp: cannot write " << *ex.out_path << '\n';
      return kExitRuntime;
    }
    f << text;
  } else {
    out << text;
  }
  return ex.exit_code;
}

}  // namespace ahp::cli
