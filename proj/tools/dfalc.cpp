// dfalc: normalize ontologies, revise groundings and run the benchmark
// experiments from the command line.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfalc/crisp.hpp"
#include "dfalc/experiment.hpp"
#include "dfalc/grounding_io.hpp"
#include "dfalc/normalizer.hpp"
#include "dfalc/parser.hpp"
#include "dfalc/random.hpp"
#include "dfalc/report.hpp"
#include "dfalc/synthetic.hpp"
#include "dfalc/train.hpp"

namespace {

using namespace dfalc;

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kNumeric = 3 };

struct TrainFlags {
  std::string loss = "hierarchical";
  std::string tnorm = "product";
  TrainConfig cfg;
  bool no_clamp = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--loss", loss, "hierarchical or rule")
        ->check(CLI::IsMember({"hierarchical", "rule"}))
        ->capture_default_str();
    cmd->add_option("--lr", cfg.learning_rate, "Adam learning rate")->capture_default_str();
    cmd->add_option("--patience", cfg.patience, "early-stopping patience")->capture_default_str();
    cmd->add_option("--max-epochs", cfg.max_epochs)->capture_default_str();
    cmd->add_option("--alpha-prime", cfg.alpha_prime, "rule-loss threshold")->capture_default_str();
    cmd->add_option("--tnorm", tnorm, "product or godel")
        ->check(CLI::IsMember({"product", "godel"}))
        ->capture_default_str();
    cmd->add_option("--tolerance", cfg.tolerance, "loss treated as zero")->capture_default_str();
    cmd->add_flag("--no-clamp-evidence", no_clamp, "do not clamp rule-loss evidence to [0,1]");
  }

  TrainConfig resolve(std::uint64_t seed) const {
    TrainConfig t = cfg;
    t.loss_kind = parse_loss_kind(loss);
    t.tnorm = parse_tnorm(tnorm);
    t.clamp_evidence = !no_clamp;
    t.seed = seed;
    t.validate();
    return t;
  }
};

Ontology load_ontology(const std::string& path) { return parse_ontology(read_text_file(path)); }

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

// --- normalize -------------------------------------------------------------

struct NormalizeCmd {
  std::string in, out;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("normalize", "rewrite a TBox into normal forms");
    cmd->add_option("--in", in, "ontology file")->required();
    cmd->add_option("--out", out, "output file (stdout if omitted)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const Ontology o = load_ontology(in);
    emit(out, render_normalized(normalize(o), o));
  }
};

// --- ground ----------------------------------------------------------------

struct GroundCmd {
  std::string ontology, init, out, log;
  std::uint64_t seed = 0;
  bool keep_fresh = false;
  TrainFlags train_flags;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("ground", "revise a grounding into a model of the TBox");
    cmd->add_option("--ontology", ontology)->required();
    cmd->add_option("--init", init, "initial grounding (default: ABox degrees, 0.5 elsewhere)");
    cmd->add_option("--out", out, "revised grounding (stdout if omitted)");
    cmd->add_option("--log", log, "per-epoch CSV log");
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_flag("--keep-fresh", keep_fresh, "also write the fresh names of the normalized TBox");
    train_flags.attach(cmd);
    cmd->callback([this] { run(); });
  }

  void run() const {
    const TrainConfig cfg = train_flags.resolve(seed);
    const Ontology o = load_ontology(ontology);
    const Grounding start = init.empty() ? grounding_from_abox(o, 0.5) : load_grounding_file(init);
    const NormalizedTBox nt = normalize(o.tbox, signature_of(o));
    const TrainResult r = train(seed_fresh_assertions(nt, start), nt, cfg);
    Signature keep = keep_fresh ? nt.extended_signature : signature_of(o);
    keep.individuals = start.signature().individuals;
    emit(out, dump_grounding(restrict_to(r.revised, keep)));
    if (!log.empty()) write_text_file(log, history_csv(r.history));
    std::cerr << "epochs " << r.history.size() - 1 << ", loss " << format_degree(r.final_loss())
              << ", stop " << to_string(r.stop) << '\n';
  }
};

// --- eval ------------------------------------------------------------------

struct EvalCmd {
  std::string ontology, grounding, policy = "satisfies";
  double alpha = 0.5;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("eval", "score a grounding against a TBox");
    cmd->add_option("--ontology", ontology)->required();
    cmd->add_option("--grounding", grounding)->required();
    cmd->add_option("--crisp-alpha", alpha, "crisp threshold in [0.5,1]")->capture_default_str();
    cmd->add_option("--unknown", policy, "whether unknown axioms count as satisfied")
        ->check(CLI::IsMember({"satisfies", "fails"}))
        ->capture_default_str();
    cmd->callback([this] { run(); });
  }

  void run() const {
    const Ontology o = load_ontology(ontology);
    const Grounding g = load_grounding_file(grounding);
    const CrispInterpretation ci = crispify(g, {alpha});
    for (const auto& ax : o.tbox) {
      std::cout << to_string(ax) << "\tcrisp=" << to_string(crisp_eval_axiom(ci, ax))
                << "\tfuzzy=" << (fuzzy_satisfies(g, ax) ? "satisfied" : "violated") << '\n';
    }
    const auto pol = policy == "satisfies" ? UnknownPolicy::Satisfies : UnknownPolicy::Fails;
    std::cout << "success_rate " << format_degree(success_rate(ci, o.tbox, pol)) << '\n'
              << "fuzzy_success_rate " << format_degree(fuzzy_success_rate(g, o.tbox)) << '\n';
  }
};

// --- gen-synthetic ---------------------------------------------------------

struct SyntheticFlags {
  SyntheticSpec spec;
  int axioms = 10;

  void attach(CLI::App* cmd) {
    cmd->add_option("--individuals", spec.n_individuals)->capture_default_str();
    cmd->add_option("--concepts", spec.n_concepts)->capture_default_str();
    cmd->add_option("--roles", spec.n_roles)->capture_default_str();
    cmd->add_option("--axioms", axioms, "spread evenly over the seven forms and compounds")
        ->capture_default_str();
    cmd->add_option("--density", spec.density)->capture_default_str();
    cmd->add_option("--role-density", spec.role_density, "default min(density, 2/individuals)");
  }

  SyntheticSpec resolve(std::uint64_t seed) const {
    SyntheticSpec s = spec;
    s.axioms_per_form = spread_axioms(axioms);
    s.seed = seed;
    return s;
  }
};

struct GenSyntheticCmd {
  SyntheticFlags flags;
  std::uint64_t seed = 0;
  std::string out_ontology, out_ideal;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen-synthetic", "sample a consistent ontology and its model");
    flags.attach(cmd);
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_option("--out-ontology", out_ontology)->required();
    cmd->add_option("--out-ideal", out_ideal)->required();
    cmd->callback([this] { run(); });
  }

  void run() const {
    const SyntheticData data = gen_synthetic(flags.resolve(seed));
    write_text_file(out_ontology, render_ontology(data.ontology));
    save_grounding_file(data.ideal, out_ideal);
  }
};

// --- experiment ------------------------------------------------------------

struct ExperimentCmd {
  std::string kind;
  std::string ontology, ideal, report;
  std::vector<double> rates{0.2, 0.4, 0.6, 0.8};
  MaskSpec mask;
  std::uint64_t seed = 0;
  int queries = 20;
  SyntheticFlags synth;
  TrainFlags train_flags;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("experiment", "masked revision or query answering benchmark");
    cmd->add_option("kind", kind, "mask-revision or cqa")
        ->required()
        ->check(CLI::IsMember({"mask-revision", "cqa"}));
    cmd->add_option("--ontology", ontology, "ontology file (synthetic data if omitted)");
    cmd->add_option("--ideal", ideal, "known-good grounding for --ontology");
    cmd->add_option("--mask-rate", rates, "one or more rates")->delimiter(',')->capture_default_str();
    cmd->add_option("--unknown-lo", mask.unknown_lo)->capture_default_str();
    cmd->add_option("--unknown-hi", mask.unknown_hi)->capture_default_str();
    cmd->add_flag("--concepts-only", mask.concepts_only, "leave role entries unmasked");
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_option("--queries", queries, "queries per shape (cqa)")->capture_default_str();
    cmd->add_option("--report", report, "report file (stdout if omitted)");
    synth.attach(cmd);
    train_flags.attach(cmd);
    cmd->callback([this] { run(); });
  }

  void run() const {
    const auto started = utc_now();
    const auto t0 = std::chrono::steady_clock::now();
    const TrainConfig cfg = train_flags.resolve(seed);

    nlohmann::ordered_json config;
    Ontology o;
    Grounding truth;
    if (!ontology.empty()) {
      if (ideal.empty()) throw InputError("--ontology needs --ideal");
      o = load_ontology(ontology);
      truth = load_grounding_file(ideal);
      config["ontology"] = ontology;
      config["ideal"] = ideal;
    } else {
      const SyntheticSpec spec = synth.resolve(seed);
      SyntheticData data = gen_synthetic(spec);
      o = std::move(data.ontology);
      truth = std::move(data.ideal);
      config["synthetic"] = to_json(spec);
    }
    config["seed"] = seed;
    config["train"] = to_json(cfg);

    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rates.size(); ++i) {
      MaskSpec m = mask;
      m.rate = rates[i];
      m.seed = derive_seed(seed, 100 + i);
      m.validate();
      nlohmann::ordered_json entry = {{"mask", to_json(m)}};
      if (kind == "mask-revision") {
        entry["result"] = to_json(run_mask_revision(o, truth, m, cfg));
      } else {
        entry["result"] = to_json(run_cqa(o, truth, m, cfg, queries));
      }
      results.push_back(std::move(entry));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(report, make_report(kind, config, results, started, secs).dump(2) + "\n");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfalc: fuzzy ALC grounding revision"};
  app.require_subcommand(1);
  NormalizeCmd normalize_cmd;
  GroundCmd ground_cmd;
  EvalCmd eval_cmd;
  GenSyntheticCmd gen_cmd;
  ExperimentCmd experiment_cmd;
  normalize_cmd.attach(app);
  ground_cmd.attach(app);
  eval_cmd.attach(app);
  gen_cmd.attach(app);
  experiment_cmd.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
