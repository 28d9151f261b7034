#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "goedel/observe.hpp"
#include "goedel/transcript.hpp"

using namespace goedel;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOutOfFuel = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitProofRejected = 4;

struct CliConfig {
  Nat fuel{1000000};
  std::uint64_t sample_width = 5;
  std::uint64_t unprovability_bound = 20000;
  std::string transcript_path;
  bool structured = false;
  unsigned jobs = 1;
  std::string psi = "tot";
};

// Decimal, base^exponent for the big budgets self-interpretation needs, or
// the canonical numeral expression forms.
Nat parse_nat_arg(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    Nat base = Nat::from_decimal(text.substr(0, caret));
    std::uint64_t exp = std::stoull(text.substr(caret + 1));
    if (base == Nat(2)) return Nat::pow2(exp);
    Nat acc(1);
    for (std::uint64_t i = 0; i < exp; ++i) acc = Nat::mul(acc, base);
    return acc;
  }
  if (!text.empty() && (text[0] == 'p' || text[0] == 'a' || text[0] == 'w' ||
                        text[0] == 's'))
    return Nat::from_text(text);
  return Nat::from_decimal(text);
}

std::string env_or(const char* key, const std::string& fallback) {
  const char* v = std::getenv(key);
  return v ? std::string(v) : fallback;
}

void apply_env(CliConfig& cfg) {
  if (const char* v = std::getenv("GOEDEL_FORGE_FUEL"))
    cfg.fuel = parse_nat_arg(v);
  if (const char* v = std::getenv("GOEDEL_FORGE_SAMPLE_WIDTH"))
    cfg.sample_width = std::stoull(v);
  if (const char* v = std::getenv("GOEDEL_FORGE_BOUND"))
    cfg.unprovability_bound = std::stoull(v);
  if (const char* v = std::getenv("GOEDEL_FORGE_TRANSCRIPT"))
    cfg.transcript_path = v;
  if (const char* v = std::getenv("GOEDEL_FORGE_JOBS"))
    cfg.jobs = std::stoul(v);
  if (const char* v = std::getenv("GOEDEL_FORGE_STRUCTURED"))
    cfg.structured = std::string(v) == "1" || std::string(v) == "true";
  if (const char* v = std::getenv("GOEDEL_FORGE_PSI")) cfg.psi = v;
}

json config_json(const CliConfig& cfg) {
  return json{{"fuel", cfg.fuel.to_text()},
              {"sample_width", cfg.sample_width},
              {"bound", cfg.unprovability_bound},
              {"transcript", cfg.transcript_path},
              {"psi", cfg.psi},
              {"jobs", cfg.jobs}};
}

void emit(const CliConfig& cfg, const json& structured_payload,
          const std::string& text) {
  if (cfg.structured) {
    json out = structured_payload;
    out["config"] = config_json(cfg);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

// Inline term text, @<file>, or @<index> (decimal or numeral expression).
TermPtr read_term_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::string rest = arg.substr(1);
    if (!rest.empty() && rest[0] >= '0' && rest[0] <= '9')
      return decode(Nat::from_decimal(rest));
    if (!rest.empty() && (rest[0] == 'p' || rest[0] == 'a' || rest[0] == 'w' ||
                          rest[0] == 's')) {
      try {
        return decode(Nat::from_text(rest));
      } catch (const ParseError&) {
        // fall through to the file route
      }
    }
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open term file: " + rest);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' '))
      text.pop_back();
    return parse_term(text);
  }
  return parse_term(arg);
}

SystemPtr system_at(std::uint64_t level) {
  SystemPtr s = SystemDef::base();
  for (std::uint64_t i = 0; i < level; ++i) s = observe(s);
  return s;
}

int report_outcome(const CliConfig& cfg, const EvalOutcome& out) {
  if (out.halted()) {
    emit(cfg, json{{"outcome", "halted"}, {"value", out.value().to_text()}},
         out.value().to_text());
    return kExitOk;
  }
  emit(cfg,
       json{{"outcome", "out-of-fuel"},
            {"consumed", out.consumed().to_text()}},
       "out of fuel after " + out.consumed().to_text() + " steps");
  return kExitOutOfFuel;
}

std::string timestamp_from_env() {
  return env_or("GOEDEL_FORGE_TIMESTAMP", "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "goedel-forge: a computability workbench for productive sets, the "
      "creative extension loop, and observing-system towers"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  apply_env(cfg);
  std::string fuel_text;
  app.add_option("--fuel", fuel_text,
                 "step budget (decimal or base^exp, default 1000000)");
  app.add_option("--sample-width", cfg.sample_width,
                 "positions checked per audit (default 5)");
  app.add_option("--bound", cfg.unprovability_bound,
                 "proof-code bound for unprovability sweeps (default 20000)");
  app.add_option("--transcript", cfg.transcript_path,
                 "file for creative-run transcripts");
  app.add_flag("--structured", cfg.structured, "JSON output");
  app.add_option("--jobs", cfg.jobs, "parallel audit workers");
  app.add_option("--psi", cfg.psi, "productive set: tot or kbar");

  std::string term_arg, x_arg, i_arg, a_arg, v_arg, bound_arg, file_arg;
  std::uint64_t count = 0, steps = 0, level = 0;
  std::vector<std::string> candidates;

  CLI::App* c_encode = app.add_subcommand("encode", "Godel number of a term");
  c_encode->add_option("term", term_arg)->required();
  CLI::App* c_decode = app.add_subcommand("decode", "term of a Godel number");
  c_decode->add_option("n", i_arg)->required();
  CLI::App* c_eval = app.add_subcommand("eval", "run a program on an input");
  c_eval->add_option("term", term_arg)->required();
  c_eval->add_option("x", x_arg)->required();
  CLI::App* c_enum =
      app.add_subcommand("enumerate", "outputs phi_i(1..count)");
  c_enum->add_option("index", i_arg)->required();
  c_enum->add_option("count", count)->required();
  CLI::App* c_smn = app.add_subcommand("smn", "specialize phi_i(pair(a, x))");
  c_smn->add_option("i", i_arg)->required();
  c_smn->add_option("a", a_arg)->required();
  CLI::App* c_psit = app.add_subcommand("psi-tot", "diagonal witness for Tot");
  c_psit->add_option("i", i_arg)->required();
  CLI::App* c_psik =
      app.add_subcommand("psi-kbar", "range-to-domain witness for K-bar");
  c_psik->add_option("i", i_arg)->required();
  CLI::App* c_ext = app.add_subcommand("extend", "prepend a value to phi_i");
  c_ext->add_option("i", i_arg)->required();
  c_ext->add_option("v", v_arg)->required();
  CLI::App* c_fix = app.add_subcommand("fixpoint", "Kleene fixed point of h");
  c_fix->add_option("h-index", i_arg)->required();
  CLI::App* c_quine =
      app.add_subcommand("quine", "a program that outputs its own index");
  CLI::App* c_find =
      app.add_subcommand("find-index", "canonical index by enumeration");
  c_find->add_option("term", term_arg)->required();
  c_find->add_option("bound", bound_arg)->required();
  CLI::App* c_run = app.add_subcommand("creative-run", "iterate rule 1");
  c_run->add_option("seed", i_arg)->required();
  c_run->add_option("k", steps)->required();
  CLI::App* c_audit = app.add_subcommand("audit", "bounded escape audit");
  c_audit->add_option("candidates", candidates)->required();
  CLI::App* c_gs = app.add_subcommand("godel-sentence",
                                      "diagonal sentence of a tower level");
  c_gs->add_option("level", level)->required();
  CLI::App* c_obs = app.add_subcommand("observe", "construct the next level");
  c_obs->add_option("level", level)->required();
  CLI::App* c_tow = app.add_subcommand("tower", "iterate observe from S0");
  c_tow->add_option("k", steps)->required();
  CLI::App* c_chk = app.add_subcommand("check-proof", "run the proof checker");
  c_chk->add_option("level", level)->required();
  c_chk->add_option("proof-file", file_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!fuel_text.empty()) cfg.fuel = parse_nat_arg(fuel_text);
    Fuel fuel{cfg.fuel};
    PsiKind psi = psi_kind_from_string(cfg.psi);

    if (c_encode->parsed()) {
      CodeIndex i = encode(read_term_argument(term_arg));
      emit(cfg, json{{"index", i.value.to_text()}}, i.value.to_text());
      return kExitOk;
    }
    if (c_decode->parsed()) {
      TermPtr t = decode(parse_nat_arg(i_arg));
      emit(cfg, json{{"term", print_term(t)}}, print_term(t));
      return kExitOk;
    }
    if (c_eval->parsed()) {
      TermPtr t = read_term_argument(term_arg);
      return report_outcome(cfg, eval(t, parse_nat_arg(x_arg), fuel));
    }
    if (c_enum->parsed()) {
      auto outs = run_enumerator(CodeIndex(parse_nat_arg(i_arg)), count, fuel);
      json arr = json::array();
      std::string text;
      bool any_oof = false;
      for (std::size_t p = 0; p < outs.size(); ++p) {
        any_oof = any_oof || !outs[p].halted();
        arr.push_back(outs[p].halted()
                          ? json{{"halted", outs[p].value().to_text()}}
                          : json{{"out_of_fuel", true}});
        text += "phi(" + std::to_string(p + 1) + ") = " +
                (outs[p].halted() ? outs[p].value().to_text()
                                  : "out-of-fuel") +
                "\n";
      }
      emit(cfg, json{{"outputs", arr}}, text);
      return any_oof ? kExitOutOfFuel : kExitOk;
    }
    if (c_smn->parsed()) {
      CodeIndex r =
          smn(CodeIndex(parse_nat_arg(i_arg)), parse_nat_arg(a_arg));
      emit(cfg, json{{"index", r.value.to_text()}}, r.value.to_text());
      return kExitOk;
    }
    if (c_psit->parsed()) {
      CodeIndex r = psi_tot(CodeIndex(parse_nat_arg(i_arg)));
      emit(cfg, json{{"index", r.value.to_text()}}, r.value.to_text());
      return kExitOk;
    }
    if (c_psik->parsed()) {
      CodeIndex r = range_to_domain(CodeIndex(parse_nat_arg(i_arg)));
      emit(cfg, json{{"index", r.value.to_text()}}, r.value.to_text());
      return kExitOk;
    }
    if (c_ext->parsed()) {
      CodeIndex r = extend_enumerator(CodeIndex(parse_nat_arg(i_arg)),
                                      parse_nat_arg(v_arg));
      emit(cfg, json{{"index", r.value.to_text()}}, r.value.to_text());
      return kExitOk;
    }
    if (c_fix->parsed()) {
      CodeIndex r = fixed_point(CodeIndex(parse_nat_arg(i_arg)));
      emit(cfg, json{{"index", r.value.to_text()}}, r.value.to_text());
      return kExitOk;
    }
    if (c_quine->parsed()) {
      CodeIndex e = quine();
      emit(cfg, json{{"index", e.value.to_text()}}, e.value.to_text());
      return kExitOk;
    }
    if (c_find->parsed()) {
      Nat bound = parse_nat_arg(bound_arg);
      if (!bound.fits_u64())
        throw std::invalid_argument("find-index bound must fit in 64 bits");
      auto found = find_index_by_enumeration(read_term_argument(term_arg),
                                             bound.as_u64());
      if (!found) {
        emit(cfg, json{{"found", false}, {"exhausted_bound", bound.as_u64()}},
             "not found below bound " + bound.to_text());
        return kExitOutOfFuel;
      }
      emit(cfg, json{{"found", true}, {"index", found->value.to_text()}},
           found->value.to_text());
      return kExitOk;
    }
    if (c_run->parsed()) {
      Transcript t = creative_run(CodeIndex(parse_nat_arg(i_arg)), steps, psi,
                                  cfg.fuel, cfg.sample_width);
      t.created = t.updated = timestamp_from_env();
      if (!cfg.transcript_path.empty()) {
        std::ofstream out(cfg.transcript_path, std::ios::binary);
        if (!out)
          throw std::invalid_argument("cannot write transcript file: " +
                                      cfg.transcript_path);
        save_transcript(t, out);
      }
      if (cfg.structured) {
        std::cout << transcript_to_string(t);
      } else {
        std::cout << render_transcript_table(t);
      }
      return t.complete ? kExitOk : kExitOutOfFuel;
    }
    if (c_audit->parsed()) {
      std::vector<AuditReport> reports(candidates.size());
      unsigned jobs = std::max(1u, cfg.jobs);
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < candidates.size();
             k = next.fetch_add(1)) {
          reports[k] = escape_audit(CodeIndex(parse_nat_arg(candidates[k])),
                                    psi, cfg.sample_width, cfg.fuel);
        }
      };
      for (unsigned w = 1; w < jobs && w < candidates.size(); ++w)
        pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
      json arr = json::array();
      std::string text;
      int exit_code = kExitOk;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        const AuditReport& r = reports[k];
        arr.push_back(json{{"candidate", candidates[k]},
                           {"verdict", to_string(r.verdict)},
                           {"psi_value", r.psi_value.to_text()},
                           {"detail", r.detail}});
        text += candidates[k] + ": " + to_string(r.verdict) +
                (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
        if (r.verdict == AuditVerdict::RefutedPrecondition)
          exit_code = kExitRefuted;
        else if (r.verdict == AuditVerdict::Inconclusive &&
                 exit_code == kExitOk)
          exit_code = kExitOutOfFuel;
      }
      emit(cfg, json{{"audits", arr}}, text);
      return exit_code;
    }
    if (c_gs->parsed()) {
      SystemPtr base = system_at(level);
      DiagResult d = godel_sentence(base, level + 1);
      bool unprovable = true;
      std::uint64_t sweep = cfg.unprovability_bound;
      for (std::uint64_t b = 0; b <= sweep && unprovable; ++b)
        unprovable = !prf_checker(base, d.p_prime, Nat(b));
      std::string sentence = print_formula(d.sentence);
      emit(cfg,
           json{{"level", level},
                {"atom_tag", d.atom_tag},
                {"p_prime", d.p_prime.to_text()},
                {"sentence", sentence},
                {"unprovable_upto", sweep},
                {"unprovable", unprovable}},
           "p' = " + d.p_prime.to_text() + "\nG = " + sentence +
               "\nno proof code up to " + std::to_string(sweep) +
               (unprovable ? " proves it in S" + std::to_string(level)
                           : " REFUTED"));
      return unprovable ? kExitOk : kExitProofRejected;
    }
    if (c_obs->parsed()) {
      SystemPtr base = system_at(level);
      SystemPtr next = observe(base);
      std::string schema = print_formula(next->admitted_schemas().back());
      emit(cfg,
           json{{"level", next->level()},
                {"admitted_schema", schema},
                {"admitted_count", next->admitted_schemas().size()}},
           "S" + std::to_string(next->level()) + " admits: " + schema);
      return kExitOk;
    }
    if (c_tow->parsed()) {
      auto levels = tower(steps);
      json arr = json::array();
      std::string text;
      for (const TowerLevel& lv : levels) {
        CheckResult r = check_proof(lv.system, lv.conditional);
        arr.push_back(json{{"level", lv.system->level()},
                           {"p_prime", lv.diag.p_prime.to_text()},
                           {"conditional_accepted", r.accepted}});
        text += "S" + std::to_string(lv.system->level()) +
                ": p' = " + lv.diag.p_prime.to_text() +
                ", conditional proof " +
                (r.accepted ? "accepted" : "REJECTED") + "\n";
        if (!r.accepted) {
          emit(cfg, json{{"levels", arr}}, text);
          return kExitProofRejected;
        }
      }
      emit(cfg, json{{"levels", arr}}, text);
      return kExitOk;
    }
    if (c_chk->parsed()) {
      std::ifstream in(file_arg);
      if (!in)
        throw std::invalid_argument("cannot open proof file: " + file_arg);
      std::stringstream ss;
      ss << in.rdbuf();
      Proof p = parse_proof(ss.str());
      CheckResult r = check_proof(system_at(level), p);
      emit(cfg,
           json{{"accepted", r.accepted},
                {"line", r.line},
                {"reason", r.reason}},
           r.accepted ? "accepted"
                      : "rejected at line " + std::to_string(r.line) + ": " +
                            r.reason);
      return r.accepted ? kExitOk : kExitProofRejected;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at byte " << e.offset << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
