// Copyright 2026 The artin-parabolic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "artin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "artin/artin_word.hpp"
#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/oracle.hpp"
#include "artin/parabolic.hpp"
#include "artin/presentation.hpp"
#include "artin/retraction.hpp"
#include "artin/verify.hpp"

namespace artin::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string presentation_path;
  std::uint64_t seed = 0;
  std::size_t cap = CoxeterKernel::kDefaultClosureCap;
  std::string format = "human";
};

// Lazily built state shared by the subcommands.
class Session {
 public:
  Session(const Config& config, std::ostream& out)
      : config_(config), out_(out) {}

  bool json() const { return config_.format == "json"; }
  std::ostream& out() { return out_; }
  std::uint64_t seed() const { return config_.seed; }

  const Presentation& presentation() {
    if (!presentation_) {
      if (config_.presentation_path.empty()) {
        throw UsageError("this command needs --presentation");
      }
      std::ifstream in(config_.presentation_path);
      if (!in) {
        throw Error("IoError",
                    "cannot read '" + config_.presentation_path + "'");
      }
      std::ostringstream text;
      text << in.rdbuf();
      presentation_ = load_presentation(text.str());
    }
    return *presentation_;
  }

  const CoxeterKernel& kernel() {
    if (!kernel_) {
      kernel_ = std::make_unique<CoxeterKernel>(presentation(), config_.cap);
    }
    return *kernel_;
  }

  std::string fmt(const CoxeterElement& u) {
    return format_coxeter_word(presentation(), u.word());
  }
  std::string fmt(const ArtinWord& w) {
    return format_artin_word(presentation(), w);
  }
  std::string fmt(const GeneratorSubset& s) {
    return presentation().format_subset(s);
  }
  Json names(const GeneratorSubset& s) {
    Json arr = Json::array();
    for (Generator g : s) arr.push_back(presentation().name(g));
    return arr;
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

 private:
  const Config& config_;
  std::ostream& out_;
  std::optional<Presentation> presentation_;
  std::unique_ptr<CoxeterKernel> kernel_;
};

Json trace_json(Session& s, const Retraction& r) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
    const TraceStep& st = r.trace.steps[i];
    const bool in_sx = st.emitted.has_value();
    Json j;
    j["i"] = i + 1;
    j["letter"] = s.fmt(ArtinWord{st.letter});
    j["prefix"] = s.fmt(st.prefix);
    j["v"] = s.fmt(st.vpart);
    j["w"] = s.fmt(st.wpart);
    j["t"] = s.fmt(st.reflection);
    j["t_in_SX"] = in_sx;
    j["tau"] = in_sx ? Json(s.fmt(ArtinWord{*st.emitted})) : Json(nullptr);
    steps.push_back(std::move(j));
  }
  return steps;
}

Json transport_json(Session& s, const TransportResult& t) {
  Json f = Json::object();
  for (const auto& [from, to] : t.f) {
    f[s.presentation().name(from)] = s.presentation().name(to);
  }
  Json j;
  j["Yprime"] = s.names(t.y_prime);
  j["f"] = std::move(f);
  j["u1"] = s.fmt(t.decomposition.u1);
  j["w0"] = s.fmt(t.decomposition.w0);
  j["u2"] = s.fmt(t.decomposition.u2);
  j["alpha"] = s.fmt(t.alpha);
  return j;
}

Json check_json(const CheckOutcome& c) {
  Json j;
  j["status"] = std::string(to_string(c.status));
  j["detail"] = c.detail;
  return j;
}

Json suite_json(const SuiteReport& r) {
  Json sections = Json::array();
  for (const SectionResult& sec : r.sections) {
    Json j;
    j["label"] = sec.label;
    j["passed"] = sec.passed;
    j["failed"] = sec.failed;
    j["undecided"] = sec.undecided;
    j["failures"] = sec.failures;
    sections.push_back(std::move(j));
  }
  Json j;
  j["suite"] = r.name;
  j["ok"] = r.ok();
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["sections"] = std::move(sections);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Coxeter and Artin group toolkit: word problems, parabolic "
               "decompositions, retractions onto parabolic subgroups"};
  app.name("artin");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Config config;
  app.add_option("-p,--presentation", config.presentation_path,
                 "Presentation file (text or JSON)");
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--cap", config.cap, "Braid-closure cap per element")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  std::function<void(Session&)> action;
  std::string word, x_set, y_set;

  auto coxeter_cmd = [&](const char* name, const char* help,
                         std::function<void(Session&, const CoxeterElement&)>
                             body) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("word", word, "Coxeter word")->required();
    cmd->callback([&, body] {
      action = [&, body](Session& s) {
        body(s, s.kernel().reduce(parse_coxeter_word(s.presentation(), word)));
      };
    });
    return cmd;
  };

  coxeter_cmd("reduce", "Canonical (ShortLex-least reduced) form",
              [](Session& s, const CoxeterElement& u) {
                if (s.json()) {
                  s.emit(Json{{"word", s.fmt(u)}, {"length", u.length()}});
                } else {
                  s.out() << s.fmt(u) << '\n';
                }
              });
  coxeter_cmd("length", "Coxeter length",
              [](Session& s, const CoxeterElement& u) {
                if (s.json()) {
                  s.emit(Json{{"length", u.length()}});
                } else {
                  s.out() << u.length() << '\n';
                }
              });
  coxeter_cmd("descents", "Left and right descent sets",
              [](Session& s, const CoxeterElement& u) {
                const GeneratorSubset l = s.kernel().left_descents(u);
                const GeneratorSubset r = s.kernel().right_descents(u);
                if (s.json()) {
                  s.emit(Json{{"left", s.names(l)}, {"right", s.names(r)}});
                } else {
                  s.out() << "left: " << s.fmt(l) << "\nright: " << s.fmt(r)
                          << '\n';
                }
              });
  coxeter_cmd("iota", "Positive Artin lift of a Coxeter element",
              [](Session& s, const CoxeterElement& u) {
                if (s.json()) {
                  s.emit(Json{{"word", s.fmt(iota(u))}});
                } else {
                  s.out() << s.fmt(iota(u)) << '\n';
                }
              });

  std::size_t enum_cap = 1000;
  {
    CLI::App* cmd = app.add_subcommand("enumerate", "List W in ShortLex order");
    cmd->add_option("--cap", enum_cap, "Maximum number of elements")
        ->capture_default_str();
    cmd->callback([&] {
      action = [&](Session& s) {
        const Enumeration e = s.kernel().enumerate(enum_cap);
        if (s.json()) {
          Json elems = Json::array();
          for (const auto& u : e.elements) elems.push_back(s.fmt(u));
          s.emit(Json{{"finite", e.finite},
                      {"count", e.elements.size()},
                      {"elements", std::move(elems)}});
        } else {
          for (const auto& u : e.elements) {
            s.out() << u.length() << '\t' << s.fmt(u) << '\n';
          }
          s.out() << (e.finite ? "# order " : "# truncated at ")
                  << e.elements.size() << '\n';
        }
      };
    });
  }

  {
    CLI::App* cmd = coxeter_cmd(
        "decompose", "u = v w with v in W_X and w (X,{})-minimal",
        [&](Session& s, const CoxeterElement& u) {
          const GeneratorSubset x = s.presentation().parse_subset(x_set);
          const CosetDecomposition d = decompose_left(s.kernel(), x, u);
          if (s.json()) {
            s.emit(Json{{"v", s.fmt(d.v)}, {"w", s.fmt(d.w)}});
          } else {
            s.out() << "v: " << s.fmt(d.v) << "\nw: " << s.fmt(d.w) << '\n';
          }
        });
    cmd->add_option("--x", x_set, "Generator set, comma separated")
        ->required();
  }
  {
    CLI::App* cmd = coxeter_cmd(
        "double-coset", "u = u1 w0 u2 with w0 (X,Y)-minimal",
        [&](Session& s, const CoxeterElement& u) {
          const GeneratorSubset x = s.presentation().parse_subset(x_set);
          const GeneratorSubset y = s.presentation().parse_subset(y_set);
          const DoubleCosetDecomposition d =
              double_coset_decompose(s.kernel(), x, y, u);
          if (s.json()) {
            s.emit(Json{{"u1", s.fmt(d.u1)},
                        {"w0", s.fmt(d.w0)},
                        {"u2", s.fmt(d.u2)}});
          } else {
            s.out() << "u1: " << s.fmt(d.u1) << "\nw0: " << s.fmt(d.w0)
                    << "\nu2: " << s.fmt(d.u2) << '\n';
          }
        });
    cmd->add_option("--x", x_set, "Generator set, comma separated")
        ->required();
    cmd->add_option("--y", y_set, "Generator set, comma separated")
        ->required();
  }
  {
    CLI::App* cmd = coxeter_cmd(
        "transport", "Conjugate A_Y into A_X by iota(w)",
        [&](Session& s, const CoxeterElement& w) {
          const GeneratorSubset x = s.presentation().parse_subset(x_set);
          const GeneratorSubset y = s.presentation().parse_subset(y_set);
          const TransportResult t = transport(s.kernel(), x, y, w);
          if (s.json()) {
            s.emit(transport_json(s, t));
          } else {
            s.out() << "Yprime: " << s.fmt(t.y_prime) << '\n';
            for (const auto& [from, to] : t.f) {
              s.out() << "f(" << s.presentation().name(from)
                      << ") = " << s.presentation().name(to) << '\n';
            }
            s.out() << "w0: " << s.fmt(t.decomposition.w0)
                    << "\nalpha: " << s.fmt(t.alpha) << '\n';
          }
        });
    cmd->add_option("--x", x_set, "Generator set, comma separated")
        ->required();
    cmd->add_option("--y", y_set, "Generator set, comma separated")
        ->required();
  }

  {
    CLI::App* cmd = app.add_subcommand("theta", "Image of an Artin word in W");
    cmd->add_option("word", word, "Artin word")->required();
    cmd->callback([&] {
      action = [&](Session& s) {
        const CoxeterElement u =
            theta(s.kernel(), parse_artin_word(s.presentation(), word));
        if (s.json()) {
          s.emit(Json{{"word", s.fmt(u)}, {"length", u.length()}});
        } else {
          s.out() << s.fmt(u) << '\n';
        }
      };
    });
  }

  bool show_trace = false;
  {
    CLI::App* cmd =
        app.add_subcommand("retract", "Retraction of an Artin word onto A_X");
    cmd->add_option("--x", x_set, "Generator set, comma separated")
        ->required();
    cmd->add_flag("--trace", show_trace, "Include the per-letter trace");
    cmd->add_option("word", word, "Artin word")->required();
    cmd->callback([&] {
      action = [&](Session& s) {
        const GeneratorSubset x = s.presentation().parse_subset(x_set);
        const Retraction r =
            pi_hat(s.kernel(), x, parse_artin_word(s.presentation(), word));
        if (s.json()) {
          Json j;
          j["word"] = s.fmt(r.word);
          if (show_trace) j["trace"] = trace_json(s, r);
          s.emit(j);
          return;
        }
        s.out() << s.fmt(r.word) << '\n';
        if (!show_trace) return;
        for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
          const TraceStep& st = r.trace.steps[i];
          s.out() << i + 1 << ": " << s.fmt(ArtinWord{st.letter})
                  << "  u=" << s.fmt(st.prefix) << "  v=" << s.fmt(st.vpart)
                  << "  w=" << s.fmt(st.wpart)
                  << "  t=" << s.fmt(st.reflection) << "  tau="
                  << (st.emitted ? s.fmt(ArtinWord{*st.emitted}) : "-")
                  << '\n';
        }
      };
    });
  }

  bool run_checks = false;
  {
    CLI::App* cmd = app.add_subcommand(
        "theorem", "Find Y' and gamma with alpha A_Y alpha^-1 = gamma A_Y' "
                   "gamma^-1");
    cmd->add_option("--x", x_set, "Generator set, comma separated")
        ->required();
    cmd->add_option("--y", y_set, "Generator set, comma separated")
        ->required();
    cmd->add_flag("--verify", run_checks, "Check the result");
    cmd->add_option("word", word, "Artin word alpha")->required();
    cmd->callback([&] {
      action = [&](Session& s) {
        const GeneratorSubset x = s.presentation().parse_subset(x_set);
        const GeneratorSubset y = s.presentation().parse_subset(y_set);
        const ArtinWord alpha = parse_artin_word(s.presentation(), word);
        const ConjugationResult r =
            conjugate_into_parabolic(s.kernel(), x, y, alpha);
        std::optional<ConjugationReport> rep;
        if (run_checks) rep = verify_conjugation(s.kernel(), x, y, alpha, r);
        if (s.json()) {
          Json audit;
          audit["w"] = s.fmt(r.audit.w);
          audit["w0"] = s.fmt(r.audit.transport.decomposition.w0);
          audit["beta1"] = s.fmt(r.audit.beta1);
          audit["beta2"] = s.fmt(r.audit.beta2);
          audit["pi_of_beta1"] = s.fmt(r.audit.pi_of_beta1.word);
          audit["checked_precondition"] = r.audit.checked_precondition;
          audit["trusted_precondition"] = r.audit.trusted_precondition;
          audit["trace"] = trace_json(s, r.audit.pi_of_beta1);
          Json j;
          j["Yprime"] = s.names(r.y_prime);
          j["gamma"] = s.fmt(r.gamma);
          j["audit"] = std::move(audit);
          if (rep) {
            j["verification"] = Json{{"support", check_json(rep->support)},
                                     {"coxeter_level",
                                      check_json(rep->coxeter_level)},
                                     {"artin_level",
                                      check_json(rep->artin_level)}};
          }
          s.emit(j);
        } else {
          s.out() << "Yprime: " << s.fmt(r.y_prime)
                  << "\ngamma: " << s.fmt(r.gamma) << '\n';
          if (rep) {
            s.out() << "support: " << to_string(rep->support.status)
                    << "\ncoxeter_level: "
                    << to_string(rep->coxeter_level.status)
                    << "\nartin_level: " << to_string(rep->artin_level.status)
                    << '\n';
          }
        }
        if (rep && rep->any_failed()) {
          throw Error("VerificationFailed", "the result did not verify");
        }
      };
    });
  }

  InstanceParams params;
  {
    CLI::App* cmd = app.add_subcommand(
        "generate", "Random instance alpha with alpha A_Y alpha^-1 in A_X");
    cmd->add_option("--x-size", params.x_size)->capture_default_str();
    cmd->add_option("--y-size", params.y_size)->capture_default_str();
    cmd->add_option("--pad", params.pad_len)->capture_default_str();
    cmd->add_option("--w-search-len", params.w_search_len)
        ->capture_default_str();
    cmd->callback([&] {
      action = [&](Session& s) {
        const Instance inst = generate_instance(s.kernel(), s.seed(), params);
        if (s.json()) {
          s.emit(Json{{"X", s.names(inst.x)},
                      {"Y", s.names(inst.y)},
                      {"w", s.fmt(inst.w)},
                      {"alpha", s.fmt(inst.alpha)}});
        } else {
          s.out() << "X: " << s.fmt(inst.x) << "\nY: " << s.fmt(inst.y)
                  << "\nw: " << s.fmt(inst.w) << "\nalpha: "
                  << s.fmt(inst.alpha) << '\n';
        }
      };
    });
  }

  std::string other;
  {
    CLI::App* cmd =
        app.add_subcommand("equals", "Decide equality of two Artin words");
    cmd->add_option("a", word, "Artin word")->required();
    cmd->add_option("b", other, "Artin word")->required();
    cmd->callback([&] {
      action = [&](Session& s) {
        const EqualityVerdict v =
            equals_oracle(s.kernel(), parse_artin_word(s.presentation(), word),
                          parse_artin_word(s.presentation(), other));
        if (s.json()) {
          s.emit(Json{{"verdict", std::string(to_string(v.verdict))},
                      {"witness", v.witness}});
        } else {
          s.out() << to_string(v.verdict) << '\n';
        }
      };
    });
  }

  std::string suite = "all";
  {
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    CLI::App* cmd =
        app.add_subcommand("verify", "Run a built-in verification suite");
    cmd->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    cmd->callback([&] {
      action = [&](Session& s) {
        std::vector<std::string> names;
        if (suite == "all") {
          names = suite_names();
        } else {
          names.push_back(suite);
        }
        bool ok = true;
        Json reports = Json::array();
        for (const std::string& name : names) {
          const SuiteReport r = run_suite(name, SuiteOptions{s.seed()});
          ok = ok && r.ok();
          if (s.json()) {
            reports.push_back(suite_json(r));
          } else {
            s.out() << format_report(r);
          }
        }
        if (s.json()) s.emit(Json{{"ok", ok}, {"suites", std::move(reports)}});
        if (!ok) throw Error("VerificationFailed", "suite reported failures");
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'artin --help' for usage\n";
    return kExitUsage;
  }

  Session session(config, out);
  try {
    action(session);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace artin::cli
