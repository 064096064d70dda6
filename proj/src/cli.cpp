#include "qsphere/cli.hpp"

#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "qsphere/diamond.hpp"
#include "qsphere/format.hpp"

namespace qsphere::cli {

namespace {

constexpr int kUsageError = 2;

Word require_word(const Invocation& inv) {
  if (!inv.word) throw ParseError("a word argument is required");
  return parse_word(*inv.word, inv.n);
}

int run_rules(const Invocation& inv, std::ostream& out) {
  const ReductionSystem system(inv.n);
  if (inv.format == OutputFormat::json) {
    out << rules_json(system).dump() << '\n';
    return 0;
  }
  for (const auto& rule : system.rules()) out << rule_text(rule) << '\n';
  return 0;
}

int run_reduce(const Invocation& inv, std::ostream& out) {
  const ReductionSystem system(inv.n);
  const Word word = require_word(inv);
  ReductionOptions options{inv.strategy, inv.max_steps, inv.trace};
  const auto nf = normal_form(NCPolynomial(word), system, options);
  if (inv.format == OutputFormat::json) {
    nlohmann::json j = {{"n", inv.n},
                        {"input", word.to_string()},
                        {"steps", nf.trace.steps},
                        {"normal_form", to_json(nf.polynomial)}};
    if (inv.trace) {
      nlohmann::json steps = nlohmann::json::array();
      for (const auto& s : nf.trace.sequence) {
        steps.push_back({{"word", to_json(s.word)}, {"position", s.position}, {"rule", to_json(s.rule_lhs)}});
      }
      j["trace"] = std::move(steps);
    }
    out << j.dump() << '\n';
    return 0;
  }
  if (inv.trace) {
    std::uint64_t k = 0;
    for (const auto& s : nf.trace.sequence) {
      out << "step " << ++k << ": " << s.word.to_string() << " @" << s.position << " " << s.rule_lhs.to_string()
          << '\n';
    }
  }
  out << nf.polynomial.to_string() << '\n';
  return 0;
}

int run_basis(const Invocation& inv, std::ostream& out) {
  const Word word = require_word(inv);
  const bool basis = is_basis_monomial(word, inv.n);
  if (inv.format == OutputFormat::json) {
    out << nlohmann::json{{"n", inv.n}, {"word", word.to_string()}, {"basis", basis}}.dump() << '\n';
  } else {
    out << (basis ? "basis" : "reducible") << '\n';
  }
  return basis ? 0 : 1;
}

int run_metrics(const Invocation& inv, std::ostream& out) {
  const Word word = require_word(inv);
  const auto m = metrics(word, inv.n);
  if (inv.format == OutputFormat::json) {
    auto j = to_json(m);
    j["n"] = inv.n;
    j["word"] = word.to_string();
    out << j.dump() << '\n';
  } else {
    out << m.to_string() << '\n';
  }
  return 0;
}

std::uint64_t enumerated_count(const ReductionSystem& system) {
  // Sum over middle letters b of (#a with ab a lhs) * (#c with bc a lhs).
  const auto letters = alphabet(system.n());
  std::uint64_t total = 0;
  for (auto b : letters) {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    for (auto g : letters) {
      left += system.rule_for(g, b) != nullptr;
      right += system.rule_for(b, g) != nullptr;
    }
    total += left * right;
  }
  return total;
}

int run_count(const Invocation& inv, std::ostream& out) {
  const ReductionSystem system(inv.n);
  const std::uint64_t formula = ambiguity_count(inv.n);
  const std::uint64_t enumerated = enumerated_count(system);
  if (inv.format == OutputFormat::json) {
    out << nlohmann::json{{"n", inv.n}, {"formula", formula}, {"enumerated", enumerated}}.dump() << '\n';
  } else {
    out << formula << ' ' << enumerated << '\n';
  }
  return formula == enumerated ? 0 : 1;
}

int run_check(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const ReductionSystem system(inv.n);
  CheckOptions options;
  options.jobs = inv.jobs;
  options.reduction = ReductionOptions{inv.strategy, inv.max_steps, false};
  if (inv.progress) {
    options.progress = [&err, last = std::uint64_t{0}](std::uint64_t done, std::uint64_t total) mutable {
      std::uint64_t bucket = done * 20 / total;
      if (bucket != last || done == total) {
        last = bucket;
        err << "checked " << done << '/' << total << '\n';
      }
    };
  }
  const Report report = check_all(system, options);
  if (inv.format == OutputFormat::json) {
    out << report_json(report).dump() << '\n';
  } else {
    out << report_text(report);
  }
  if (report.error) {
    err << "error: " << *report.error << '\n';
    return kUsageError;
  }
  return report.all_resolved() ? 0 : 1;
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    if (inv.n < 1) throw std::invalid_argument("n must be at least 1");
    if (inv.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (inv.max_steps < 1) throw std::invalid_argument("max-steps must be at least 1");
    if (inv.n > ReductionSystem::kMaxN) {
      throw std::invalid_argument("n must be at most " + std::to_string(ReductionSystem::kMaxN));
    }
    switch (inv.command) {
      case Command::rules: return run_rules(inv, out);
      case Command::reduce: return run_reduce(inv, out);
      case Command::basis: return run_basis(inv, out);
      case Command::metrics: return run_metrics(inv, out);
      case Command::count: return run_count(inv, out);
      case Command::check: return run_check(inv, out, err);
    }
  } catch (const StepLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
  }
  return kUsageError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction system and ambiguity checker for the quantum symplectic sphere"};
  app.require_subcommand(1);
  Invocation inv;
  inv.jobs = std::max(1u, std::thread::hardware_concurrency());

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"json", OutputFormat::json}};
  const std::map<std::string, Strategy> strategies{{"leftmost", Strategy::leftmost},
                                                   {"priority", Strategy::priority}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", inv.n, "Number of generator pairs (n >= 1)")->required();
    sub->add_option("--format", inv.format, "Output format: text|json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_word = [&](CLI::App* sub) { sub->add_option("word", inv.word, "Word, e.g. \"y2 y3 x1* x3\"")->required(); };

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"rules", "List every rule of the reduction system", Command::rules},
      {"reduce", "Reduce a word to normal form", Command::reduce},
      {"basis", "Test whether a word is a basis monomial", Command::basis},
      {"metrics", "Print the inversion metrics of a word", Command::metrics},
      {"count", "Print the closed-form and enumerated ambiguity counts", Command::count},
      {"check", "Check resolvability of every ambiguity", Command::check},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->callback([&inv, command = s.command] { inv.command = command; });
    switch (s.command) {
      case Command::reduce:
        add_word(sub);
        sub->add_option("--strategy", inv.strategy, "Redex choice: leftmost|priority")
            ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
        sub->add_option("--max-steps", inv.max_steps, "Rule application limit");
        sub->add_flag("--trace", inv.trace, "Print every rule application");
        break;
      case Command::basis:
      case Command::metrics:
        add_word(sub);
        break;
      case Command::check:
        sub->add_option("--jobs", inv.jobs, "Worker threads");
        sub->add_option("--max-steps", inv.max_steps, "Rule application limit per branch");
        sub->add_option("--strategy", inv.strategy, "Redex choice: leftmost|priority")
            ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
        sub->add_flag("--progress", inv.progress, "Report progress on stderr");
        break;
      case Command::rules:
      case Command::count:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(inv, out, err);
}

}  // namespace qsphere::cli
