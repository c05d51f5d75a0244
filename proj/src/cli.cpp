#include "ffzeta/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "ffzeta/report_json.hpp"
#include "ffzeta/sweep.hpp"

namespace ffzeta::cli {

namespace {

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t l = 1;
  std::vector<std::uint32_t> modulus;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic")->required();
    cmd->add_option("--l", l, "extension degree")->capture_default_str();
    cmd->add_option("--modulus", modulus, "modulus digits, lowest first (l+1 values)")->delimiter(',');
  }

  FieldPtr make() const {
    return Field::make(p, l, modulus.empty() ? std::nullopt : std::optional(modulus));
  }
};

std::string field_header(const Field& f) {
  std::string s = "F_" + std::to_string(f.q()) + " (p=" + std::to_string(f.p()) + ", l=" + std::to_string(f.l());
  if (!f.is_prime_field()) s += ", modulus " + f.format_modulus();
  return s + ")";
}

int cmd_powersum(const FieldArgs& fa, std::int64_t d, const std::vector<std::int64_t>& ss, std::uint64_t enum_cap,
                 bool as_json, std::ostream& out) {
  MemoCache cache(fa.make(), enum_cap);
  const RationalFunction v = multi_power_sum(cache, d, ss);
  if (as_json) {
    out << nlohmann::json{{"d", d}, {"s", ss}, {"value", to_json(v)}}.dump() << '\n';
  } else {
    out << format(v) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const FieldArgs& fa, const std::string& id, std::int64_t n, std::int64_t d,
               std::optional<std::int64_t> shift, bool expect_fail, bool as_json, std::ostream& out,
               std::ostream& err) {
  const auto tag = parse_identity_tag(id);
  if (!tag) {
    err << "unknown identity '" << id << "'\n";
    return kExitUsage;
  }
  if (expect_fail && !is_conjecture(*tag)) {
    err << "--expect-fail only applies to conj_* identities\n";
    return kExitUsage;
  }
  const FieldPtr field = fa.make();
  const IdentityInstance inst{*tag, field->prime_power(), n, d, shift};
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  MemoCache cache(field);
  const VerificationReport rep = verify(cache, inst);
  if (as_json) {
    out << to_json(rep).dump() << '\n';
  } else {
    const auto [a, b] = delta_args(inst.id, inst.q, n, shift);
    const bool corollary = is_corollary(inst.id);
    out << "identity " << id << " over " << field_header(*field) << ", n=" << n << (corollary ? ", D=" : ", d=") << d;
    if (shift) out << ", shift=" << *shift;
    out << '\n';
    if (corollary) {
      out << "  zeta(" << a << ") zeta(" << b << ") truncated at degree " << d << '\n';
    } else {
      out << "  Delta_" << d << '(' << a << ',' << b << ") = "
          << format(rhs_of(inst.id, inst.q, n, shift), std::to_string(d)) << '\n';
    }
    out << "  verdict: " << (rep.holds ? "holds" : "fails") << '\n';
    if (!rep.holds) out << "  difference: " << format(rep.difference) << '\n';
  }
  const bool ok = expect_fail ? !rep.holds : rep.holds;
  return ok ? kExitOk : kExitSurprise;
}

int cmd_counterexample(const std::string& which, bool as_json, std::ostream& out, std::ostream& err) {
  const auto id = parse_counterexample(which);
  if (!id) {
    err << "unknown counter-example '" << which << "' (expected lae or vi)\n";
    return kExitUsage;
  }
  const CounterexampleReport rep = counterexample_report(*id);
  if (as_json) {
    out << to_json(rep).dump() << '\n';
  } else {
    out << "counter-example " << which << " over F_" << rep.q.q << '\n';
    for (const auto& f : rep.facts) {
      out << "  [" << (f.matches ? "ok" : "MISMATCH") << "] " << f.name << ": " << f.observed;
      if (!f.matches) out << " (expected " << f.expected << ")";
      out << '\n';
    }
  }
  return rep.all_match() ? kExitOk : kExitSurprise;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override, std::ostream& out,
              std::ostream& err) {
  SweepConfig config;
  try {
    config = SweepConfig::load(config_path);
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (!out_override.empty()) config.out = out_override;
  const SweepResult result = run_sweep(config);
  const std::string doc = result.document().dump(2);
  if (config.out.empty()) {
    out << doc << '\n';
  } else {
    std::ofstream file(config.out);
    if (!file) {
      err << "cannot write '" << config.out << "'\n";
      return kExitUsage;
    }
    file << doc << '\n';
    const auto& s = result.summary;
    out << "total " << s.total << ", held " << s.held << ", failed " << s.failed << ", expected failures "
        << s.expected_failures << " -> " << config.out << '\n';
  }
  return result.summary.failed == 0 ? kExitOk : kExitSurprise;
}

int cmd_chen(const FieldArgs& fa, std::int64_t r, std::int64_t s, std::optional<std::int64_t> d, bool as_json,
             std::ostream& out) {
  const FieldPtr field = fa.make();
  if (!d) {
    const TermList tl = chen_terms(field->prime_power(), r, s);
    if (as_json) {
      out << to_json(tl).dump() << '\n';
    } else {
      out << "Delta_d(" << r << ',' << s << ") = " << format(tl) << '\n';
    }
    return kExitOk;
  }
  MemoCache cache(field);
  const ChenReport rep = verify_chen(cache, r, s, *d);
  if (as_json) {
    out << to_json(rep).dump() << '\n';
  } else {
    out << "Delta_" << *d << '(' << r << ',' << s << ") = " << format(rep.terms, std::to_string(*d)) << '\n';
    out << "  verdict: " << (rep.holds ? "holds" : "fails") << '\n';
    if (!rep.holds) out << "  difference: " << format(rep.difference) << '\n';
  }
  return rep.holds ? kExitOk : kExitSurprise;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power sums and double zeta identities over F_q(t)", "ffzeta"};
  app.require_subcommand(1);

  FieldArgs fa;
  bool as_json = false;

  auto* ps = app.add_subcommand("powersum", "print S_d(s1,...,sn)");
  fa.attach(ps);
  std::int64_t d = 0;
  std::vector<std::int64_t> ss;
  std::uint64_t enum_cap = kDefaultEnumCap;
  ps->add_option("--d", d, "degree")->required();
  ps->add_option("--s", ss, "exponents")->required()->delimiter(',');
  ps->add_option("--enum-cap", enum_cap, "maximum q^d")->capture_default_str();
  ps->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "verify one identity instance");
  FieldArgs fv;
  fv.attach(ver);
  std::string id;
  std::int64_t n = 1, vd = 0;
  std::optional<std::int64_t> shift;
  bool expect_fail = false;
  ver->add_option("--id", id, "identity tag")->required();
  ver->add_option("--n", n, "n")->required();
  ver->add_option("--d", vd, "degree d (truncation degree D for corollaries)")->required();
  ver->add_option("--shift", shift, "shift for thm4, conj_v_original, corollary4");
  ver->add_flag("--expect-fail", expect_fail, "exit 0 when a conj_* identity fails");
  ver->add_flag("--json", as_json);

  auto* ce = app.add_subcommand("counterexample", "reproduce a counter-example");
  std::string which;
  ce->add_option("--which", which, "lae or vi")->required();
  ce->add_flag("--json", as_json);

  auto* sw = app.add_subcommand("sweep", "verify every instance of a config");
  std::string config_path, out_path;
  sw->add_option("config", config_path, "JSON config file")->required();
  sw->add_option("--out", out_path, "override the config's output path");

  auto* ch = app.add_subcommand("chen", "print (and optionally verify) Chen's formula");
  FieldArgs fc;
  fc.attach(ch);
  std::int64_t r = 0, s = 0;
  std::optional<std::int64_t> cd;
  ch->add_option("--r", r, "r")->required();
  ch->add_option("--s", s, "s")->required();
  ch->add_option("--d", cd, "verify against Delta_d");
  ch->add_flag("--json", as_json);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*ps) return cmd_powersum(fa, d, ss, enum_cap, as_json, out);
    if (*ver) return cmd_verify(fv, id, n, vd, shift, expect_fail, as_json, out, err);
    if (*ce) return cmd_counterexample(which, as_json, out, err);
    if (*sw) return cmd_sweep(config_path, out_path, out, err);
    if (*ch) {
      if (r < 1 || s < 1) {
        err << "r and s must be at least 1\n";
        return kExitUsage;
      }
      return cmd_chen(fc, r, s, cd, as_json, out);
    }
  } catch (const FieldError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationCapError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ffzeta::cli
