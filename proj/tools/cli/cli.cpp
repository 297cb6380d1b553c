#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "reidemeister/error.hpp"
#include "reidemeister/oracle.hpp"

namespace reidemeister::cli {

namespace {

using spectra::AbelianGroupType;
using spectra::Spectrum;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParseError;
    case ErrorCode::NotPrime:
    case ErrorCode::NonPositiveExponent:
    case ErrorCode::InvalidType:
    case ErrorCode::WrongPrime:
      return kInvalidType;
    case ErrorCode::OutOfSpectrum:
      return kOutOfSpectrum;
    case ErrorCode::InvalidEndomorphism:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotAutomorphism:
      return kInvalidMatrix;
    default:
      return kInvalidType;
  }
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// A spectrum value in text output; very long decimals carry their
// factorization along.
std::string spectrum_token(const core::Factored& v) {
  const std::string dec = v.decimal();
  if (dec.size() <= 19) return dec;
  std::string fac = v.factorization();
  fac.erase(std::remove(fac.begin(), fac.end(), ' '), fac.end());
  return dec + "[" + fac + "]";
}

std::string spectrum_line(const Spectrum& s) {
  std::string out;
  for (const auto& v : s.values()) {
    if (!out.empty()) out += ' ';
    out += spectrum_token(v);
  }
  return out;
}

endo::PGroupType single_p_group(const AbelianGroupType& group, const std::string& text) {
  if (group.components().size() != 1) {
    // `p=… e=` with an empty list is still a p-group.
    if (group.components().empty() && text.find("p=") != std::string::npos) return endo::parse_p_group(text);
    throw Error(ErrorCode::InvalidType, "expected a group of prime-power order");
  }
  return group.components().front();
}

// `decompose` accepts e= alone; the prime does not affect the blocks.
endo::PGroupType parse_type_spec(const std::string& text) {
  if (text.find("p=") == std::string::npos) return endo::parse_p_group("p=2 " + text);
  return endo::parse_p_group(text);
}

void print_witness_lines(std::ostream& out, const std::map<std::uint64_t, endo::EndoMatrix>& parts) {
  bool first = true;
  for (const auto& [p, em] : parts) {
    out << (first ? "  " : " | ") << em.group().to_string() << ": " << core::format_matrix(em.matrix());
    first = false;
  }
}

struct Options {
  std::vector<std::string> group;
  bool json = false;
  bool witnesses = false;
  long long m = -1;
  std::string matrix;
  std::vector<std::uint64_t> primes;
  std::string exponents;
  std::optional<std::uint64_t> max_endos;
  std::uint64_t max_order = 0;
  std::string out_path;
};

int cmd_spectrum(const Options& o, bool pi, std::ostream& out) {
  const std::string text = join(o.group);
  const AbelianGroupType group = spectra::parse_group_spec(text);
  std::optional<endo::PGroupType> pgroup;
  Spectrum spectrum;
  if (pi) {
    pgroup = single_p_group(group, text);
    spectrum = spectra::spec_p(*pgroup);
  } else {
    spectrum = spectra::spec_r_abelian(group);
  }

  auto witness_for = [&](const core::Factored& v) {
    if (!pi) return spectra::witness_abelian(group, v);
    std::map<std::uint64_t, endo::EndoMatrix> parts;
    parts.emplace(pgroup->prime(), spectra::witness(*pgroup, v.valuation(pgroup->prime())));
    return parts;
  };

  if (o.json) {
    nlohmann::json doc = spectrum_json(group, spectrum);
    if (pi) doc["kind"] = "product_number";
    if (o.witnesses) {
      for (std::size_t i = 0; i < spectrum.size(); ++i) {
        doc["values"][i]["witness"] = witness_json(witness_for(spectrum.values()[i]));
      }
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (!o.witnesses) {
    out << spectrum_line(spectrum) << "\n";
    return kOk;
  }
  for (const auto& v : spectrum.values()) {
    out << spectrum_token(v);
    print_witness_lines(out, witness_for(v));
    out << "\n";
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const endo::PGroupType type = parse_type_spec(join(o.group));
  const auto dec = decomposition::abc_decompose(type);
  if (o.json) {
    nlohmann::json doc = blocks_json(dec);
    doc["e"] = std::vector<unsigned>(type.exponents().begin(), type.exponents().end());
    doc["sigma"] = type.total_exponent();
    out << doc.dump(2) << "\n";
    return kOk;
  }
  std::string d;
  for (std::size_t i = 0; i < dec.d.size(); ++i) d += (i ? "," : "") + std::to_string(dec.d[i]);
  out << dec.bracketed() << " a=" << dec.a << " b=" << dec.b << " c=" << dec.c << " d=" << d
      << " sigma=" << type.total_exponent() << "\n";
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const endo::PGroupType type = endo::parse_p_group(join(o.group));
  if (o.m < 0) throw Error(ErrorCode::OutOfSpectrum, "target exponent must be nonnegative");
  const endo::EndoMatrix em = spectra::witness(type, static_cast<unsigned>(o.m));
  // Re-derive both numbers from the matrix rather than trusting the builder.
  const endo::EndoMatrix reparsed(type, core::parse_matrix(core::format_matrix(em.matrix())));
  const core::Factored pi = spectra::product_number(reparsed);
  const core::Factored r = endo::reidemeister_number(reparsed);
  if (o.json) {
    out << nlohmann::json{{"group", type.to_string()},
                          {"matrix", core::format_matrix(em.matrix())},
                          {"pi", value_json(pi)},
                          {"r", value_json(r)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << core::format_matrix(em.matrix()) << "\n";
  out << "Pi=" << render_value(pi) << " R=" << render_value(r) << "\n";
  return kOk;
}

int cmd_number(const Options& o, bool pi, std::ostream& out) {
  const endo::PGroupType type = endo::parse_p_group(join(o.group));
  const endo::EndoMatrix em(type, core::parse_matrix(o.matrix));
  const core::Factored value = pi ? spectra::product_number(em) : endo::reidemeister_number(em);
  if (o.json) {
    out << nlohmann::json{{"group", type.to_string()},
                          {"matrix", core::format_matrix(em.matrix())},
                          {pi ? "pi" : "r", value_json(value)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << render_value(value) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  oracle::EnumBudget budget = oracle::EnumBudget::from_environment();
  if (o.max_endos) budget.max_endos = *o.max_endos;
  std::vector<std::uint64_t> primes = o.primes;
  if (primes.empty()) primes = {2, 3, 5};

  std::vector<endo::PGroupType> cells;
  for (std::uint64_t p : primes) {
    if (!o.exponents.empty()) {
      cells.push_back(endo::parse_p_group("p=" + std::to_string(p) + " e=" + o.exponents));
    } else {
      if (!core::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
      const auto types = oracle::types_within_budget(p, budget);
      cells.insert(cells.end(), types.begin(), types.end());
    }
  }

  bool all_passed = true;
  nlohmann::json report = nlohmann::json::array();
  std::size_t passed = 0, skipped = 0;
  for (const auto& cell : cells) {
    const oracle::CellReport r = oracle::verify_cell(cell, budget);
    all_passed = all_passed && r.passed();
    if (r.skipped) {
      ++skipped;
    } else if (r.passed()) {
      ++passed;
    }
    if (o.json) {
      report.push_back({{"group", cell.to_string()},
                        {"skipped", r.skipped},
                        {"automorphisms", r.automorphisms},
                        {"oracle_r", r.oracle_r.to_string()},
                        {"closed_r", r.closed_r.to_string()},
                        {"oracle_pi", r.oracle_pi.to_string()},
                        {"closed_pi", r.closed_pi.to_string()},
                        {"bound_violations", r.bound_violations},
                        {"restriction_failures", r.restriction_failures},
                        {"passed", r.passed()}});
      continue;
    }
    if (r.skipped) {
      out << cell.to_string() << " SKIPPED BudgetExceeded: " << oracle::endomorphism_count(cell).get_str()
          << " endomorphisms > " << budget.max_endos << "\n";
      continue;
    }
    out << cell.to_string() << " automorphisms=" << r.automorphisms << " R={" << r.oracle_r.to_string()
        << "} closed_R={" << r.closed_r.to_string() << "} Pi={" << r.oracle_pi.to_string() << "} closed_Pi={"
        << r.closed_pi.to_string() << "} bounds=" << (r.bounds_ok() ? "ok" : "FAIL")
        << " restriction=" << (r.restriction_failures == 0 ? "ok" : "FAIL") << " "
        << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  if (o.json) {
    out << nlohmann::json{{"cells", report}, {"passed", all_passed}}.dump(2) << "\n";
  } else {
    out << "cells=" << cells.size() << " passed=" << passed << " skipped=" << skipped
        << (all_passed ? " OK" : " MISMATCH") << "\n";
  }
  return all_passed ? kOk : kMismatch;
}

int cmd_atlas(const Options& o, std::ostream& out) {
  if (o.max_order < 1) throw Error(ErrorCode::OutOfRange, "--max-order must be at least 1");
  const std::string doc = render_atlas(o.max_order, o.witnesses);
  if (o.out_path.empty()) {
    out << doc;
    return kOk;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) return kUnwritable;
  file << doc;
  file.flush();
  if (!file) return kUnwritable;
  if (o.json) {
    out << nlohmann::json{{"path", o.out_path}, {"entries", groups_up_to(o.max_order).size()}}.dump() << "\n";
  } else {
    out << "wrote " << o.out_path << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reidemeister numbers and spectra of finite abelian groups", "reidemeister-cli"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub, const char* what) {
    sub->add_option("group", o.group, what)->required()->expected(1, -1);
    sub->add_flag("--json", o.json, "Emit JSON");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Reidemeister spectrum of an abelian group");
  add_group(spectrum, "Cyclic orders `4,8,3` or `p=2 e=2,3`");
  spectrum->add_flag("--witnesses", o.witnesses, "Attach a witness automorphism to each value");

  auto* pi_spectrum = app.add_subcommand("pi-spectrum", "Spectrum of the product number on a p-group");
  add_group(pi_spectrum, "`p=3 e=1,1`");
  pi_spectrum->add_flag("--witnesses", o.witnesses, "Attach a witness automorphism to each value");

  auto* decompose = app.add_subcommand("decompose", "abc-decomposition and depth sequence of a type");
  add_group(decompose, "`e=1,1,2,3` (p= optional)");

  auto* witness = app.add_subcommand("witness", "Automorphism with product number p^m");
  add_group(witness, "`p=2 e=2,3`");
  witness->add_option("-m", o.m, "Target exponent")->required();

  auto* reidemeister = app.add_subcommand("reidemeister", "Reidemeister number of an endomorphism");
  add_group(reidemeister, "`p=2 e=3`");
  reidemeister->add_option("--matrix", o.matrix, "Rows split by `;`, entries by `,`")->required();

  auto* pi = app.add_subcommand("pi", "Product number of an automorphism");
  add_group(pi, "`p=3 e=1,1`");
  pi->add_option("--matrix", o.matrix, "Rows split by `;`, entries by `,`")->required();

  auto* verify = app.add_subcommand("verify", "Compare closed forms against exhaustive enumeration");
  verify->add_option("-p", o.primes, "Prime(s) to sweep (default 2,3,5)");
  verify->add_option("-e", o.exponents, "Single exponent list instead of the full sweep");
  verify->add_option("--max-endos", o.max_endos, "Cap on endomorphisms per cell");
  verify->add_flag("--json", o.json, "Emit JSON");

  auto* atlas = app.add_subcommand("atlas", "Write spectra of all abelian groups up to an order");
  atlas->add_option("--max-order", o.max_order, "Largest group order")->required();
  atlas->add_option("--out", o.out_path, "Output path (stdout if omitted)");
  atlas->add_flag("--witnesses", o.witnesses, "Include witnesses for every value");
  atlas->add_flag("--json", o.json, "Emit a JSON status line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, false, out);
    if (pi_spectrum->parsed()) return cmd_spectrum(o, true, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (reidemeister->parsed()) return cmd_number(o, false, out);
    if (pi->parsed()) return cmd_number(o, true, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (atlas->parsed()) return cmd_atlas(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace reidemeister::cli
