// plcirc: command-line surface over the exact circle-map library.
//
// Exit status: 0 success, 1 verification/search failure, 2 usage error.
// Every run is fully determined by its arguments (seeds included), and
// identical invocations produce byte-identical reports.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "plcircle/constructions.hpp"
#include "plcircle/spectral.hpp"
#include "plcircle/witness_io.hpp"
#include "plcircle/word.hpp"

using namespace plc;

namespace {

struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& what)
      : std::runtime_error(what) {}
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

// A multiset argument: a builtin set name or a comma-separated list of
// element words / plmap literals.
ElementMultiset parse_set(const std::string& s) {
  HaagerupOlesenSets sets = haagerup_olesen_multisets();
  if (s == "E") return sets.e_set;
  if (s == "H1") return sets.h1;
  if (s == "H2") return sets.h2;
  ElementMultiset out;
  for (const std::string& item : split_list(s)) out.add(parse_element(item));
  if (out.empty()) throw std::invalid_argument("empty element list");
  return out;
}

std::vector<PLCircleMap> parse_element_list(const std::string& s) {
  std::vector<PLCircleMap> out;
  for (const std::string& item : split_list(s))
    out.push_back(parse_element(item));
  return out;
}

// Weighted terms "c1*word1,c2*word2,...".
WeightedElement parse_weighted(const std::string& s) {
  std::vector<std::pair<Rational, PLCircleMap>> terms;
  for (const std::string& item : split_list(s)) {
    size_t star = item.find('*');
    if (star == std::string::npos)
      throw std::invalid_argument("weighted term must look like coef*element");
    terms.emplace_back(parse_rational(item.substr(0, star)),
                       parse_element(item.substr(star + 1)));
  }
  return WeightedElement::normalized(terms);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Deterministic cross-platform choice in [0, n).
long pick(std::mt19937_64& rng, long n) {
  return static_cast<long>(rng() % static_cast<uint64_t>(n));
}

PLCircleMap random_builtin_word(std::mt19937_64& rng, long max_len) {
  static const char* names[] = {"x0", "x1", "x2", "r", "g1", "g2"};
  PLCircleMap acc;
  long len = 1 + pick(rng, max_len);
  for (long i = 0; i < len; ++i) {
    PLCircleMap g = builtin_bindings().at(names[pick(rng, 6)]);
    if (pick(rng, 2)) g = inverse(g);
    acc = compose(acc, g);
  }
  return acc;
}

void print_witness_summary(const Witness& w) {
  if (w.kind == WitnessKind::pingpong) {
    std::cout << "k: " << w.k << "\n";
    std::cout << "table a: " << w.cert.a_side.table.to_string() << "\n";
    std::cout << "table b: " << w.cert.b_side.table.to_string() << "\n";
    return;
  }
  std::cout << "g: " << w.g.to_string() << "\n";
  std::cout << (w.kind == WitnessKind::fixedpoint ? "theta: " : "z: ")
            << w.theta << "\n";
  std::cout << "conjugators: " << w.conjugators.size() << "\n";
  for (size_t i = 0; i < w.per_h.size(); ++i)
    std::cout << "element " << i + 1
              << ": rho=" << w.per_h[i].second.rho_h << "\n";
}

int cmd_verify_file(const std::string& path) {
  Witness w = parse_witness(read_file(path));
  VerifyResult r = verify_witness(w);
  if (!r.ok) {
    std::cout << "FAILED: " << r.reason << "\n";
    return 1;
  }
  std::cout << "VERIFIED\n";
  return 0;
}

std::string bracket_str(const std::pair<Rational, Rational>& b) {
  return "[" + to_string(b.first) + "," + to_string(b.second) + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact piecewise-linear circle maps: Thompson groups, "
               "freeness certificates, constructions, obstructions"};
  app.require_subcommand(1);

  // eval
  std::string w_word, w_point, w_other, w_file;
  auto* c_eval = app.add_subcommand("eval", "apply an element to a point");
  c_eval->add_option("word", w_word)->required();
  c_eval->add_option("point", w_point)->required();

  auto* c_compose =
      app.add_subcommand("compose", "canonical form of a word product");
  c_compose->add_option("word", w_word)->required();

  long q_max = 64;
  auto* c_rotnum = app.add_subcommand("rotnum", "rotation number");
  c_rotnum->add_option("word", w_word)->required();
  c_rotnum->add_option("--q-max", q_max);

  auto* c_fix = app.add_subcommand("fix", "fixed set");
  c_fix->add_option("word", w_word)->required();

  auto* c_supp = app.add_subcommand("supp", "support");
  c_supp->add_option("word", w_word)->required();

  auto* c_commutes = app.add_subcommand("commutes", "do two elements commute");
  c_commutes->add_option("word", w_word)->required();
  c_commutes->add_option("other", w_other)->required();

  std::string emit_path;
  SearchLimits limits;
  auto* c_pp = app.add_subcommand(
      "pingpong-search", "find k and a certificate that <a, b^k> is free");
  c_pp->add_option("a", w_word)->required();
  c_pp->add_option("b", w_other)->required();
  c_pp->add_option("--q-max", limits.q_max);
  c_pp->add_option("--power-bound", limits.power_bound);
  c_pp->add_option("--halving-bound", limits.halving_bound);
  c_pp->add_option("--emit-witness", emit_path);

  auto* c_verify =
      app.add_subcommand("verify-cert", "re-verify a stored witness file");
  c_verify->add_option("file", w_file)->required();

  std::string set_arg, point_arg = "7/8";
  long n_arg = 3;
  auto* c_cfp = app.add_subcommand(
      "construct-fixedpoint",
      "rank-n free conjugate families around a common fixed point");
  c_cfp->add_option("--set", set_arg)->required();
  c_cfp->add_option("--point", point_arg);
  c_cfp->add_option("--n", n_arg);
  c_cfp->add_option("--emit-witness", emit_path);

  auto* c_cpf = app.add_subcommand(
      "construct-powerfree",
      "rank-n free families of p-th powers (disjoint supports allowed)");
  c_cpf->add_option("--set", set_arg)->required();
  c_cpf->add_option("--n", n_arg);
  c_cpf->add_option("--emit-witness", emit_path);

  std::string h1_arg, h2_arg;
  auto* c_pi = app.add_subcommand(
      "pi-check", "do two multisets act identically on the circle");
  c_pi->add_option("--h1", h1_arg)->required();
  c_pi->add_option("--h2", h2_arg)->required();

  long trials = 500, max_len = 6;
  uint64_t seed = 1;
  auto* c_obs = app.add_subcommand(
      "obstruction",
      "randomized disjoint-support conjugation checks");
  c_obs->add_option("--h1", h1_arg)->required();
  c_obs->add_option("--h2", h2_arg)->required();
  c_obs->add_option("--trials", trials);
  c_obs->add_option("--max-len", max_len);
  c_obs->add_option("--seed", seed);

  std::string g1_arg, g2_arg, r_arg, s_arg, c_arg;
  auto* c_four = app.add_subcommand(
      "four-conjugates", "four conjugate tables and their triple intersection");
  c_four->add_option("--g1", g1_arg)->required();
  c_four->add_option("--g2", g2_arg)->required();
  c_four->add_option("--r", r_arg)->required();
  c_four->add_option("--s", s_arg)->required();
  c_four->add_option("--c", c_arg)->required();

  std::string terms_arg, format_arg = "text";
  long k_max = 4, budget = 1L << 20;
  auto* c_norm = app.add_subcommand(
      "norm-bound", "trace-moment lower bounds on the reduced C*-norm");
  c_norm->add_option("--terms", terms_arg)->required();
  c_norm->add_option("--k-max", k_max);
  c_norm->add_option("--budget", budget);
  c_norm->add_option("--format", format_arg)
      ->check(CLI::IsMember({"text", "tsv"}));

  long kesten_n = 2;
  std::string prec_arg = "1/10000";
  auto* c_kesten = app.add_subcommand(
      "kesten", "spectral radius of the free-group simple random walk");
  c_kesten->add_option("--n", kesten_n);
  c_kesten->add_option("--precision", prec_arg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_eval) {
      std::cout << to_string(
                       parse_element(w_word)(CirclePoint(parse_rational(w_point)))
                           .value())
                << "\n";
    } else if (*c_compose) {
      std::cout << parse_word(w_word).to_string() << "\n";
    } else if (*c_rotnum) {
      std::cout << to_string(rotation_number(parse_element(w_word), q_max).value)
                << "\n";
    } else if (*c_fix) {
      std::cout << fixed_set(parse_element(w_word)).to_string() << "\n";
    } else if (*c_supp) {
      std::cout << support(parse_element(w_word)).to_string() << "\n";
    } else if (*c_commutes) {
      bool ok = commutes(parse_element(w_word), parse_element(w_other));
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    } else if (*c_pp) {
      PLCircleMap a = parse_element(w_word), b = parse_element(w_other);
      FreePowerResult res = free_power_search(a, b, limits);
      Witness w = make_witness(a, b, res);
      VerifyResult check = verify_witness(w);
      if (!check.ok) throw VerificationFailure(check.reason);
      print_witness_summary(w);
      if (!emit_path.empty()) write_file(emit_path, serialize_witness(w));
    } else if (*c_verify) {
      return cmd_verify_file(w_file);
    } else if (*c_cfp) {
      ConstructionResult res = lemma_fixed_point_construct(
          parse_set(set_arg), CirclePoint(parse_rational(point_arg)), n_arg);
      Witness w = make_witness(res, CirclePoint(parse_rational(point_arg)));
      VerifyResult check = verify_witness(w);
      if (!check.ok) throw VerificationFailure(check.reason);
      print_witness_summary(w);
      if (!emit_path.empty()) write_file(emit_path, serialize_witness(w));
    } else if (*c_cpf) {
      PowerfreeResult res = lemma_powerfree_construct(parse_set(set_arg), n_arg);
      Witness w = make_witness(res);
      VerifyResult check = verify_witness(w);
      if (!check.ok) throw VerificationFailure(check.reason);
      std::cout << "p: " << res.p << "\n";
      print_witness_summary(w);
      if (!emit_path.empty()) write_file(emit_path, serialize_witness(w));
    } else if (*c_pi) {
      PiRelationResult res =
          verify_pi_relation(parse_set(h1_arg), parse_set(h2_arg));
      if (res.equal) {
        std::cout << "EQUAL\n";
      } else {
        std::cout << "NOT EQUAL: " << res.witness << "\n";
        return 1;
      }
    } else if (*c_obs) {
      std::cout << "seed: " << seed << "\n";
      PLCircleMap h1 = parse_element(h1_arg), h2 = parse_element(h2_arg);
      std::mt19937_64 rng(seed);
      long covered = 0, violations = 0;
      for (long t = 0; t < trials; ++t) {
        PLCircleMap c1 = random_builtin_word(rng, max_len);
        PLCircleMap c2 = random_builtin_word(rng, max_len);
        DisjointSupportReport rep =
            disjoint_support_obstruction(h1, h2, c1, c2);
        if (rep.union_covers) {
          ++covered;
          if (!rep.intersection_empty || !rep.conjugates_commute) ++violations;
        }
      }
      std::cout << "trials: " << trials << "\n";
      std::cout << "covering cases: " << covered << "\n";
      std::cout << "violations: " << violations << "\n";
      if (violations > 0) return 1;
    } else if (*c_four) {
      ObstructionReport rep = four_conjugate_analysis(
          parse_element(g1_arg), parse_element(g2_arg), parse_element(r_arg),
          parse_element(s_arg), parse_element_list(c_arg));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
          std::cout << "X[" << i + 1 << "][" << j + 1
                    << "]: " << rep.tables[i][j].to_string() << "\n";
      std::cout << "triple: row " << rep.witness_i + 1 << ", columns "
                << rep.witness_triple[0] + 1 << "," << rep.witness_triple[1] + 1
                << "," << rep.witness_triple[2] + 1 << "\n";
      std::cout << "witness point: " << to_string(rep.witness_point.value())
                << "\n";
      std::cout << "acts as sr: "
                << (rep.acts_as_sr_verified ? "verified" : "FAILED") << "\n";
      if (!rep.acts_as_sr_verified) return 1;
    } else if (*c_norm) {
      MomentReport rep =
          moment_norm_lower_bound(parse_weighted(terms_arg), k_max, budget);
      const char* sep = (format_arg == "tsv") ? "\t" : "  ";
      std::cout << "k" << sep << "moment" << sep << "low" << sep << "high"
                << "\n";
      for (size_t i = 0; i < rep.moments.size(); ++i)
        std::cout << i + 1 << sep << to_string(rep.moments[i]) << sep
                  << to_string(rep.lower_bounds[i].first) << sep
                  << to_string(rep.lower_bounds[i].second) << "\n";
      if (!rep.complete) std::cout << "incomplete: budget exhausted\n";
    } else if (*c_kesten) {
      KestenBound kb = kesten_bound(kesten_n, parse_rational(prec_arg));
      std::cout << "radicand: " << kb.radicand << "\n";
      std::cout << "denominator: " << kb.denominator << "\n";
      std::cout << "bracket: " << bracket_str(kb.bracket) << "\n";
    }
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 1;
  } catch (const SearchBoundExceeded& e) {
    std::cerr << "search bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const RotationNotFound& e) {
    std::cerr << "rotation number not found: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
