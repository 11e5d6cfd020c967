// linmonad: exact analysis of linear monads on P^n. Validation,
// classification, Chern/Euler data, cohomology tables, instanton and
// stability probes, existence queries and sampling.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "linmonad/cohomology.hpp"
#include "linmonad/fp.hpp"
#include "linmonad/gallery.hpp"
#include "linmonad/json_io.hpp"
#include "linmonad/monad.hpp"
#include "linmonad/rational.hpp"

namespace lm = linmonad;

namespace {

lm::VariantMonad load_monad(const std::string& input) {
  if (input.rfind("gallery:", 0) == 0)
    return lm::gallery_monad<lm::Rational>(input.substr(8), lm::QInfo{});
  std::ifstream f(input);
  if (!f) throw std::invalid_argument("cannot open file: " + input);
  std::stringstream ss;
  ss << f.rdbuf();
  return lm::parse_monad(ss.str());
}

template <lm::Field K>
void print_matrix(std::ostream& os, const lm::LinearFormMatrix<K>& M, const std::string& name) {
  os << name << " (" << M.rows() << "x" << M.cols() << "):\n";
  std::vector<std::vector<std::string>> cells(M.rows());
  std::size_t width = 1;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      cells[i].push_back(M(i, j).str());
      width = std::max(width, cells[i].back().size());
    }
  for (std::size_t i = 0; i < M.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < M.cols(); ++j)
      os << " " << std::setw(static_cast<int>(width)) << cells[i][j];
    os << " ]\n";
  }
}

template <lm::Field K>
void print_monad(std::ostream& os, const lm::LinearMonad<K>& m) {
  os << "linear monad on P^" << m.n << " over " << lm::FieldTraits<K>::name(m.field)
     << ": v=" << m.v << " w=" << m.w << " u=" << m.u << " (rank " << m.rank() << ", c1 "
     << m.c1() << ")\n";
  print_matrix(os, m.alpha, "alpha");
  print_matrix(os, m.beta, "beta");
}

void emit_monad(const lm::VariantMonad& vm, bool json) {
  if (json)
    std::cout << lm::serialize_monad(vm);
  else
    std::visit([&](const auto& m) { print_monad(std::cout, m); }, vm);
}

nlohmann::ordered_json validation_json(const lm::ValidationReport& r) {
  return {{"complex_ok", r.complex_ok},
          {"beta_surjective", r.beta_surjective},
          {"alpha_generically_injective", r.alpha_generically_injective},
          {"verdict", r.valid() ? "valid" : "invalid"}};
}

void print_validation(std::ostream& os, const lm::ValidationReport& r) {
  os << "complex (beta.alpha = 0):        " << (r.complex_ok ? "yes" : "NO") << "\n"
     << "beta fiberwise surjective:       " << (r.beta_surjective ? "yes" : "NO") << "\n"
     << "alpha generically injective:     " << (r.alpha_generically_injective ? "yes" : "NO")
     << "\n"
     << "verdict: " << (r.valid() ? "valid" : "invalid") << "\n";
}

void print_table(std::ostream& os, const lm::CohomologyTable& t) {
  auto head = [&](int k) { return "k=" + std::to_string(k); };
  std::size_t width = 6;
  for (int k = t.k_min; k <= t.k_max; ++k) width = std::max(width, head(k).size() + 2);
  os << std::setw(8) << "";
  for (int k = t.k_min; k <= t.k_max; ++k)
    os << std::setw(static_cast<int>(width)) << head(k);
  os << "\n";
  for (int p = t.n; p >= 0; --p) {
    os << std::setw(8) << ("h^" + std::to_string(p));
    for (int k = t.k_min; k <= t.k_max; ++k)
      os << std::setw(static_cast<int>(width)) << t.at(p, k);
    os << "\n";
  }
  os << std::setw(8) << "chi";
  for (int k = t.k_min; k <= t.k_max; ++k)
    os << std::setw(static_cast<int>(width)) << t.chi[k - t.k_min];
  os << "\n";
  if (t.natural_k_min <= t.natural_k_max) {
    os << "natural cohomology on [" << t.natural_k_min << "," << t.natural_k_max << "]: ";
    bool all = true;
    for (bool b : t.natural) all = all && b;
    os << (all ? "yes" : "no") << "\n";
  }
  if (t.charge) os << "charge: " << *t.charge << "\n";
}

struct CommonOpts {
  std::string input;
  bool json = false;
};

int run_validate(const CommonOpts& o) {
  auto vm = load_monad(o.input);
  lm::ValidationReport rep =
      std::visit([](const auto& m) { return lm::validate(m); }, vm);
  if (o.json)
    std::cout << validation_json(rep).dump() << "\n";
  else
    print_validation(std::cout, rep);
  return rep.valid() ? 0 : 2;
}

template <lm::Field K>
nlohmann::ordered_json classification_json(const lm::ClassificationReport<K>& c) {
  nlohmann::ordered_json j;
  j["class"] = lm::to_string(c.sheaf_class);
  if (c.codim())
    j["codim"] = *c.codim();
  else
    j["codim"] = nullptr;
  j["empty"] = c.locus.empty;
  if (!c.locus.empty)
    j["projective_dim"] = c.locus.projective_dim;
  else
    j["projective_dim"] = nullptr;
  if (c.locus.length)
    j["length"] = *c.locus.length;
  else
    j["length"] = nullptr;
  j["rank"] = c.rank;
  j["c1"] = c.c1;
  return j;
}

template <lm::Field K>
lm::VariantMonad build_nullcorrelation(int n, bool use_seed, std::uint64_t seed,
                                       const std::string& file, lm::FieldInfo<K> fi) {
  lm::Matrix<K> A(n + 1, n + 1, fi);
  if (use_seed) {
    std::mt19937_64 rng(seed);
    do {
      A = lm::random_antisymmetric<K>(n + 1, fi, rng);
    } while (A.is_zero());
  } else {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot open file: " + file);
    nlohmann::json j = nlohmann::json::parse(f);
    for (int i = 0; i <= n; ++i)
      for (int jx = 0; jx <= n; ++jx)
        A(i, jx) = lm::FieldTraits<K>::parse(fi, j.at(i).at(jx).get<std::string>());
  }
  return lm::VariantMonad(lm::nullcorrelation(n, A).monad());
}

}  // namespace

// The subcommand bodies need the field type; visit once and hand the
// validated monad to a generic callable.
template <class F>
int with_validated(const std::string& input, F&& fn) {
  auto vm = load_monad(input);
  return std::visit(
      [&](const auto& m) {
        using K = std::decay_t<decltype(m.alpha(0, 0)[0])>;
        lm::ValidatedMonad<K> v(m);
        return fn(v);
      },
      vm);
}

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of linear monads on projective space"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON on stdout");

  std::string input, input2;
  int n = 0, v = 0, w = 0, u = 0, k = 0, k_min = 0, k_max = 0, var = 0, max_tries = 50;
  std::uint64_t seed = 0;
  std::uint32_t prime = 101;
  std::string field_name = "fp";

  auto* c_validate = app.add_subcommand("validate", "check the monad axioms");
  c_validate->add_option("input", input, "monad JSON file or gallery:<name>")->required();

  auto* c_classify = app.add_subcommand("classify", "degeneration locus and sheaf class");
  c_classify->add_option("input", input)->required();

  auto* c_chern = app.add_subcommand("chern", "total Chern class coefficients");
  c_chern->add_option("input", input)->required();

  auto* c_euler = app.add_subcommand("euler", "Euler characteristic of E(k)");
  c_euler->add_option("input", input)->required();
  c_euler->add_option("-k,--twist", k, "twist")->required();

  auto* c_cohom = app.add_subcommand("cohomology", "table of h^p(E(k)) over a twist window");
  c_cohom->add_option("input", input)->required();
  c_cohom->add_option("--kmin", k_min, "window start")->required();
  c_cohom->add_option("--kmax", k_max, "window end")->required();

  auto* c_inst = app.add_subcommand("instanton", "instanton-sheaf conditions");
  c_inst->add_option("input", input)->required();

  auto* c_probe = app.add_subcommand("probe-stability", "semistability/stability probe");
  c_probe->add_option("input", input)->required();

  auto* c_exists = app.add_subcommand("exists", "existence test for dimension vector (n,v,w,u)");
  c_exists->add_option("-n", n)->required();
  c_exists->add_option("-v", v)->required();
  c_exists->add_option("-w", w)->required();
  c_exists->add_option("-u", u)->required();

  auto* c_random = app.add_subcommand("random", "sample a random valid monad");
  c_random->add_option("-n", n)->required();
  c_random->add_option("-v", v)->required();
  c_random->add_option("-w", w)->required();
  c_random->add_option("-u", u)->required();
  c_random->add_option("--seed", seed, "RNG seed (required: runs are reproducible)")->required();
  c_random->add_option("--field", field_name, "fp or q (default fp)");
  c_random->add_option("-p,--prime", prime, "modulus for fp (default 101)");
  c_random->add_option("--max-tries", max_tries, "sampling attempts before giving up");

  auto* c_nc = app.add_subcommand("nullcorrelation", "monad of a nullcorrelation sheaf");
  c_nc->add_option("-n", n)->required();
  auto* nc_seed = c_nc->add_option("--seed", seed, "draw a random antisymmetric matrix");
  auto* nc_input = c_nc->add_option("--matrix", input2, "JSON file with an (n+1)x(n+1) matrix");
  c_nc->add_option("--field", field_name, "fp or q (default q here)");
  c_nc->add_option("-p,--prime", prime, "modulus for fp");

  auto* c_gallery = app.add_subcommand("gallery", "built-in example monads");
  std::string gallery_name;
  c_gallery->add_option("name", gallery_name, "item name");
  bool list_gallery = false;
  c_gallery->add_flag("--list", list_gallery, "list item names");

  auto* c_restrict = app.add_subcommand("restrict", "restrict to a coordinate hyperplane");
  c_restrict->add_option("input", input)->required();
  c_restrict->add_option("-i,--var", var, "variable index to set to zero")->required();

  auto* c_dual = app.add_subcommand("dual", "the dual monad");
  c_dual->add_option("input", input)->required();

  auto* c_sum = app.add_subcommand("sum", "block-diagonal direct sum of two monads");
  c_sum->add_option("first", input)->required();
  c_sum->add_option("second", input2)->required();

  for (CLI::App* sc : {c_validate, c_classify, c_chern, c_euler, c_cohom, c_inst, c_probe,
                       c_exists, c_random, c_nc, c_gallery, c_restrict, c_dual, c_sum})
    sc->add_flag("--json", json, "emit machine-readable JSON on stdout");

  try {
    app.parse(argc, argv);

    if (*c_validate) return run_validate({input, json});

    if (*c_classify) {
      return with_validated(input, [&](const auto& vmon) {
        auto rep = lm::classify(vmon);
        if (json) {
          std::cout << classification_json(rep).dump() << "\n";
        } else {
          std::cout << "sheaf class: " << lm::to_string(rep.sheaf_class) << "\n";
          if (rep.codim())
            std::cout << "degeneration locus: codim " << *rep.codim() << ", projective dim "
                      << rep.locus.projective_dim;
          else
            std::cout << "degeneration locus: empty";
          if (rep.locus.length) std::cout << ", length " << *rep.locus.length;
          std::cout << "\nrank " << rep.rank << ", c1 " << rep.c1 << "\n";
        }
        return 0;
      });
    }

    if (*c_chern) {
      auto vmon = load_monad(input);
      lm::ChernClass c = std::visit([](const auto& m) { return lm::chern_total(m); }, vmon);
      if (json) {
        nlohmann::ordered_json j;
        j["coefficients"] = c.coeff;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "c(E) = 1";
        for (std::size_t i = 1; i < c.coeff.size(); ++i) {
          if (c.coeff[i] == 0) continue;
          std::cout << (c.coeff[i] > 0 ? " + " : " - ");
          long long a = std::abs(c.coeff[i]);
          if (a != 1) std::cout << a;
          std::cout << "H";
          if (i > 1) std::cout << "^" << i;
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*c_euler) {
      auto vmon = load_monad(input);
      long long chi =
          std::visit([&](const auto& m) { return lm::euler_characteristic(m, k); }, vmon);
      if (json)
        std::cout << nlohmann::ordered_json{{"k", k}, {"chi", chi}}.dump() << "\n";
      else
        std::cout << "chi(E(" << k << ")) = " << chi << "\n";
      return 0;
    }

    if (*c_cohom) {
      return with_validated(input, [&](const auto& vmon) {
        lm::CohomologyTable t = lm::cohomology_table(vmon, k_min, k_max);
        if (json)
          std::cout << lm::table_to_json(t).dump() << "\n";
        else
          print_table(std::cout, t);
        return 0;
      });
    }

    if (*c_inst) {
      return with_validated(input, [&](const auto& vmon) {
        lm::InstantonReport r = lm::instanton_check(vmon);
        if (json) {
          nlohmann::ordered_json j;
          j["is_instanton"] = r.is_instanton;
          j["charge"] = r.charge;
          j["rank"] = r.rank;
          j["c1"] = r.c1;
          j["class"] = lm::to_string(r.sheaf_class);
          nlohmann::ordered_json checked = nlohmann::ordered_json::array();
          for (auto [p, kk] : r.checked) checked.push_back({{"p", p}, {"k", kk}});
          j["checked"] = checked;
          nlohmann::ordered_json fails = nlohmann::ordered_json::array();
          for (const auto& f : r.failures) fails.push_back(f.what);
          j["failures"] = fails;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << (r.is_instanton ? "instanton sheaf" : "not an instanton sheaf")
                    << " (rank " << r.rank << ", charge " << r.charge << ", c1 " << r.c1
                    << ", " << lm::to_string(r.sheaf_class) << ")\n";
          for (const auto& f : r.failures) std::cout << "  failure: " << f.what << "\n";
        }
        return 0;
      });
    }

    if (*c_probe) {
      return with_validated(input, [&](const auto& vmon) {
        lm::StabilityProbe p = lm::stability_probe(vmon);
        if (json) {
          nlohmann::ordered_json j;
          j["h0_E_minus1"] = p.h0_E_minus1;
          j["h0_E"] = p.h0_E;
          j["h0_Edual_minus1"] =
              p.h0_Edual_minus1 ? nlohmann::ordered_json(*p.h0_Edual_minus1) : nullptr;
          j["h0_Edual"] = p.h0_Edual ? nlohmann::ordered_json(*p.h0_Edual) : nullptr;
          j["lower_bound_h0"] = p.lower_bound_h0;
          j["class"] = lm::to_string(p.sheaf_class);
          j["is_instanton"] = p.is_instanton;
          j["not_semistable"] = p.not_semistable;
          j["semistable_verdict"] = p.semistable_verdict;
          j["stable_verdict"] = p.stable_verdict;
          j["rank_bound_excludes_stable"] = p.rank_bound_excludes_stable;
          j["non_locally_free_caveat"] = p.non_locally_free_caveat;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "h^0(E(-1)) = " << p.h0_E_minus1 << ", h^0(E) = " << p.h0_E
                    << " (lower bound " << p.lower_bound_h0 << ")\n";
          if (p.h0_Edual)
            std::cout << "h^0(E*(-1)) = " << *p.h0_Edual_minus1 << ", h^0(E*) = " << *p.h0_Edual
                      << "\n";
          std::cout << "class: " << lm::to_string(p.sheaf_class)
                    << (p.is_instanton ? ", instanton" : ", not instanton") << "\n";
          if (p.not_semistable)
            std::cout << "verdict: not semistable (a section criterion fails)\n";
          else if (p.stable_verdict)
            std::cout << "verdict: stable\n";
          else if (p.semistable_verdict)
            std::cout << "verdict: semistable"
                      << (p.non_locally_free_caveat
                              ? " (not locally-free: no stable verdict possible)"
                              : "")
                      << "\n";
          else
            std::cout << "verdict: inconclusive (no definitive criterion applies)\n";
          if (p.rank_bound_excludes_stable)
            std::cout << "note: rank > (n-1)*charge forces h^0(E) > 0; stability is excluded\n";
        }
        return 0;
      });
    }

    if (*c_exists) {
      lm::ExistenceReport r = lm::monad_exists(n, v, w, u);
      if (json) {
        nlohmann::ordered_json j;
        j["exists"] = r.exists;
        if (r.exists && !r.locus_empty)
          j["expected_codim"] = r.expected_codim;
        else if (r.exists)
          j["expected_codim"] = "empty";
        else
          j["expected_codim"] = nullptr;
        std::cout << j.dump() << "\n";
      } else {
        if (!r.exists)
          std::cout << "no\n";
        else if (r.locus_empty)
          std::cout << "yes (generic degeneration locus empty)\n";
        else
          std::cout << "yes (generic degeneration locus of codimension " << r.expected_codim
                    << ")\n";
      }
      return 0;
    }

    if (*c_random) {
      if (field_name == "q") {
        auto m = lm::random_monad<lm::Rational>(n, v, w, u, lm::QInfo{}, seed, max_tries);
        emit_monad(lm::VariantMonad(m.monad()), json);
      } else if (field_name == "fp") {
        auto m = lm::random_monad<lm::Fp>(n, v, w, u, lm::FpInfo{prime}, seed, max_tries);
        emit_monad(lm::VariantMonad(m.monad()), json);
      } else {
        throw std::invalid_argument("--field must be q or fp");
      }
      return 0;
    }

    if (*c_nc) {
      if (static_cast<bool>(*nc_seed) == static_cast<bool>(*nc_input))
        throw std::invalid_argument("nullcorrelation: give exactly one of --seed, --matrix");
      bool over_q = !c_nc->count("--field") || field_name == "q";
      lm::VariantMonad out =
          over_q ? build_nullcorrelation<lm::Rational>(n, static_cast<bool>(*nc_seed), seed,
                                                       input2, lm::QInfo{})
                 : build_nullcorrelation<lm::Fp>(n, static_cast<bool>(*nc_seed), seed, input2,
                                                 lm::FpInfo{prime});
      emit_monad(out, json);
      return 0;
    }

    if (*c_gallery) {
      if (list_gallery) {
        for (const auto& name : lm::gallery_names()) std::cout << name << "\n";
        return 0;
      }
      if (gallery_name.empty()) throw std::invalid_argument("gallery: give a name or --list");
      emit_monad(lm::VariantMonad(lm::gallery_monad<lm::Rational>(gallery_name, lm::QInfo{})),
                 json);
      return 0;
    }

    if (*c_restrict) {
      auto vmon = load_monad(input);
      return std::visit(
          [&](const auto& m) {
            auto restricted = lm::restrict_hyperplane(m, var);
            if (!json) print_validation(std::cout, restricted.report());
            emit_monad(lm::VariantMonad(restricted.monad()), json);
            return 0;
          },
          vmon);
    }

    if (*c_dual) {
      auto vmon = load_monad(input);
      return std::visit(
          [&](const auto& m) {
            using K = std::decay_t<decltype(m.alpha(0, 0)[0])>;
            auto d = lm::dual(m);
            lm::ValidationReport rep = lm::validate(m);
            if (rep.valid()) {
              auto cls = lm::classify(lm::ValidatedMonad<K>::trusted(m, rep));
              if (cls.sheaf_class != lm::SheafClass::LocallyFree) {
                std::ostream& os = json ? std::cerr : std::cout;
                os << "note: sheaf is not locally-free; the dual monad's cohomology "
                      "need not be the dual sheaf\n";
              }
            }
            emit_monad(lm::VariantMonad(d), json);
            return 0;
          },
          vmon);
    }

    if (*c_sum) {
      auto a = load_monad(input);
      auto b = load_monad(input2);
      if (a.index() != b.index())
        throw std::invalid_argument("sum: both monads must live over the same field");
      lm::VariantMonad out = std::visit(
          [&]<class MA>(const MA& ma) -> lm::VariantMonad {
            return lm::direct_sum(ma, std::get<MA>(b));
          },
          a);
      emit_monad(out, json);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const lm::InvalidMonadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lm::InvalidRestrictionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lm::ExhaustedTriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
