#pragma once

#include <json.hpp>

#include <string>
#include <variant>

#include "linmonad/cohomology.hpp"
#include "linmonad/fp.hpp"
#include "linmonad/monad.hpp"
#include "linmonad/rational.hpp"

namespace linmonad {

using VariantMonad = std::variant<LinearMonad<Rational>, LinearMonad<Fp>>;

/// Monad document:
/// {"n":..,"field":{"type":"Q"}|{"type":"Fp","p":..},"v":..,"w":..,"u":..,
///  "alpha":[[form..]..],"beta":[[form..]..]} with each linear form an array
/// of n+1 coefficient strings, row-major. serialize() is the canonical form:
/// fixed key order, compact separators, one trailing newline.
template <Field K>
nlohmann::ordered_json monad_to_json(const LinearMonad<K>& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  if constexpr (std::is_same_v<K, Rational>) {
    j["field"] = {{"type", "Q"}};
  } else {
    j["field"] = {{"type", "Fp"}, {"p", m.field.p}};
  }
  j["v"] = m.v;
  j["w"] = m.w;
  j["u"] = m.u;
  auto matrix_json = [&](const LinearFormMatrix<K>& M) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t jx = 0; jx < M.cols(); ++jx) {
        nlohmann::ordered_json form = nlohmann::ordered_json::array();
        for (int l = 0; l < M.nvars(); ++l)
          form.push_back(FieldTraits<K>::to_string(M(i, jx)[l]));
        row.push_back(form);
      }
      rows.push_back(row);
    }
    return rows;
  };
  j["alpha"] = matrix_json(m.alpha);
  j["beta"] = matrix_json(m.beta);
  return j;
}

template <Field K>
std::string serialize_monad(const LinearMonad<K>& m) {
  return monad_to_json(m).dump() + "\n";
}

inline std::string serialize_monad(const VariantMonad& vm) {
  return std::visit([](const auto& m) { return serialize_monad(m); }, vm);
}

namespace detail {

template <Field K>
LinearMonad<K> monad_from_json_typed(const nlohmann::json& j, FieldInfo<K> field) {
  const int n = j.at("n").get<int>();
  const int v = j.at("v").get<int>(), w = j.at("w").get<int>(), u = j.at("u").get<int>();
  auto matrix_from = [&](const nlohmann::json& rows, std::size_t nr, std::size_t nc,
                         const char* name) {
    LinearFormMatrix<K> M(nr, nc, n, field);
    if (!rows.is_array() || rows.size() != nr)
      throw std::invalid_argument(std::string("monad JSON: ") + name + " must have " +
                                  std::to_string(nr) + " rows");
    for (std::size_t i = 0; i < nr; ++i) {
      if (!rows[i].is_array() || rows[i].size() != nc)
        throw std::invalid_argument(std::string("monad JSON: ") + name + " row " +
                                    std::to_string(i) + " must have " + std::to_string(nc) +
                                    " entries");
      for (std::size_t jx = 0; jx < nc; ++jx) {
        const auto& form = rows[i][jx];
        if (!form.is_array() || form.size() != static_cast<std::size_t>(n + 1))
          throw std::invalid_argument(std::string("monad JSON: each ") + name +
                                      " entry must be an array of n+1 coefficient strings");
        for (int l = 0; l <= n; ++l)
          M(i, jx)[l] = FieldTraits<K>::parse(field, form[l].get<std::string>());
      }
    }
    return M;
  };
  return LinearMonad<K>(n, field, v, w, u, matrix_from(j.at("alpha"), w, v, "alpha"),
                        matrix_from(j.at("beta"), u, w, "beta"));
}

}  // namespace detail

inline VariantMonad parse_monad(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const auto& f = j.at("field");
  std::string type = f.at("type").get<std::string>();
  if (type == "Q") return detail::monad_from_json_typed<Rational>(j, QInfo{});
  if (type == "Fp") {
    std::uint32_t p = f.at("p").get<std::uint32_t>();
    Fp::check_modulus(p);
    return detail::monad_from_json_typed<Fp>(j, FpInfo{p});
  }
  throw std::invalid_argument("monad JSON: field.type must be \"Q\" or \"Fp\"");
}

/// Table document: {"k_min":..,"k_max":..,"h":[[..]..],"chi":[..],
///  "charge":..|null,"natural":[bool per k in [-n,-1] within the window]}.
inline nlohmann::ordered_json table_to_json(const CohomologyTable& t) {
  nlohmann::ordered_json j;
  j["k_min"] = t.k_min;
  j["k_max"] = t.k_max;
  j["h"] = t.h;
  j["chi"] = t.chi;
  if (t.charge)
    j["charge"] = *t.charge;
  else
    j["charge"] = nullptr;
  j["natural"] = t.natural;
  return j;
}

}  // namespace linmonad
