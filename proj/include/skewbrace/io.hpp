#pragma once

// JSON brace and representation files.
//
//   brace: {"order": n, "dot": [[..]], "circ": [[..]], "labels": [..]?}
//   rep:   {"modulus": q, "dim": d, "beta": {"<index>": [[..]]}, "rho": {..}}
//
// Matrix entries are arbitrary integers, reduced mod q. Errors carry a JSON
// pointer to the offending value.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/representation.hpp"

namespace skewbrace::io {

using json = nlohmann::json;

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + "@byte " + std::to_string(e.byte), "malformed JSON");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

inline std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::size_t positive(const json& v, const std::string& where) {
  std::int64_t x = integer(v, where);
  if (x <= 0) throw ParseError(where, "expected a positive integer");
  return static_cast<std::size_t>(x);
}

inline CayleyTable table(const json& t, std::size_t n, const std::string& where) {
  if (!t.is_array()) throw ParseError(where, "expected an array of rows");
  if (t.size() != n) throw ParseError(where, "expected " + std::to_string(n) + " rows, got " + std::to_string(t.size()));
  CayleyTable out(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rw = where + "/" + std::to_string(i);
    const json& row = t[i];
    if (!row.is_array()) throw ParseError(rw, "expected an array");
    if (row.size() != n)
      throw ParseError(rw, "ragged row: expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ew = rw + "/" + std::to_string(j);
      std::int64_t x = integer(row[j], ew);
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw ParseError(ew, "entry " + std::to_string(x) + " out of range [0," + std::to_string(n) + ")");
      if (seen[x]) throw ParseError(ew, "entry " + std::to_string(x) + " repeats in its row (not a Latin square)");
      seen[x] = 1;
      out[i][j] = static_cast<std::size_t>(x);
    }
  }
  return out;
}

inline Matrix matrix(const json& m, PrimeField f, std::size_t d, const std::string& where) {
  if (!m.is_array() || m.size() != d) throw ParseError(where, "expected " + std::to_string(d) + " rows");
  Matrix out(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::string rw = where + "/" + std::to_string(i);
    if (!m[i].is_array() || m[i].size() != d)
      throw ParseError(rw, "ragged row: expected " + std::to_string(d) + " entries");
    for (std::size_t j = 0; j < d; ++j) out.set(i, j, f.reduce(integer(m[i][j], rw + "/" + std::to_string(j))));
  }
  return out;
}

inline std::vector<Matrix> family(const json& obj, std::size_t n, PrimeField f, std::size_t d,
                                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object keyed by element index");
  std::vector<std::optional<Matrix>> slots(n);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string kw = where + "/" + it.key();
    std::size_t idx = 0;
    const std::string& k = it.key();
    if (k.empty() || k.size() > 9 || k.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(kw, "key is not an element index");
    idx = std::stoul(k);
    if (idx >= n) throw ParseError(kw, "element index out of range [0," + std::to_string(n) + ")");
    slots[idx] = matrix(it.value(), f, d, kw);
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!slots[i]) throw ParseError(where + "/" + std::to_string(i), "missing matrix for element");
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace detail

struct BraceTables {
  CayleyTable dot, circ;
  std::vector<std::string> labels;
};

// Format checks only; the axioms are left to verify_brace.
inline BraceTables parse_brace_tables(const json& j) {
  const std::size_t n = detail::positive(detail::field(j, "order", ""), "/order");
  BraceTables t;
  t.dot = detail::table(detail::field(j, "dot", ""), n, "/dot");
  t.circ = detail::table(detail::field(j, "circ", ""), n, "/circ");
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array() || l.size() != n) throw ParseError("/labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) throw ParseError("/labels/" + std::to_string(i), "expected a string");
      t.labels.push_back(l[i].get<std::string>());
    }
  }
  return t;
}

// Brace-axiom failures surface as NotAGroup, IdentityMismatch or
// BraceRelationViolation; format problems as ParseError.
inline SkewBrace parse_brace(const json& j) {
  auto t = parse_brace_tables(j);
  return verify_brace(t.dot, t.circ, std::move(t.labels));
}

// With require_rho false a missing "rho" means rho = identity everywhere.
inline BraceRepresentation parse_representation(const json& j, const SkewBrace& A, bool require_rho = true) {
  const std::int64_t q = detail::integer(detail::field(j, "modulus", ""), "/modulus");
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)) || q >= (std::int64_t{1} << 31))
    throw ParseError("/modulus", "modulus " + std::to_string(q) + " is not a prime below 2^31");
  const PrimeField f(static_cast<std::uint64_t>(q));
  const std::size_t d = detail::positive(detail::field(j, "dim", ""), "/dim");
  auto beta = detail::family(detail::field(j, "beta", ""), A.order(), f, d, "/beta");
  std::vector<Matrix> rho;
  if (require_rho || j.contains("rho"))
    rho = detail::family(detail::field(j, "rho", ""), A.order(), f, d, "/rho");
  else
    rho.assign(A.order(), Matrix::identity(f, d));
  return {A, f, d, std::move(beta), std::move(rho)};
}

inline json table_json(const CayleyTable& t) {
  json out = json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

inline json matrix_json(const Matrix& m) { return m.to_rows(); }

inline json brace_json(const SkewBrace& A) {
  return {{"order", A.order()}, {"dot", table_json(A.dot_table())}, {"circ", table_json(A.circ_table())},
          {"labels", A.labels()}};
}

inline json representation_json(const BraceRepresentation& r) {
  json beta = json::object(), rho = json::object();
  for (std::size_t a = 0; a < r.brace.order(); ++a) {
    beta[std::to_string(a)] = matrix_json(r.beta[a]);
    rho[std::to_string(a)] = matrix_json(r.rho[a]);
  }
  return {{"modulus", r.field.modulus()}, {"dim", r.dim}, {"beta", beta}, {"rho", rho}};
}

}  // namespace skewbrace::io
