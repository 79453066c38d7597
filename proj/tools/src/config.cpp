#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "finsler/error.hpp"

namespace finsler::cli {

using nlohmann::json;

namespace {

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& message) const {
    throw ConfigError(source_ + ": field " + (ptr.empty() ? "/" : ptr) + ": " + message);
  }

  void only_keys(const json& j, const std::string& ptr, std::initializer_list<std::string_view> allowed) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(ptr + "/" + key, "unknown key");
    }
  }

  const json& required(const json& j, const std::string& ptr, const char* key) const {
    if (!j.contains(key)) fail(ptr + "/" + key, "missing required key");
    return j.at(key);
  }

  double number(const json& j, const std::string& ptr) const {
    if (!j.is_number()) fail(ptr, "expected a number");
    return j.get<double>();
  }

  double positive(const json& j, const std::string& ptr) const {
    const double x = number(j, ptr);
    if (!(x > 0.0)) fail(ptr, "expected a positive number");
    return x;
  }

  long long integer(const json& j, const std::string& ptr, long long lo, long long hi) const {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    const long long x = j.get<long long>();
    if (x < lo || x > hi) fail(ptr, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
  }

  const json& array(const json& j, const std::string& ptr, std::size_t size) const {
    if (!j.is_array()) fail(ptr, "expected an array");
    if (j.size() != size) fail(ptr, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    return j;
  }

  Vector vector(const json& j, const std::string& ptr, int n) const {
    array(j, ptr, static_cast<std::size_t>(n));
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = number(j[static_cast<std::size_t>(i)], ptr + "/" + std::to_string(i));
    return v;
  }

  Matrix matrix(const json& j, const std::string& ptr, int n) const {
    array(j, ptr, static_cast<std::size_t>(n));
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = vector(j[static_cast<std::size_t>(i)], ptr + "/" + std::to_string(i), n);
    return m;
  }

  std::vector<Monomial> terms(const json& j, const std::string& ptr, int n) const {
    if (!j.is_array() || j.empty()) fail(ptr, "expected a non-empty array of terms");
    std::vector<Monomial> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
      const std::string at = ptr + "/" + std::to_string(t);
      only_keys(j[t], at, {"coefficient", "powers"});
      Monomial m;
      m.coefficient = number(required(j[t], at, "coefficient"), at + "/coefficient");
      const json& p = array(required(j[t], at, "powers"), at + "/powers", static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        m.powers.push_back(static_cast<int>(integer(p[static_cast<std::size_t>(i)],
                                                    at + "/powers/" + std::to_string(i), 0, 64)));
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  NormModel norm(const json& j, int n) const {
    const std::string ptr = "/norm";
    if (!j.is_object()) fail(ptr, "expected an object");
    const json& kind_json = required(j, ptr, "kind");
    if (!kind_json.is_string()) fail(ptr + "/kind", "expected a string");
    const std::string kind = kind_json.get<std::string>();
    try {
      if (kind == "euclidean") {
        only_keys(j, ptr, {"kind"});
        return NormModel::euclidean(n);
      }
      if (kind == "pseudo_euclidean") {
        only_keys(j, ptr, {"kind", "signature"});
        const json& s = array(required(j, ptr, "signature"), ptr + "/signature", static_cast<std::size_t>(n));
        std::vector<int> sig;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const long long x = integer(s[i], ptr + "/signature/" + std::to_string(i), -1, 1);
          if (x == 0) fail(ptr + "/signature/" + std::to_string(i), "signature entries must be -1 or 1");
          sig.push_back(static_cast<int>(x));
        }
        return NormModel::pseudo_euclidean(sig);
      }
      if (kind == "randers") {
        only_keys(j, ptr, {"kind", "alpha", "beta"});
        return NormModel::randers(matrix(required(j, ptr, "alpha"), ptr + "/alpha", n),
                                  vector(required(j, ptr, "beta"), ptr + "/beta", n));
      }
      if (kind == "mth_root") {
        only_keys(j, ptr, {"kind", "order", "terms"});
        const int m = static_cast<int>(integer(required(j, ptr, "order"), ptr + "/order", 3, 64));
        return NormModel::mth_root(n, m, terms(required(j, ptr, "terms"), ptr + "/terms", n));
      }
      if (kind == "custom_polynomial") {
        only_keys(j, ptr, {"kind", "terms", "label"});
        std::string label = "polynomial";
        if (j.contains("label")) {
          if (!j["label"].is_string()) fail(ptr + "/label", "expected a string");
          label = j["label"].get<std::string>();
        }
        return NormModel::polynomial_f2(n, terms(required(j, ptr, "terms"), ptr + "/terms", n), label);
      }
    } catch (const InvalidModel& e) {
      fail(ptr, e.what());
    }
    fail(ptr + "/kind",
         "unknown norm kind '" + kind + "' (euclidean, pseudo_euclidean, randers, mth_root, custom_polynomial)");
  }

  Tolerances tolerances(const json& j) const {
    const std::string ptr = "/tolerances";
    only_keys(j, ptr, {"identities", "profile", "closure", "angle", "bracket", "drift_min_order"});
    Tolerances t;
    auto opt = [&](const char* key, std::optional<double>& out) {
      if (j.contains(key)) out = positive(j[key], ptr + "/" + key);
    };
    opt("identities", t.identities);
    opt("profile", t.profile);
    opt("closure", t.closure);
    opt("angle", t.angle);
    opt("bracket", t.bracket);
    if (j.contains("drift_min_order")) t.drift_min_order = positive(j["drift_min_order"], ptr + "/drift_min_order");
    return t;
  }

 private:
  std::string source_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

DerivativeMethod parse_method(std::string_view name) {
  if (name == "automatic") return DerivativeMethod::Automatic;
  if (name == "analytic") return DerivativeMethod::Analytic;
  if (name == "hyperdual") return DerivativeMethod::Hyperdual;
  if (name == "finite_difference" || name == "finite-difference") return DerivativeMethod::FiniteDifference;
  throw std::invalid_argument("unknown derivative method '" + std::string(name) +
                              "' (automatic, analytic, hyperdual, finite_difference)");
}

SpaceConfig parse_config(std::string_view text, const std::string& source) {
  json root;
  try {
    root = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (const auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

  const Parser p(source);
  p.only_keys(root, "", {"dimension", "norm", "basis", "method", "seed", "samples", "tolerances"});
  const int n = static_cast<int>(p.integer(p.required(root, "", "dimension"), "/dimension", 1, 16));
  NormModel norm = p.norm(p.required(root, "", "norm"), n);

  std::optional<Basis> basis;
  if (root.contains("basis")) {
    try {
      basis = Basis::from_rows(p.matrix(root["basis"], "/basis", n));
    } catch (const SingularInput& e) {
      p.fail("/basis", e.what());
    }
  }

  DerivativeMethod method = DerivativeMethod::Automatic;
  if (root.contains("method")) {
    if (!root["method"].is_string()) p.fail("/method", "expected a string");
    try {
      method = parse_method(root["method"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      p.fail("/method", e.what());
    }
  }

  std::uint64_t seed = 0;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) p.fail("/seed", "expected a non-negative integer");
    seed = root["seed"].get<std::uint64_t>();
  }
  std::size_t samples = 100;
  if (root.contains("samples")) samples = static_cast<std::size_t>(p.integer(root["samples"], "/samples", 1, 1000000));
  const Tolerances tol = root.contains("tolerances") ? p.tolerances(root["tolerances"]) : Tolerances{};

  json echo = root;
  echo["method"] = to_string(method);
  echo["seed"] = seed;
  echo["samples"] = samples;

  return SpaceConfig{.dimension = n,
                     .norm = std::move(norm),
                     .basis = basis ? *basis : Basis::standard(n),
                     .method = method,
                     .seed = seed,
                     .samples = samples,
                     .tolerances = tol,
                     .echo = std::move(echo)};
}

SpaceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace finsler::cli
