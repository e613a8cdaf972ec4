#include "fernlab/scenario.hpp"

#include <json.hpp>

#include "fernlab/errors.hpp"

namespace fernlab::cli {

using nlohmann::json;

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next() % span);
}

weyl::BlockShape ScenarioFile::shape() const {
  if (!n || !r) fail(ErrorKind::Validation, "scenario needs 'n' and 'r'");
  weyl::BlockShape s(*r, i0prime);
  if (s.n != *n) fail(ErrorKind::Validation, "'r' does not sum to 'n'");
  return s;
}

hodge::Weights ScenarioFile::flag_weights() const {
  if (weights) return hodge::Weights(*weights);
  if (!n) fail(ErrorKind::Validation, "scenario needs 'n' for default weights");
  return hodge::Weights::standard(*n);
}

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  fail(ErrorKind::Parse, "rational entries must be strings like \"p/q\" or integers");
}

Matrix matrix_from_json(const json& v) {
  if (!v.is_array() || v.empty()) fail(ErrorKind::Parse, "matrix must be a non-empty array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  if (cols == 0) fail(ErrorKind::Parse, "matrix rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) fail(ErrorKind::Parse, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational_from_json(v[i][j]);
  }
  return m;
}

std::set<int> int_set_from_json(const json& v, const char* what) {
  if (!v.is_array()) fail(ErrorKind::Parse, std::string(what) + " must be an array of integers");
  std::set<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(ErrorKind::Parse, std::string(what) + " entries must be integers");
    out.insert(x.get<int>());
  }
  return out;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::Parse, "scenario must be a JSON object");

  ScenarioFile sf;
  if (doc.contains("n")) sf.n = doc["n"].get<int>();
  if (doc.contains("r")) {
    if (!doc["r"].is_array()) fail(ErrorKind::Parse, "'r' must be an array");
    sf.r = doc["r"].get<std::vector<int>>();
  }
  if (doc.contains("i0prime")) sf.i0prime = int_set_from_json(doc["i0prime"], "i0prime");
  if (doc.contains("dL")) sf.d_l = doc["dL"].get<int>();
  if (sf.d_l < 1) fail(ErrorKind::Validation, "'dL' must be >= 1");
  if (doc.contains("g")) sf.g = matrix_from_json(doc["g"]);
  if (doc.contains("weights")) sf.weights = doc["weights"].get<std::vector<std::int64_t>>();
  if (doc.contains("seed")) sf.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("k")) sf.k = doc["k"].get<int>();
  if (doc.contains("cusp")) sf.cusp = doc["cusp"].get<int>();
  if (sf.cusp < 1) fail(ErrorKind::Validation, "'cusp' must be >= 1");
  if (doc.contains("j0")) sf.j0 = int_set_from_json(doc["j0"], "j0");
  if (doc.contains("j1")) sf.j1 = int_set_from_json(doc["j1"], "j1");
  if (doc.contains("gl4")) {
    const auto& g4 = doc["gl4"];
    if (!g4.is_object()) fail(ErrorKind::Parse, "'gl4' must be an object");
    hodge::GL4Params p;
    auto get = [&](const char* key) -> Rational {
      if (!g4.contains(key)) fail(ErrorKind::Validation, std::string("gl4 needs '") + key + "'");
      return rational_from_json(g4[key]);
    };
    p.L12 = get("L12");
    p.L13 = get("L13");
    p.L14 = get("L14");
    p.L23 = get("L23");
    p.L34 = get("L34");
    sf.gl4 = std::move(p);
  }

  // Cross invariants checkable at parse time.
  if (sf.n && sf.r) (void)sf.shape();
  if (sf.weights && sf.n && static_cast<int>(sf.weights->size()) != *sf.n)
    fail(ErrorKind::Validation, "'weights' length differs from 'n'");
  if (sf.weights) (void)hodge::Weights(*sf.weights);
  if (sf.g) {
    if (sf.n && sf.g->rows() != static_cast<std::size_t>(*sf.n))
      fail(ErrorKind::Validation, "'g' size differs from 'n'");
    if (sf.g->rows() != sf.g->cols() || !sf.g->is_invertible())
      fail(ErrorKind::Validation, "'g' must be square and invertible");
  }
  return sf;
}

Matrix sample_unit_upper(int n, Rng& rng) {
  Matrix b = Matrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Rational(rng.uniform(-9, 9));
  return b;
}

Matrix sample_generic_g(const weyl::BlockShape& shape, Rng& rng) {
  Matrix w0 = weyl::Permutation::longest(static_cast<std::size_t>(shape.n)).matrix();
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix g = sample_unit_upper(shape.n, rng) * w0;
    auto flag = hodge::flag_from_matrix(g, hodge::Weights::standard(shape.n));
    if (hodge::is_noncritical(shape, flag)) return g;
  }
  fail(ErrorKind::CriticalInput, "no non-critical sample found in 100 tries");
}

}  // namespace fernlab::cli
