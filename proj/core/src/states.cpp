#include "triqd/states.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace triqd {

bool ParamSet::is_family_31() const {
  return a[0] == 0.0 && a[1] == 0.0 && b[0] == 0.0 && b[1] == 0.0 &&
         v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0;
}

bool ParamSet::in_range() const {
  for (const auto* block : {&a, &b, &c, &r, &s, &v, &t})
    for (double x : *block)
      if (!(x >= -1.0 && x <= 1.0)) return false;
  return true;
}

ComplexMatrix build_state(const ParamSet& p) {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  ComplexMatrix rho = ComplexMatrix::identity(8);
  for (int i = 0; i < 3; ++i) {
    const ComplexMatrix si = pauli(i + 1);
    rho += p.a[i] * kron(kron(si, i2), i2);
    rho += p.b[i] * kron(kron(i2, si), i2);
    rho += p.c[i] * kron(kron(i2, i2), si);
    rho += p.r[i] * kron(kron(si, si), i2);
    rho += p.s[i] * kron(kron(si, i2), si);
    rho += p.v[i] * kron(kron(i2, si), si);
    rho += p.t[i] * kron(kron(si, si), si);
  }
  rho *= complexd(0.125);
  return rho;
}

ComplexMatrix build_werner_ghz(double c) {
  if (!(c >= 0.0 && c <= 1.0))
    throw std::domain_error("werner-ghz mixing parameter must lie in [0, 1]");
  ComplexMatrix rho(8);
  for (int i = 0; i < 8; ++i) rho(i, i) = (1.0 - c) / 8.0;
  rho(0, 0) += c / 2.0;
  rho(7, 7) += c / 2.0;
  rho(0, 7) += c / 2.0;
  rho(7, 0) += c / 2.0;
  return rho;
}

ValidationReport validate_state(const ComplexMatrix& rho) {
  ValidationReport rep;
  rep.hermitian_ok = rho.is_hermitian(1e-12);
  rep.trace_dev = rho.trace().real() - 1.0;
  if (rep.hermitian_ok) {
    rep.min_eigenvalue = eig_hermitian(rho).values.front();
  } else {
    rep.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }
  rep.valid = rep.hermitian_ok && std::abs(rep.trace_dev) <= 1e-12 &&
              rep.min_eigenvalue >= -1e-10;
  return rep;
}

ValidationReport validate_state(const ComplexMatrix& rho, const ParamSet& p) {
  ValidationReport rep = validate_state(rho);
  auto norm3 = [](const std::array<double, 3>& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  };
  rep.advisory_norm_condition = norm3(p.a) + norm3(p.b) + norm3(p.r) <= 1.0;
  return rep;
}

namespace {

std::array<double, 3> read_triple(const nlohmann::json& j, const std::string& key) {
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.size() != 3)
    throw std::invalid_argument("parameter key \"" + key + "\" must be a 3-array of numbers");
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_number())
      throw std::invalid_argument("parameter key \"" + key + "\" must contain numbers");
    out[i] = arr[i].get<double>();
  }
  return out;
}

}  // namespace

ParamSet parse_params_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("parameter file must hold a single object");

  static const char* kKeys[] = {"a", "b", "c", "r", "s", "v", "T"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || item.key() == k;
    if (!known)
      throw std::invalid_argument("unknown key \"" + item.key() + "\" in parameter file");
  }

  ParamSet p;
  if (j.contains("a")) p.a = read_triple(j, "a");
  if (j.contains("b")) p.b = read_triple(j, "b");
  if (j.contains("c")) p.c = read_triple(j, "c");
  if (j.contains("r")) p.r = read_triple(j, "r");
  if (j.contains("s")) p.s = read_triple(j, "s");
  if (j.contains("v")) p.v = read_triple(j, "v");
  if (j.contains("T")) p.t = read_triple(j, "T");
  if (!p.in_range())
    throw std::invalid_argument("parameter entries must lie in [-1, 1]");
  return p;
}

ParamSet load_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_params_json(ss.str());
}

}  // namespace triqd
