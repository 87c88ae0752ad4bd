#include "lietriple/algebra_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_index(const std::string& t, int dim, int line) {
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, "bad index '" + t + "'");
  int v = 0;
  try {
    v = std::stoi(t);
  } catch (...) {
    fail(line, "index '" + t + "' does not fit");
  }
  if (v < 0 || v >= dim) fail(line, "index " + t + " out of range [0," + std::to_string(dim) + ")");
  return v;
}

Scalar parse_value(const std::vector<std::string>& toks, std::size_t colon, int line) {
  if (colon + 1 >= toks.size() || toks[colon] != ":") fail(line, "expected ': scalar'");
  std::string joined;
  for (std::size_t i = colon + 1; i < toks.size(); ++i) joined += toks[i];
  try {
    return Scalar::parse(joined);
  } catch (const EngineError& e) {
    fail(line, e.what());
  }
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile file;
  bool have_dim = false;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  std::vector<std::string> diagnostics;
  auto collect = [&](auto&& body) {
    try {
      body();
    } catch (const EngineError& e) {
      diagnostics.emplace_back(e.what());
    }
  };
  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto toks = tokens_of(raw);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    collect([&] {
      if (key == "name") {
        if (toks.size() != 2) fail(line, "usage: name <identifier>");
        file.name = toks[1];
      } else if (key == "dim") {
        if (toks.size() != 2) fail(line, "usage: dim <n>");
        try {
          file.dim = std::stoi(toks[1]);
        } catch (...) {
          fail(line, "bad dimension '" + toks[1] + "'");
        }
        if (file.dim < 0) fail(line, "dimension must be nonnegative");
        have_dim = true;
      } else if (key == "basis") {
        file.basis.assign(toks.begin() + 1, toks.end());
      } else if (key == "bracket") {
        // bracket i j -> k : v
        if (!have_dim) fail(line, "bracket before dim");
        if (toks.size() < 7 || toks[3] != "->") fail(line, "usage: bracket i j -> k : scalar");
        int i = parse_index(toks[1], file.dim, line);
        int j = parse_index(toks[2], file.dim, line);
        int k = parse_index(toks[4], file.dim, line);
        file.brackets.push_back({i, j, k, parse_value(toks, 5, line)});
      } else if (key == "cobracket") {
        // cobracket i -> j k : v
        if (!have_dim) fail(line, "cobracket before dim");
        if (toks.size() < 7 || toks[2] != "->") fail(line, "usage: cobracket i -> j k : scalar");
        int i = parse_index(toks[1], file.dim, line);
        int j = parse_index(toks[3], file.dim, line);
        int k = parse_index(toks[4], file.dim, line);
        file.cobrackets.push_back({i, j, k, parse_value(toks, 5, line)});
      } else if (key == "r") {
        if (!have_dim) fail(line, "r before dim");
        if (toks.size() < 5) fail(line, "usage: r i j : scalar");
        int i = parse_index(toks[1], file.dim, line);
        int j = parse_index(toks[2], file.dim, line);
        file.r.push_back({i, j, parse_value(toks, 3, line)});
        file.has_r = true;
      } else {
        fail(line, "unknown directive '" + key + "'");
      }
    });
  }
  if (!have_dim) diagnostics.emplace_back("missing 'dim' directive");
  if (file.basis.empty())
    for (int i = 0; i < file.dim; ++i) file.basis.push_back("e" + std::to_string(i));
  if (static_cast<int>(file.basis.size()) != file.dim)
    diagnostics.emplace_back("basis has " + std::to_string(file.basis.size()) +
                             " labels, dim is " + std::to_string(file.dim));
  if (!diagnostics.empty()) {
    std::string joined;
    std::size_t shown = 0;
    for (const auto& d : diagnostics) {
      if (shown++ == 10) {
        joined += "; ...";
        break;
      }
      if (!joined.empty()) joined += "; ";
      joined += d;
    }
    throw ParseError(joined);
  }
  if (file.name.empty()) file.name = "algebra";
  return file;
}

RealisedAlgebra realise(const AlgebraFile& file) {
  const int n = file.dim;
  Space s = Space::make(file.name, file.basis);
  auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n);
  std::vector<Scalar> d(static_cast<std::size_t>(n) * n * n);
  std::set<std::pair<int, int>> bracket_pairs;
  for (const auto& e : file.brackets) {
    c[idx(e.i, e.j, e.k)] += e.v;
    bracket_pairs.insert({e.i, e.j});
  }
  // Antisymmetric completion for pairs given in one orientation only.
  for (const auto& [i, j] : bracket_pairs)
    if (i != j && !bracket_pairs.count({j, i}))
      for (int k = 0; k < n; ++k) c[idx(j, i, k)] = -c[idx(i, j, k)];
  std::set<std::pair<int, std::pair<int, int>>> cob_pairs;
  for (const auto& e : file.cobrackets) {
    d[idx(e.i, e.j, e.k)] += e.v;
    cob_pairs.insert({e.i, {e.j, e.k}});
  }
  for (const auto& [i, jk] : cob_pairs)
    if (jk.first != jk.second && !cob_pairs.count({i, {jk.second, jk.first}}))
      d[idx(i, jk.second, jk.first)] = -d[idx(i, jk.first, jk.second)];

  LieBialgebra bialg = LieBialgebra::unchecked(LieAlgebra::unchecked(s, std::move(c)),
                                               LieCobracket::unchecked(s, std::move(d)));
  std::optional<Tensor2> r;
  if (file.has_r) {
    Tensor2 rt = Tensor2::zero(s, s);
    for (const auto& e : file.r) rt.add(e.i, e.j, e.v);
    r = std::move(rt);
  }
  return RealisedAlgebra{std::move(bialg), std::move(r)};
}

std::string emit_algebra_file(const std::string& name, const LieBialgebra& bialg,
                              const std::optional<Tensor2>& r, const std::string& provenance) {
  std::ostringstream os;
  if (!provenance.empty()) {
    std::istringstream ps(provenance);
    std::string pl;
    while (std::getline(ps, pl)) os << "# " << pl << "\n";
  }
  const int n = bialg.dim();
  os << "name " << name << "\n";
  os << "dim " << n << "\n";
  os << "basis";
  for (const auto& l : bialg.space().labels()) os << " " << l;
  os << "\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& v = bialg.alg().c(i, j, k);
        if (!v.is_zero())
          os << "bracket " << i << " " << j << " -> " << k << " : " << v.str() << "\n";
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Scalar& v = bialg.cob().d(i, j, k);
        if (!v.is_zero())
          os << "cobracket " << i << " -> " << j << " " << k << " : " << v.str() << "\n";
      }
  if (r) {
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& v = r->at(i, j);
        if (!v.is_zero()) {
          os << "r " << i << " " << j << " : " << v.str() << "\n";
          any = true;
        }
      }
    // A present but vanishing r keeps one explicit zero entry so the
    // round trip preserves that the structure is quasitriangular.
    if (!any && n > 0) os << "r 0 0 : 0\n";
  }
  return os.str();
}

std::string fingerprint64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void Report::add_pass(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckResult::Status::Pass, std::move(detail)});
}

void Report::add_fail(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckResult::Status::Fail, std::move(detail)});
}

void Report::add_skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckResult::Status::Skip, std::move(detail)});
}

void Report::add(std::string name, const VerificationReport& rep) {
  if (rep.ok())
    add_pass(std::move(name));
  else
    add_fail(std::move(name), rep.summary());
}

bool Report::pass() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == CheckResult::Status::Fail) ++n;
  return n;
}

std::string Report::human() const {
  std::ostringstream os;
  os << "== " << construction << " " << input_name << " (fingerprint " << fingerprint << ") ==\n";
  for (const auto& c : checks) {
    const char* tag = c.status == CheckResult::Status::Pass   ? "PASS"
                      : c.status == CheckResult::Status::Fail ? "FAIL"
                                                              : "skip";
    os << "  [" << tag << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << "result: " << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, "
     << failures() << " failures) in " << time_ms << " ms\n";
  return os.str();
}

std::string Report::machine() const {
  std::ostringstream os;
  os << "report-format 1\n";
  os << "construction " << construction << "\n";
  os << "input " << input_name << "\n";
  os << "fingerprint " << fingerprint << "\n";
  for (const auto& c : checks) {
    const char* tag = c.status == CheckResult::Status::Pass   ? "pass"
                      : c.status == CheckResult::Status::Fail ? "fail"
                                                              : "skip";
    os << "check " << c.name << " " << tag;
    if (!c.detail.empty()) {
      std::string d = c.detail;
      std::replace(d.begin(), d.end(), '\n', ' ');
      os << " detail " << d;
    }
    os << "\n";
  }
  os << "result " << (pass() ? "pass" : "fail") << "\n";
  os << "checks " << checks.size() << " failures " << failures() << "\n";
  os << "time-ms " << time_ms << "\n";
  return os.str();
}

} // namespace lietriple
