#include "qdisk/io.hpp"

#include <fstream>
#include <sstream>

namespace qdisk {

namespace {

struct Header {
  std::string kind;
  std::map<std::string, std::string> fields;
};

Header parse_header(const std::string& line, long lineno) {
  std::istringstream ss(line);
  Header h;
  ss >> h.kind;
  std::string tok;
  while (ss >> tok) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos) throw parse_error("bad header token '" + tok + "'", lineno);
    h.fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return h;
}

std::string require_field(const Header& h, const std::string& name, long lineno) {
  auto it = h.fields.find(name);
  if (it == h.fields.end())
    throw parse_error("header missing '" + name + "=' field", lineno);
  return it->second;
}

// Splits "<coeff> <rest>" where coeff may contain no whitespace.
std::pair<std::string, std::string> split_term(const std::string& line, long lineno) {
  size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos) throw parse_error("term line needs coefficient and index", lineno);
  std::string coeff = line.substr(0, sp);
  std::string rest = line.substr(sp + 1);
  size_t start = rest.find_first_not_of(" \t");
  if (start == std::string::npos) throw parse_error("missing monomial index", lineno);
  return {coeff, rest.substr(start)};
}

bool next_content_line(std::istream& in, std::string& line, long& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue; // blank
    if (line[start] == '#') continue;
    size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(start, end - start + 1);
    return true;
  }
  return false;
}

Header read_header(std::istream& in, const std::string& expected_kind, long& lineno) {
  std::string line;
  if (!next_content_line(in, line, lineno)) throw parse_error("empty input", lineno);
  Header h = parse_header(line, lineno);
  if (h.kind != expected_kind)
    throw parse_error("expected '" + expected_kind + "' header, got '" + h.kind + "'", lineno);
  return h;
}

} // namespace

SeriesKind peek_kind(std::istream& in) {
  long lineno = 0;
  std::string line;
  auto pos = in.tellg();
  if (!next_content_line(in, line, lineno)) throw parse_error("empty input");
  in.seekg(pos);
  std::istringstream ss(line);
  std::string kind;
  ss >> kind;
  if (kind == "freeseries") return SeriesKind::free_series;
  if (kind == "qseries") return SeriesKind::q_series;
  if (kind == "defoseries") return SeriesKind::defo_series;
  throw parse_error("unknown series kind '" + kind + "'", 1);
}

FreeSeries<ExactComplex> parse_free_series(std::istream& in) {
  long lineno = 0;
  Header h = read_header(in, "freeseries", lineno);
  int n = std::stoi(require_field(h, "n", lineno));
  int cap = std::stoi(require_field(h, "cap", lineno));
  FreeSeries<ExactComplex> f(n, cap);
  std::string line;
  while (next_content_line(in, line, lineno)) {
    auto [coeff, idx] = split_term(line, lineno);
    try {
      f.add_to(Word::parse(idx, n), ExactComplex::parse(coeff));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), lineno);
    } catch (const error& e) {
      throw parse_error(e.what(), lineno);
    }
  }
  return f;
}

ParsedQSeries parse_q_series(std::istream& in) {
  long lineno = 0;
  Header h = read_header(in, "qseries", lineno);
  int n = std::stoi(require_field(h, "n", lineno));
  int cap = std::stoi(require_field(h, "cap", lineno));
  ExactComplex q = ExactComplex::parse(require_field(h, "q", lineno));
  if (q.is_zero()) throw parse_error("q must be nonzero", lineno);
  QSeries<ExactComplex> f(n, cap);
  std::string line;
  while (next_content_line(in, line, lineno)) {
    auto [coeff, idx] = split_term(line, lineno);
    try {
      MultiIndex k = MultiIndex::parse(idx);
      if (k.n() != n) throw parse_error("multi-index dimension != n", lineno);
      f.add_to(k, ExactComplex::parse(coeff));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), lineno);
    } catch (const error& e) {
      throw parse_error(e.what(), lineno);
    }
  }
  return {std::move(f), std::move(q)};
}

DefoSeries<ExactComplex> parse_defo_series(std::istream& in) {
  long lineno = 0;
  Header h = read_header(in, "defoseries", lineno);
  int n = std::stoi(require_field(h, "n", lineno));
  int cap = std::stoi(require_field(h, "cap", lineno));
  long zwin = std::stol(require_field(h, "zwin", lineno));
  DefoSeries<ExactComplex> f(n, cap, zwin);
  std::string line;
  while (next_content_line(in, line, lineno)) {
    auto [coeff, rest] = split_term(line, lineno);
    size_t ppos = rest.rfind("p=");
    if (ppos == std::string::npos) throw parse_error("defo term missing 'p=' exponent", lineno);
    std::string idx = rest.substr(0, ppos);
    long p = std::stol(rest.substr(ppos + 2));
    try {
      MultiIndex k = MultiIndex::parse(idx);
      if (k.n() != n) throw parse_error("multi-index dimension != n", lineno);
      f.add_to({std::move(k), p}, ExactComplex::parse(coeff));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), lineno);
    } catch (const error& e) {
      throw parse_error(e.what(), lineno);
    }
  }
  return f;
}

namespace {
template <class Fn>
auto load(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return fn(in);
}
} // namespace

FreeSeries<ExactComplex> load_free_series(const std::string& path) {
  return load(path, [](std::istream& in) { return parse_free_series(in); });
}
ParsedQSeries load_q_series(const std::string& path) {
  return load(path, [](std::istream& in) { return parse_q_series(in); });
}
DefoSeries<ExactComplex> load_defo_series(const std::string& path) {
  return load(path, [](std::istream& in) { return parse_defo_series(in); });
}

std::string serialize(const FreeSeries<ExactComplex>& f) {
  std::ostringstream os;
  os << "freeseries n=" << f.alphabet() << " cap=" << f.degree_cap() << "\n";
  for (auto& [w, c] : f.terms()) os << c.str() << " " << w.str() << "\n";
  return os.str();
}

std::string serialize(const QSeries<ExactComplex>& f, const ExactComplex& q) {
  std::ostringstream os;
  os << "qseries n=" << f.n() << " cap=" << f.degree_cap() << " q=" << q.str() << "\n";
  for (auto& [k, c] : f.terms()) os << c.str() << " " << k.str() << "\n";
  return os.str();
}

std::string serialize(const DefoSeries<ExactComplex>& f) {
  std::ostringstream os;
  os << "defoseries n=" << f.n() << " cap=" << f.degree_cap() << " zwin=" << f.z_window()
     << "\n";
  for (auto& [key, c] : f.terms())
    os << c.str() << " " << key.k.str() << " p=" << key.p << "\n";
  return os.str();
}

} // namespace qdisk
