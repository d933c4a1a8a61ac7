#include "qbank/configio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace qbank::configio {

using linalg::cplx;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_complex(cplx v) {
  std::string out = format_double(v.real());
  const double im = v.imag();
  if (!std::signbit(im)) out += "+";
  out += format_double(im);
  out += "i";
  return out;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError("bad number: '" + text + "'");
  return v;
}

cplx parse_complex(const std::string& text) {
  if (text.empty() || text.back() != 'i') throw ConfigError("bad complex literal: '" + text + "'");
  const std::string body = text.substr(0, text.size() - 1);
  // split at the sign that separates the parts (not a leading sign, not an
  // exponent sign)
  size_t split = std::string::npos;
  for (size_t i = 1; i < body.size(); ++i) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
  }
  if (split == std::string::npos) throw ConfigError("bad complex literal: '" + text + "'");
  const double re = parse_double(body.substr(0, split));
  const std::string im_text = body[split] == '+' ? body.substr(split + 1) : body.substr(split);
  return {re, parse_double(im_text)};
}

namespace {

void dump_bank(std::ostringstream& os, const char* section, const bank::BankParams& b) {
  os << "[" << section << "] omega=" << format_double(b.omega)
     << " lambda=" << format_double(b.lambda) << " Omega=" << format_double(b.Omega)
     << " N=" << format_double(b.Nres) << "\n";
}

}  // namespace

std::string dump(const scen::ScenarioSpec& spec) {
  std::ostringstream os;
  os << "[scenario] name=" << spec.name << "\n";
  dump_bank(os, "bank1", spec.model.bank1);
  dump_bank(os, "bank2", spec.model.bank2);
  os << "[coupling] mu_acm=" << format_double(spec.model.coupling.mu_acm)
     << " mu_cm=" << format_double(spec.model.coupling.mu_cm) << "\n";
  const bank::InitialState& a = spec.model.initial;
  os << "[initial] a00=" << format_complex(a.a00()) << " a10=" << format_complex(a.a10())
     << " a01=" << format_complex(a.a01()) << " a11=" << format_complex(a.a11()) << "\n";
  os << "[grid] t_max=" << format_double(spec.grid.t_max) << " points=" << spec.grid.points
     << "\n";
  if (!spec.tags.empty()) {
    os << "[tags]";
    for (scen::Tag t : spec.tags) os << " " << scen::tag_name(t);
    os << "\n";
  }
  return os.str();
}

scen::ScenarioSpec parse(const std::string& text) {
  scen::ScenarioSpec spec;
  spec.name = "custom";
  spec.grid = {10.0, 1001};

  std::map<std::string, std::map<std::string, std::string>> kv;
  std::vector<std::string> tag_words;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      if (word.front() == '[') {
        if (word.back() != ']') throw ConfigError("line " + std::to_string(lineno) +
                                                  ": malformed section tag '" + word + "'");
        section = word.substr(1, word.size() - 2);
        continue;
      }
      if (section == "tags") {
        tag_words.push_back(word);
        continue;
      }
      const size_t eq = word.find('=');
      if (eq == std::string::npos || section.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": expected key=value, got '" +
                          word + "'");
      kv[section][word.substr(0, eq)] = word.substr(eq + 1);
    }
  }

  auto take = [&](const std::string& sec, const std::string& key,
                  bool required) -> const std::string* {
    auto s = kv.find(sec);
    if (s == kv.end()) {
      if (required) throw ConfigError("missing section [" + sec + "]");
      return nullptr;
    }
    auto k = s->second.find(key);
    if (k == s->second.end()) {
      if (required) throw ConfigError("missing key '" + key + "' in [" + sec + "]");
      return nullptr;
    }
    return &k->second;
  };

  static const std::map<std::string, std::vector<std::string>> known = {
      {"scenario", {"name"}},
      {"bank1", {"omega", "lambda", "Omega", "N"}},
      {"bank2", {"omega", "lambda", "Omega", "N"}},
      {"coupling", {"mu_acm", "mu_cm"}},
      {"initial", {"a00", "a10", "a01", "a11"}},
      {"grid", {"t_max", "points"}}};
  for (const auto& [sec, keys] : kv) {
    auto it = known.find(sec);
    if (it == known.end()) throw ConfigError("unknown section [" + sec + "]");
    for (const auto& [key, value] : keys) {
      (void)value;
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw ConfigError("unknown key '" + key + "' in [" + sec + "]");
    }
  }

  if (const std::string* v = take("scenario", "name", false)) spec.name = *v;

  auto parse_bank = [&](const char* sec) {
    bank::BankParams b;
    b.omega = parse_double(*take(sec, "omega", true));
    b.lambda = parse_double(*take(sec, "lambda", true));
    b.Omega = parse_double(*take(sec, "Omega", true));
    b.Nres = parse_double(*take(sec, "N", true));
    return b;
  };
  spec.model.bank1 = parse_bank("bank1");
  spec.model.bank2 = parse_bank("bank2");
  spec.model.coupling.mu_acm = parse_double(*take("coupling", "mu_acm", true));
  spec.model.coupling.mu_cm = parse_double(*take("coupling", "mu_cm", true));

  const cplx a00 = parse_complex(*take("initial", "a00", true));
  const cplx a10 = parse_complex(*take("initial", "a10", true));
  const cplx a01 = parse_complex(*take("initial", "a01", true));
  const cplx a11 = parse_complex(*take("initial", "a11", true));
  try {
    spec.model.initial = bank::InitialState::from_amplitudes(a00, a10, a01, a11);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  spec.grid.t_max = parse_double(*take("grid", "t_max", true));
  const double pts = parse_double(*take("grid", "points", true));
  spec.grid.points = static_cast<int>(pts);
  if (spec.grid.points != pts || spec.grid.points < 2)
    throw ConfigError("grid points must be an integer >= 2");
  if (!(spec.grid.t_max > 0.0)) throw ConfigError("t_max must be positive");

  for (const std::string& w : tag_words) {
    try {
      spec.tags.insert(scen::tag_from_name(w));
    } catch (const std::out_of_range& e) {
      throw ConfigError(e.what());
    }
  }

  try {
    bank::check_spec(spec.model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

scen::ScenarioSpec load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace qbank::configio
