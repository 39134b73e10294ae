#include "linecon/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "linecon/errors.hpp"

namespace linecon {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("expected an integer in \"" + std::string(whole) + "\"");
  return v;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Congruence parse_congruence(int n, std::string_view text) {
  if (n < 0) throw ParseError("n must be nonnegative");
  const auto t = trim(text);
  if (t == "id" || t == "identity") return Congruence::identity(n);
  if (t == "total") return Congruence::total(n);
  const auto semi = t.find(';');
  const int k = parse_int(t.substr(0, semi), text);
  std::vector<int> rests;
  if (semi != std::string_view::npos) {
    auto rest = t.substr(semi + 1);
    while (true) {
      const auto comma = rest.find(',');
      rests.push_back(parse_int(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto rep = validate(n, k, rests);
  if (!rep.ok())
    throw ParseError("\"" + std::string(text) + "\" is not a congruence of L_" + std::to_string(n) +
                     ": " + rep.summary());
  return Congruence::folded(n, k, std::move(rests));
}

nlohmann::ordered_json to_json(const Congruence& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n();
  switch (c.kind()) {
    case Kind::Identity: j["kind"] = "identity"; break;
    case Kind::Total: j["kind"] = "total"; break;
    case Kind::Folded:
      j["kind"] = "folded";
      j["k"] = c.step();
      j["rests"] = c.rests();
      break;
  }
  j["step"] = c.step();
  if (!c.is_total()) j["frequency"] = frequency(c);
  return j;
}

Congruence congruence_from_json(const nlohmann::ordered_json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto kind = j.at("kind").get<std::string>();
    if (n < 0) throw ParseError("n must be nonnegative");
    Congruence c = Congruence::total(n);
    if (kind == "identity") {
      c = Congruence::identity(n);
    } else if (kind == "total") {
      c = Congruence::total(n);
    } else if (kind == "folded") {
      const int k = j.at("k").get<int>();
      auto rests = j.contains("rests") ? j.at("rests").get<std::vector<int>>() : std::vector<int>{};
      auto rep = validate(n, k, rests);
      if (!rep.ok()) throw ParseError("invalid congruence: " + rep.summary());
      c = Congruence::folded(n, k, std::move(rests));
    } else {
      throw ParseError("unknown kind \"" + kind + "\"");
    }
    if (j.contains("step") && j.at("step").get<int>() != c.step())
      throw ParseError("step field disagrees with the congruence");
    if (j.contains("frequency") && (c.is_total() || j.at("frequency").get<int>() != frequency(c)))
      throw ParseError("frequency field disagrees with the congruence");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed congruence JSON: ") + e.what());
  }
}

std::string format_table(const std::vector<Congruence>& cs) {
  std::ostringstream os;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c,
                 const std::string& d, const std::string& e) {
    std::string line;
    auto pad = [](std::string s, std::size_t w) { return s.size() < w ? s + std::string(w - s.size(), ' ') : s + ' '; };
    line = pad(a, 16) + pad(b, 6) + pad(c, 6) + pad(d, 16) + e;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  row("form", "step", "freq", "rests", "extremes");
  for (const auto& c : cs) {
    const bool t = c.is_total();
    row(to_string(c), std::to_string(c.step()), t ? "-" : std::to_string(frequency(c)),
        c.rests().empty() ? "-" : join_ints(c.rests()), t ? "-" : join_ints(extremes(c)));
  }
  return os.str();
}

std::string lattice_to_dot(const oracle::CongruenceLattice& lat) {
  std::ostringstream os;
  os << "digraph \"Con L_" << lat.n << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<std::string> names;
  for (const auto& p : lat.elements) names.push_back(to_string(canonicalize(p)));
  for (int i = 0; i < lat.size(); ++i) os << "  \"" << names[i] << "\";\n";
  for (auto [a, b] : lat.covers) os << "  \"" << names[a] << "\" -> \"" << names[b] << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json lattice_to_json(const oracle::CongruenceLattice& lat) {
  nlohmann::ordered_json j;
  j["n"] = lat.n;
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& p : lat.elements) {
    auto e = to_json(canonicalize(p));
    e["form"] = to_string(canonicalize(p));
    j["elements"].push_back(e);
  }
  j["covers"] = nlohmann::ordered_json::array();
  for (auto [a, b] : lat.covers) j["covers"].push_back({a, b});
  j["bottom"] = lat.bottom;
  j["top"] = lat.top;
  j["meet"] = lat.meet_table;
  j["join"] = lat.join_table;
  return j;
}

}  // namespace linecon
