#include "sphgenus/io.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace sphgenus::io {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// Start position of every value of a syntactically valid document, keyed by JSON pointer.
class PositionIndex {
 public:
  explicit PositionIndex(std::string_view text) : text_(text) {
    value("");
  }

  [[nodiscard]] Position at(std::string pointer) const {
    while (true) {
      if (auto it = positions_.find(pointer); it != positions_.end()) return it->second;
      if (pointer.empty()) return {};
      pointer.erase(pointer.rfind('/'));
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    ++i_;
  }
  void skip_ws() {
    while (i_ < text_.size() && std::string_view(" \t\r\n").find(text_[i_]) != std::string_view::npos) advance();
  }
  std::string string_token() {
    std::string out;
    advance();  // opening quote
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\') {
        advance();
        if (i_ >= text_.size()) break;
      }
      out += text_[i_];
      advance();
    }
    if (i_ < text_.size()) advance();
    return out;
  }
  void value(const std::string& pointer) {
    skip_ws();
    if (i_ >= text_.size()) return;
    positions_.emplace(pointer, pos_);
    char c = text_[i_];
    if (c == '{') {
      advance();
      while (true) {
        skip_ws();
        if (i_ >= text_.size() || text_[i_] == '}') break;
        std::string key = string_token();
        skip_ws();
        if (i_ < text_.size()) advance();  // colon
        value(pointer + "/" + escape_token(key));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') advance();
      }
      if (i_ < text_.size()) advance();
    } else if (c == '[') {
      advance();
      for (std::size_t index = 0;; ++index) {
        skip_ws();
        if (i_ >= text_.size() || text_[i_] == ']') break;
        value(pointer + "/" + std::to_string(index));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') advance();
      }
      if (i_ < text_.size()) advance();
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[i_]) == std::string_view::npos) advance();
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
  std::map<std::string, Position> positions_;
};

/// Typed access to a parsed document with errors anchored in the source text.
class Reader {
 public:
  explicit Reader(std::string_view text) : doc_(parse(text)), index_(text) {}

  [[nodiscard]] const Json& root() const { return doc_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    Position p = index_.at(pointer);
    throw InputError(p.line, p.column, message + (pointer.empty() ? "" : " (at " + pointer + ")"));
  }

  const Json& member(const Json& obj, const std::string& pointer, const std::string& key) const {
    if (!obj.contains(key)) fail(pointer, "missing key \"" + key + "\"");
    return obj.at(key);
  }

  void require_object(const Json& node, const std::string& pointer) const {
    if (!node.is_object()) fail(pointer, "expected an object");
  }
  void require_array(const Json& node, const std::string& pointer) const {
    if (!node.is_array()) fail(pointer, "expected an array");
  }
  void allow_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        fail(pointer + "/" + escape_token(k), "unknown key \"" + k + "\"");
      }
    }
  }

  Rational rational(const Json& node, const std::string& pointer) const {
    if (node.is_number_integer()) {
      if (node.is_number_unsigned() && node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        fail(pointer, "integer out of range");
      }
      return Rational(node.get<std::int64_t>());
    }
    if (node.is_string()) {
      try {
        return Rational::parse(node.get<std::string>());
      } catch (const std::exception& e) {
        fail(pointer, std::string("malformed rational: ") + e.what());
      }
    }
    if (node.is_number()) fail(pointer, "floating-point numbers are not accepted; write \"p/q\"");
    fail(pointer, "expected an integer or a \"p/q\" string");
  }

  std::int64_t integer(const Json& node, const std::string& pointer) const {
    Rational q = rational(node, pointer);
    if (!q.is_integer()) fail(pointer, "expected an integer");
    return q.num();
  }

  std::size_t natural(const Json& node, const std::string& pointer) const {
    if (!node.is_number_integer() || node.get<std::int64_t>() < 0) fail(pointer, "expected a nonnegative integer");
    return node.get<std::size_t>();
  }

  bool boolean(const Json& node, const std::string& pointer) const {
    if (!node.is_boolean()) fail(pointer, "expected true or false");
    return node.get<bool>();
  }

  Vector vector(const Json& node, const std::string& pointer, std::optional<std::size_t> dim = {}) const {
    require_array(node, pointer);
    Vector v;
    for (std::size_t i = 0; i < node.size(); ++i) v.push_back(rational(node[i], pointer + "/" + std::to_string(i)));
    if (dim && v.size() != *dim) {
      fail(pointer, "expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(v.size()));
    }
    return v;
  }

  IntVector int_vector(const Json& node, const std::string& pointer, std::optional<std::size_t> dim = {}) const {
    Vector v = vector(node, pointer, dim);
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_integer()) fail(pointer + "/" + std::to_string(i), "expected an integer");
      out.push_back(v[i].num());
    }
    return out;
  }

  std::vector<Vector> points(const Json& node, const std::string& pointer, std::optional<std::size_t> dim = {}) const {
    require_array(node, pointer);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      out.push_back(vector(node[i], pointer + "/" + std::to_string(i), dim ? dim : (out.empty() ? std::nullopt
                                                                                          : std::optional(out[0].size()))));
    }
    return out;
  }

  Polytope polytope(const Json& node, const std::string& pointer, std::optional<std::size_t> dim = {}) const {
    try {
      if (node.is_array()) {
        if (node.size() == 2 && !node[0].is_array()) {
          Vector ends = vector(node, pointer);
          if (dim && *dim != 1) fail(pointer, "an interval literal is one-dimensional");
          return Polytope::hull(std::vector<Vector>{{ends[0]}, {ends[1]}});
        }
        auto pts = points(node, pointer, dim);
        if (pts.empty()) fail(pointer, "a polytope needs at least one vertex");
        return Polytope::hull(pts);
      }
      require_object(node, pointer);
      allow_keys(node, pointer, {"vertices", "inequalities", "equalities", "dim"});
      if (node.contains("vertices")) {
        if (node.contains("inequalities") || node.contains("equalities")) {
          fail(pointer, "give either vertices or constraints, not both");
        }
        std::optional<std::size_t> d = dim;
        if (node.contains("dim")) d = natural(node["dim"], pointer + "/dim");
        auto pts = points(node["vertices"], pointer + "/vertices", d);
        if (pts.empty()) fail(pointer + "/vertices", "a polytope needs at least one vertex");
        return Polytope::hull(pts);
      }
      std::optional<std::size_t> d = dim;
      if (node.contains("dim")) d = natural(node["dim"], pointer + "/dim");
      std::vector<Halfspace> ineqs;
      std::vector<Hyperplane> eqs;
      auto read = [&](const char* key, auto&& sink) {
        if (!node.contains(key)) return;
        const std::string p = pointer + "/" + key;
        require_array(node[key], p);
        for (std::size_t i = 0; i < node[key].size(); ++i) {
          const std::string q = p + "/" + std::to_string(i);
          const Json& row = node[key][i];
          require_object(row, q);
          allow_keys(row, q, {"normal", "offset"});
          Vector normal = vector(member(row, q, "normal"), q + "/normal", d);
          if (!d) d = normal.size();
          sink(normal, rational(member(row, q, "offset"), q + "/offset"));
        }
      };
      read("inequalities", [&](Vector n, Rational o) { ineqs.push_back({std::move(n), o}); });
      read("equalities", [&](Vector n, Rational o) { eqs.push_back({std::move(n), o}); });
      if (!d) fail(pointer, "a polytope needs \"vertices\" or constraints");
      auto p = Polytope::from_constraints(*d, ineqs, eqs);
      if (!p) fail(pointer, "constraints define the empty set");
      return *p;
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(pointer, e.what());
    }
  }

  RootSystem root_system(const Json& node, const std::string& pointer) const {
    try {
      if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'a') &&
            std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          return RootSystem::type_a(std::stoul(s.substr(1)));
        }
        fail(pointer, "unknown root system \"" + s + "\"");
      }
      require_object(node, pointer);
      if (node.contains("type")) {
        allow_keys(node, pointer, {"type", "n"});
        const Json& t = node["type"];
        if (!t.is_string() || (t != "A" && t != "a")) fail(pointer + "/type", "only type \"A\" is built in");
        return RootSystem::type_a(natural(member(node, pointer, "n"), pointer + "/n"));
      }
      allow_keys(node, pointer, {"positive_roots", "pairing", "rank"});
      std::optional<std::size_t> r;
      if (node.contains("rank")) r = natural(node["rank"], pointer + "/rank");
      Matrix pairing;
      if (node.contains("pairing")) {
        pairing = points(node["pairing"], pointer + "/pairing");
        if (r && pairing.size() != *r) fail(pointer + "/pairing", "pairing size does not match the rank");
        r = pairing.size();
      }
      auto roots = points(member(node, pointer, "positive_roots"), pointer + "/positive_roots", r);
      if (!r) {
        if (roots.empty()) fail(pointer, "give \"rank\" for a root system without roots");
        r = roots[0].size();
      }
      if (!node.contains("pairing")) return RootSystem(*r, roots);
      return RootSystem(*r, roots, pairing);
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(pointer, e.what());
    }
  }

  std::vector<IntVector> basis(const Json& node, const std::string& pointer, std::size_t r) const {
    require_array(node, pointer);
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < node.size(); ++i) out.push_back(int_vector(node[i], pointer + "/" + std::to_string(i), r));
    try {
      (void)ShiftedLattice(r, out, zero_vector(r));
    } catch (const std::invalid_argument& e) {
      fail(pointer, e.what());
    }
    return out;
  }

  void string_cone(const Json& obj, const std::string& pointer, ConeChoice& choice, StringCone& custom,
                   std::size_t r) const {
    if (!obj.contains("string_cone")) return;
    const Json& node = obj["string_cone"];
    const std::string p = pointer + "/string_cone";
    if (node.is_string()) {
      if (node == "GZ" || node == "gz") choice = ConeChoice::gz;
      else if (node == "none") choice = ConeChoice::none;
      else fail(p, "expected \"GZ\", \"none\" or an explicit cone");
      return;
    }
    require_object(node, p);
    allow_keys(node, p, {"fiber_dim", "rows"});
    custom.weight_dim = r;
    custom.fiber_dim = natural(member(node, p, "fiber_dim"), p + "/fiber_dim");
    custom.rows = points(member(node, p, "rows"), p + "/rows", r + custom.fiber_dim);
    choice = ConeChoice::custom;
  }

 private:
  static Json parse(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      Position p;
      std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
          ++p.line;
          p.column = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
          ++p.column;
        }
      }
      std::string what = e.what();
      if (auto colon = what.find("parse error"); colon != std::string::npos) {
        if (auto msg = what.find(": ", colon); msg != std::string::npos) what = what.substr(msg + 2);
      }
      throw InputError(p.line, p.column, "syntax error: " + what);
    }
  }

  Json doc_;
  PositionIndex index_;
};

std::vector<IntVector> standard_basis(std::size_t r) {
  std::vector<IntVector> b;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector v(r, 0);
    v[i] = 1;
    b.push_back(std::move(v));
  }
  return b;
}

std::size_t expect_length(const Reader& rd, const Json& node, const std::string& pointer, std::size_t k,
                          const char* what) {
  rd.require_array(node, pointer);
  if (node.size() != k) {
    rd.fail(pointer, std::string("\"k\" is ") + std::to_string(k) + " but there are " + std::to_string(node.size()) +
                         " " + what);
  }
  return k;
}

Scenario read_scenario(const Reader& rd) {
  const Json& root = rd.root();
  rd.require_object(root, "");
  const Json& kind_node = rd.member(root, "", "kind");
  if (!kind_node.is_string()) rd.fail("/kind", "expected a string");
  const std::string kind = kind_node.get<std::string>();
  const std::size_t k = rd.natural(rd.member(root, "", "k"), "/k");
  if (k < 1) rd.fail("/k", "a scenario needs at least one linear system");
  if (k > kMaxSystems) rd.fail("/k", "at most " + std::to_string(kMaxSystems) + " linear systems are supported");

  auto systems = [&](const char* key, const char* what) -> const Json& {
    const Json& node = rd.member(root, "", key);
    expect_length(rd, node, std::string("/") + key, k, what);
    return node;
  };
  auto item = [](const char* key, std::size_t i) { return std::string("/") + key + "/" + std::to_string(i); };

  if (kind == "toric") {
    rd.allow_keys(root, "", {"kind", "k", "n", "supports"});
    ToricScenario t;
    t.n = rd.natural(rd.member(root, "", "n"), "/n");
    const Json& sup = systems("supports", "supports");
    for (std::size_t i = 0; i < k; ++i) t.supports.push_back(rd.points(sup[i], item("supports", i), t.n));
    return Scenario{t};
  }
  if (kind == "flag") {
    rd.allow_keys(root, "", {"kind", "k", "root_system", "weights"});
    RootSystem rs = rd.root_system(rd.member(root, "", "root_system"), "/root_system");
    const Json& ws = systems("weights", "weights");
    FlagScenario f{rs, {}};
    for (std::size_t i = 0; i < k; ++i) f.weights.push_back(rd.vector(ws[i], item("weights", i), rs.rank_ambient()));
    return Scenario{f};
  }
  if (kind == "group") {
    rd.allow_keys(root, "", {"kind", "k", "root_system", "representations", "lattice"});
    RootSystem rs = rd.root_system(rd.member(root, "", "root_system"), "/root_system");
    const std::size_t r = rs.rank_ambient();
    const Json& reps = systems("representations", "representations");
    GroupScenario g{rs, {}, std::nullopt};
    for (std::size_t i = 0; i < k; ++i) g.representations.push_back(rd.points(reps[i], item("representations", i), r));
    if (root.contains("lattice")) g.lattice_basis = rd.basis(root["lattice"], "/lattice", r);
    return Scenario{g};
  }
  if (kind == "horospherical") {
    rd.allow_keys(root, "",
                  {"kind", "k", "root_system", "lattice", "weights", "shifts", "string_cone", "variety_dim"});
    RootSystem rs = rd.root_system(rd.member(root, "", "root_system"), "/root_system");
    const std::size_t r = rs.rank_ambient();
    HorosphericalScenario h{rs, standard_basis(r), {}, {}, ConeChoice::gz, {}, std::nullopt};
    h.cone = rs.type_a_rank() ? ConeChoice::gz : ConeChoice::none;
    if (root.contains("lattice")) h.lattice_basis = rd.basis(root["lattice"], "/lattice", r);
    const Json& ws = systems("weights", "weight sets");
    for (std::size_t i = 0; i < k; ++i) h.weights.push_back(rd.points(ws[i], item("weights", i), r));
    if (root.contains("shifts")) {
      const Json& sh = systems("shifts", "shifts");
      for (std::size_t i = 0; i < k; ++i) h.shifts.push_back(rd.vector(sh[i], item("shifts", i), r));
    } else {
      h.shifts.assign(k, zero_vector(r));
    }
    rd.string_cone(root, "", h.cone, h.custom_cone, r);
    if (root.contains("variety_dim")) h.variety_dim = rd.natural(root["variety_dim"], "/variety_dim");
    return Scenario{h};
  }
  if (kind == "generic_spherical") {
    rd.allow_keys(root, "", {"kind", "k", "root_system", "lattice", "shifts", "additive", "moment_polytopes",
                             "string_cone", "variety_dim"});
    RootSystem rs = rd.root_system(rd.member(root, "", "root_system"), "/root_system");
    const std::size_t r = rs.rank_ambient();
    GenericSphericalScenario g{rs, standard_basis(r), {}, false, {}, ConeChoice::none, {}, std::nullopt};
    if (root.contains("lattice")) g.lattice_basis = rd.basis(root["lattice"], "/lattice", r);
    if (root.contains("shifts")) {
      const Json& sh = systems("shifts", "shifts");
      for (std::size_t i = 0; i < k; ++i) g.shifts.push_back(rd.vector(sh[i], item("shifts", i), r));
    } else {
      g.shifts.assign(k, zero_vector(r));
    }
    if (root.contains("additive")) g.additive = rd.boolean(root["additive"], "/additive");
    const Json& mp = rd.member(root, "", "moment_polytopes");
    rd.require_array(mp, "/moment_polytopes");
    for (std::size_t i = 0; i < mp.size(); ++i) {
      const std::string p = item("moment_polytopes", i);
      rd.require_object(mp[i], p);
      rd.allow_keys(mp[i], p, {"subset", "polytope"});
      const Json& sj = rd.member(mp[i], p, "subset");
      rd.require_array(sj, p + "/subset");
      Subset j;
      for (std::size_t t = 0; t < sj.size(); ++t) {
        std::size_t v = rd.natural(sj[t], p + "/subset/" + std::to_string(t));
        if (v < 1 || v > k) rd.fail(p + "/subset/" + std::to_string(t), "index out of range 1.." + std::to_string(k));
        j.push_back(v);
      }
      if (j.empty()) rd.fail(p + "/subset", "subsets are nonempty");
      std::sort(j.begin(), j.end());
      if (std::adjacent_find(j.begin(), j.end()) != j.end()) rd.fail(p + "/subset", "repeated index");
      if (g.moment_polytopes.count(j)) rd.fail(p + "/subset", "subset listed twice");
      g.moment_polytopes.emplace(j, rd.polytope(rd.member(mp[i], p, "polytope"), p + "/polytope", r));
    }
    rd.string_cone(root, "", g.cone, g.custom_cone, r);
    if (root.contains("variety_dim")) g.variety_dim = rd.natural(root["variety_dim"], "/variety_dim");
    return Scenario{g};
  }
  rd.fail("/kind", "unknown kind \"" + kind + "\"");
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.is_integer() ? Json(x.num()) : Json(x.str()));
  return a;
}

Json points_json(const std::vector<Vector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(vector_json(p));
  return a;
}

Json root_system_json(const RootSystem& rs) {
  if (rs.type_a_rank()) return Json{{"type", "A"}, {"n", *rs.type_a_rank()}};
  return Json{{"rank", rs.rank_ambient()},
              {"positive_roots", points_json(rs.positive_roots())},
              {"pairing", points_json(rs.pairing())}};
}

Json basis_json(const std::vector<IntVector>& b) {
  Json a = Json::array();
  for (const auto& v : b) a.push_back(vector_json(to_vector(v)));
  return a;
}

Json cone_json(ConeChoice c, const StringCone& custom) {
  switch (c) {
    case ConeChoice::gz:
      return "GZ";
    case ConeChoice::none:
      return "none";
    case ConeChoice::custom:
      break;
  }
  return Json{{"fiber_dim", custom.fiber_dim}, {"rows", points_json(custom.rows)}};
}

Json subset_json(const Subset& j) {
  Json a = Json::array();
  for (auto i : j) a.push_back(i);
  return a;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string status_name(Hp0Status s) { return s == Hp0Status::exact ? "exact" : "upper_bound"; }

}  // namespace

InputError::InputError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Scenario parse_scenario(std::string_view text) {
  Reader rd(text);
  Scenario s = read_scenario(rd);
  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    rd.fail("", e.what());
  }
  return s;
}

Polytope parse_polytope(std::string_view text) {
  Reader rd(text);
  if (rd.root().is_object() && rd.root().contains("polytope")) return rd.polytope(rd.root()["polytope"], "/polytope");
  return rd.polytope(rd.root(), "");
}

std::vector<Polytope> parse_polytope_list(std::string_view text) {
  Reader rd(text);
  const bool wrapped = rd.root().is_object();
  if (wrapped) rd.allow_keys(rd.root(), "", {"polytopes"});
  const std::string base = wrapped ? "/polytopes" : "";
  const Json& list = wrapped ? rd.member(rd.root(), "", "polytopes") : rd.root();
  rd.require_array(list, base);
  std::vector<Polytope> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(rd.polytope(list[i], base + "/" + std::to_string(i)));
  return out;
}

RootSystem parse_root_system(std::string_view text) {
  std::string buffer;
  if (!text.empty() && text.front() != '{' && text.front() != '"') {
    buffer = "\"" + std::string(text) + "\"";
    text = buffer;
  }
  Reader rd(text);
  return rd.root_system(rd.root(), "");
}

ShiftedLattice parse_lattice(std::string_view text, std::size_t ambient_dim) {
  Reader rd(text);
  const Json& root = rd.root();
  rd.require_object(root, "");
  rd.allow_keys(root, "", {"basis", "shift"});
  std::vector<IntVector> basis =
      root.contains("basis") ? rd.basis(root["basis"], "/basis", ambient_dim) : standard_basis(ambient_dim);
  Vector shift = root.contains("shift") ? rd.vector(root["shift"], "/shift", ambient_dim) : zero_vector(ambient_dim);
  return ShiftedLattice(ambient_dim, basis, shift);
}

Json rational_to_json(const Rational& q) { return q.str(); }

Json polytope_to_json(const Polytope& p) {
  return Json{{"dim", p.ambient_dim()}, {"vertices", points_json(p.vertices())}};
}

Json polytope_constraints_json(const Polytope& p) {
  Json ineqs = Json::array(), eqs = Json::array();
  for (const auto& h : p.inequalities()) ineqs.push_back({{"normal", vector_json(h.normal)}, {"offset", h.offset.str()}});
  for (const auto& h : p.equalities()) eqs.push_back({{"normal", vector_json(h.normal)}, {"offset", h.offset.str()}});
  return Json{{"dim", p.ambient_dim()}, {"inequalities", ineqs}, {"equalities", eqs}};
}

Json scenario_to_json(const Scenario& s) {
  Json out{{"kind", s.kind()}, {"k", s.k()}};
  std::visit(overloaded{
                 [&](const ToricScenario& t) {
                   out["n"] = t.n;
                   Json sup = Json::array();
                   for (const auto& a : t.supports) sup.push_back(points_json(a));
                   out["supports"] = sup;
                 },
                 [&](const FlagScenario& f) {
                   out["root_system"] = root_system_json(f.root_system);
                   out["weights"] = points_json(f.weights);
                 },
                 [&](const GroupScenario& g) {
                   out["root_system"] = root_system_json(g.root_system);
                   Json reps = Json::array();
                   for (const auto& r : g.representations) reps.push_back(points_json(r));
                   out["representations"] = reps;
                   if (g.lattice_basis) out["lattice"] = basis_json(*g.lattice_basis);
                 },
                 [&](const HorosphericalScenario& h) {
                   out["root_system"] = root_system_json(h.root_system);
                   out["lattice"] = basis_json(h.lattice_basis);
                   Json ws = Json::array();
                   for (const auto& w : h.weights) ws.push_back(points_json(w));
                   out["weights"] = ws;
                   out["shifts"] = points_json(h.shifts);
                   out["string_cone"] = cone_json(h.cone, h.custom_cone);
                   if (h.variety_dim) out["variety_dim"] = *h.variety_dim;
                 },
                 [&](const GenericSphericalScenario& g) {
                   out["root_system"] = root_system_json(g.root_system);
                   out["lattice"] = basis_json(g.lattice_basis);
                   out["shifts"] = points_json(g.shifts);
                   out["additive"] = g.additive;
                   Json mp = Json::array();
                   for (const auto& [j, p] : g.moment_polytopes) {
                     mp.push_back({{"subset", subset_json(j)}, {"polytope", polytope_to_json(p)}});
                   }
                   out["moment_polytopes"] = mp;
                   out["string_cone"] = cone_json(g.cone, g.custom_cone);
                   if (g.variety_dim) out["variety_dim"] = *g.variety_dim;
                 },
             },
             s.data);
  return out;
}

Json hp0_to_json(const GenusReport& r) {
  Json a = Json::array();
  for (const auto& e : r.hp0) {
    Json row{{"p", e.p}, {"status", status_name(e.status)}};
    if (e.value) row["value"] = e.value->str();
    if (e.bound) row["bound"] = e.bound->str();
    a.push_back(row);
  }
  return a;
}

Json report_to_json(const Scenario& s, const GenusReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"subset", subset_json(row.subset)},
           {"moment_dim", row.moment_dim},
           {"weight_degree", row.weight_degree},
           {"no_dim", row.no_dim},
           {"defect", row.defect},
           {"term", row.term.str()},
           {"interior", row.interior.str()}};
    if (row.cross_term) j["cross_term"] = row.cross_term->str();
    rows.push_back(j);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  Json critical = Json::array();
  for (auto c : r.critical_numbers) critical.push_back(c);
  return Json{{"scenario", scenario_to_json(s)},
              {"kind", r.kind},
              {"k", r.k},
              {"variety_dim", r.variety_dim},
              {"independent", r.independent},
              {"chi", r.chi ? Json(r.chi->str()) : Json(nullptr)},
              {"rows", rows},
              {"critical_numbers", critical},
              {"hp0", hp0_to_json(r)},
              {"checks", checks}};
}

Json defects_to_json(const Scenario& s, const std::map<Subset, std::int64_t>& d) {
  Json rows = Json::array();
  bool independent = true;
  for (const auto& j : nonempty_subsets(s.k())) {
    rows.push_back({{"subset", subset_json(j)}, {"defect", d.at(j)}});
    independent = independent && d.at(j) >= 0;
  }
  return Json{{"kind", s.kind()}, {"k", s.k()}, {"independent", independent}, {"defects", rows}};
}

std::string format_subset(const Subset& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + "}";
}

std::string format_defects(const std::map<Subset, std::int64_t>& d) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "J" << "d(J)\n";
  bool independent = true;
  std::vector<Subset> order;
  for (const auto& [j, v] : d) order.push_back(j);
  std::sort(order.begin(), order.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& j : order) {
    os << std::setw(14) << format_subset(j) << d.at(j) << (d.at(j) < 0 ? "  <- negative" : "") << '\n';
    independent = independent && d.at(j) >= 0;
  }
  os << "independent: " << (independent ? "yes" : "no") << '\n';
  return os.str();
}

std::string format_hp0(const GenusReport& r) {
  std::ostringstream os;
  for (const auto& e : r.hp0) {
    os << "h^{" << e.p << ",0} ";
    if (e.status == Hp0Status::exact) os << "= " << e.value->str() << "  (exact)\n";
    else os << "<= " << e.bound->str() << "  (upper bound)\n";
  }
  return os.str();
}

std::string format_report(const GenusReport& r) {
  std::ostringstream os;
  os << "kind: " << r.kind << "   k: " << r.k << "   variety dimension: " << r.variety_dim << "\n\n";
  os << std::left << std::setw(12) << "J" << std::setw(7) << "dim" << std::setw(5) << "d_J" << std::setw(8) << "dim~"
     << std::setw(8) << "defect" << std::setw(12) << "term" << std::setw(12) << "interior" << "cross\n";
  for (const auto& row : r.rows) {
    os << std::setw(12) << format_subset(row.subset) << std::setw(7) << row.moment_dim << std::setw(5)
       << row.weight_degree << std::setw(8) << row.no_dim << std::setw(8) << row.defect << std::setw(12)
       << row.term.str() << std::setw(12) << row.interior.str() << (row.cross_term ? row.cross_term->str() : "-")
       << '\n';
  }
  os << "\nindependent: " << (r.independent ? "yes" : "no") << '\n';
  if (!r.independent) return os.str();
  os << "chi: " << r.chi->str() << '\n';
  os << "critical numbers: {";
  bool first = true;
  for (auto c : r.critical_numbers) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  os << "}\n" << format_hp0(r);
  for (const auto& c : r.checks) {
    if (!c.ok) os << "CHECK FAILED: " << c.name << ": " << c.detail << '\n';
  }
  return os.str();
}

}  // namespace sphgenus::io
