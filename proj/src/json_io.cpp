#include "kempe/json_io.hpp"

#include "kempe/graph_io.hpp"

namespace kempe {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!v.is_number_integer()) throw FormatError("");
      if constexpr (std::is_unsigned_v<T>)
        if (v.get<long long>() < 0) throw FormatError("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<int> int_array(const Json& a, const char* what) {
  std::vector<int> out;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw FormatError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json vertices_json(const std::vector<Vertex>& v) { return Json(v); }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json coloring_to_json(const Coloring& c) {
  return Json{{"k", c.k()}, {"colors", c.colors()}};
}

Coloring coloring_from_json(const Json& j) {
  const int k = get<int>(j, "k");
  if (k < 1) throw FormatError("colouring: k must be positive");
  try {
    return Coloring(k, int_array(array_field(j, "colors"), "colors"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("colouring: ") + e.what());
  }
}

Json move_to_json(const KempeMove& m) { return Json{{"anchor", m.anchor}, {"a", m.a}, {"b", m.b}}; }

KempeMove move_from_json(const Json& j) {
  const int anchor = get<int>(j, "anchor");
  if (anchor < 0) throw FormatError("move: negative anchor");
  try {
    return KempeMove(anchor, get<int>(j, "a"), get<int>(j, "b"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("move: ") + e.what());
  }
}

Json sequence_to_json(const KempeSequence& s) {
  Json moves = Json::array();
  for (const auto& m : s.moves) moves.push_back(move_to_json(m));
  return Json{{"start", coloring_to_json(s.start)}, {"moves", std::move(moves)}};
}

KempeSequence sequence_from_json(const Json& j) {
  KempeSequence s{coloring_from_json(field(j, "start")), {}};
  for (const auto& m : array_field(j, "moves")) {
    s.moves.push_back(move_from_json(m));
    const auto& mv = s.moves.back();
    if (mv.anchor >= s.start.order() || mv.b > s.start.k())
      throw FormatError("move out of range for the start colouring");
  }
  return s;
}

Json trace_to_json(const SolveTrace& t, std::size_t moves) {
  Json subs = Json::array();
  for (const auto& p : t.subproblems)
    subs.push_back(Json{{"kind", p.kind}, {"vertices", vertices_json(p.vertices)}});
  return Json{{"cases", t.cases}, {"moves", moves}, {"subproblems", std::move(subs)}};
}

SolveTrace trace_from_json(const Json& j) {
  SolveTrace t;
  for (const auto& c : array_field(j, "cases")) {
    if (!c.is_string()) throw FormatError("trace cases must be strings");
    t.cases.push_back(c.get<std::string>());
  }
  (void)get<std::size_t>(j, "moves");
  for (const auto& p : array_field(j, "subproblems"))
    t.subproblems.push_back({get<std::string>(p, "kind"),
                             int_array(array_field(p, "vertices"), "vertices")});
  return t;
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"graph6", v.graph6},
         {"n", v.n},
         {"colorings", v.colorings},
         {"classes", v.classes},
         {"sizes", v.sizes},
         {"verdict", v.skipped ? "SKIPPED" : v.pass ? "PASS" : "FAIL"},
         {"kind", to_string(v.kind)}};
  if (!v.error.empty()) j["error"] = v.error;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.graph6 = get<std::string>(j, "graph6");
  v.n = get<int>(j, "n");
  v.colorings = get<std::size_t>(j, "colorings");
  v.classes = get<std::size_t>(j, "classes");
  for (int s : int_array(array_field(j, "sizes"), "sizes")) {
    if (s < 0) throw FormatError("class sizes must be non-negative");
    v.sizes.push_back(static_cast<std::size_t>(s));
  }
  const auto verdict = get<std::string>(j, "verdict");
  if (verdict == "PASS") v.pass = true;
  else if (verdict == "SKIPPED") v.skipped = true;
  else if (verdict != "FAIL") throw FormatError("unknown verdict \"" + verdict + "\"");
  const auto kind = get<std::string>(j, "kind");
  if (kind == "K4") v.kind = GraphKind::k4;
  else if (kind == "prism") v.kind = GraphKind::prism;
  else if (kind == "other") v.kind = GraphKind::other;
  else throw FormatError("unknown graph kind \"" + kind + "\"");
  if (j.contains("error")) v.error = get<std::string>(j, "error");
  return v;
}

Json summary_to_json(const VerifySummary& s) {
  return Json{{"summary", s.text()},
              {"graphs", s.graphs},
              {"passed", s.passed},
              {"failed", s.failed},
              {"skipped", s.skipped}};
}

VerifySummary summary_from_json(const Json& j) {
  VerifySummary s;
  s.graphs = get<std::size_t>(j, "graphs");
  s.passed = get<std::size_t>(j, "passed");
  s.failed = get<std::size_t>(j, "failed");
  s.skipped = get<std::size_t>(j, "skipped");
  if (s.passed + s.failed + s.skipped != s.graphs) throw FormatError("summary totals disagree");
  if (get<std::string>(j, "summary") != s.text()) throw FormatError("summary text disagrees");
  return s;
}

Json class_report_to_json(const ClassReport& r) {
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(c.colors());
  return Json{{"graph6", r.graph_id},   {"k", r.k},         {"colorings", r.colorings},
              {"classes", r.classes},   {"sizes", r.sizes}, {"representatives", std::move(reps)}};
}

ClassReport class_report_from_json(const Json& j) {
  ClassReport r;
  r.graph_id = get<std::string>(j, "graph6");
  r.k = get<int>(j, "k");
  r.colorings = get<std::size_t>(j, "colorings");
  r.classes = get<std::size_t>(j, "classes");
  std::size_t total = 0;
  for (int s : int_array(array_field(j, "sizes"), "sizes")) {
    if (s <= 0) throw FormatError("class sizes must be positive");
    r.sizes.push_back(static_cast<std::size_t>(s));
    total += static_cast<std::size_t>(s);
  }
  for (const auto& c : array_field(j, "representatives")) {
    if (!c.is_array()) throw FormatError("representatives must be colour arrays");
    try {
      r.representatives.emplace_back(r.k, int_array(c, "representatives"));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("representative: ") + e.what());
    }
  }
  if (r.sizes.size() != r.classes || r.representatives.size() != r.classes || total != r.colorings)
    throw FormatError("class report is inconsistent");
  return r;
}

namespace {

template <typename T, typename Fn>
Json optional_json(const std::optional<T>& v, Fn fn) {
  return v ? fn(*v) : Json(nullptr);
}

template <typename T, typename Fn>
std::optional<T> optional_from(const Json& j, const char* key, Fn fn) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return fn(v);
}

const char* motif_name(Motif m) { return m == Motif::house ? "house" : "diamond"; }

}  // namespace

Json structure_to_json(const StructureReport& r) {
  auto motif = [](const MotifEmbedding& e) { return Json(e.vertices); };
  return Json{
      {"graph6", r.graph6},
      {"n", r.n},
      {"m", r.m},
      {"cubic", r.cubic},
      {"connected", r.connected},
      {"three_connected", r.three_connected},
      {"k4", r.k4},
      {"prism", r.prism},
      {"degeneracy", r.degeneracy},
      {"triangles", r.triangles},
      {"separator", optional_json(r.separator,
                                  [](const Separator& s) {
                                    return Json{{"vertices", s.vertices},
                                                {"side_a", s.side_a},
                                                {"side_b", s.side_b},
                                                {"clique", s.is_clique}};
                                  })},
      {"claw", optional_json(r.claw,
                             [](const ClawEmbedding& c) {
                               return Json{{"center", c.center}, {"s", c.s}, {"u", c.u}, {"v", c.v}};
                             })},
      {"net", optional_json(r.net,
                            [](const NetEmbedding& e) {
                              return Json{{"t", {e.x, e.y, e.z}}, {"p", {e.xp, e.yp, e.zp}}};
                            })},
      {motif_name(Motif::house), optional_json(r.house, motif)},
      {motif_name(Motif::diamond), optional_json(r.diamond, motif)},
  };
}

StructureReport structure_from_json(const Json& j) {
  StructureReport r;
  r.graph6 = get<std::string>(j, "graph6");
  r.n = get<int>(j, "n");
  r.m = get<std::size_t>(j, "m");
  r.cubic = get<bool>(j, "cubic");
  r.connected = get<bool>(j, "connected");
  r.three_connected = get<bool>(j, "three_connected");
  r.k4 = get<bool>(j, "k4");
  r.prism = get<bool>(j, "prism");
  r.degeneracy = get<int>(j, "degeneracy");
  r.triangles = get<std::size_t>(j, "triangles");
  r.separator = optional_from<Separator>(j, "separator", [](const Json& s) {
    return Separator{int_array(array_field(s, "vertices"), "vertices"),
                     int_array(array_field(s, "side_a"), "side_a"),
                     int_array(array_field(s, "side_b"), "side_b"), get<bool>(s, "clique")};
  });
  r.claw = optional_from<ClawEmbedding>(j, "claw", [](const Json& c) {
    return ClawEmbedding{get<int>(c, "center"), get<int>(c, "s"), get<int>(c, "u"),
                         get<int>(c, "v")};
  });
  r.net = optional_from<NetEmbedding>(j, "net", [](const Json& e) {
    const auto t = int_array(array_field(e, "t"), "t");
    const auto p = int_array(array_field(e, "p"), "p");
    if (t.size() != 3 || p.size() != 3) throw FormatError("net needs three t- and p-vertices");
    return NetEmbedding{t[0], t[1], t[2], p[0], p[1], p[2]};
  });
  for (Motif m : {Motif::house, Motif::diamond}) {
    auto e = optional_from<MotifEmbedding>(j, motif_name(m), [m](const Json& v) {
      if (!v.is_array()) throw FormatError("motif embedding must be an array");
      return MotifEmbedding{m, int_array(v, "motif")};
    });
    (m == Motif::house ? r.house : r.diamond) = std::move(e);
  }
  return r;
}

}  // namespace kempe
