#include "sydra/model_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sydra/error.h"
#include "sydra/version.h"

namespace sydra {
namespace fs = std::filesystem;

namespace {

using Json = nlohmann::ordered_json;

// --- export -----------------------------------------------------------------

Json CodeArray(const std::vector<SubsystemId>& ids) {
  Json out = Json::array();
  for (SubsystemId id : ids) out.push_back(std::string(Code(id)));
  return out;
}

Json EmergentToJson(const EmergentArchitecture& a) {
  Json j;
  j["corpus_size"] = a.corpus_size;
  j["k_inner"] = a.k_inner;
  j["threshold"] = a.threshold;
  j["max_edges"] = a.max_edges ? Json(*a.max_edges) : Json(nullptr);
  j["inner_core"] = CodeArray(a.inner_core);
  j["outer_core"] = CodeArray(a.outer_core);
  j["periphery"] = CodeArray(a.periphery);
  Json centrality = Json::array();
  for (const TierScore& s : a.centrality) {
    Json e;
    e["subsystem"] = std::string(Code(s.subsystem));
    e["mean_betweenness"] = s.mean_betweenness;
    centrality.push_back(std::move(e));
  }
  j["centrality"] = std::move(centrality);
  Json edges = Json::array();
  for (const PairCount& p : a.edges) {
    Json e;
    e["from"] = std::string(Code(p.from));
    e["to"] = std::string(Code(p.to));
    e["count"] = p.count;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json ModelToJson(const ArchModel& m) {
  Json j;
  j["schema_version"] = std::string(kModelSchemaVersion);
  j["engine_name"] = m.engine_name;
  j["commit_ref"] = m.commit_ref;
  j["tool_version"] = m.tool_version;
  j["rules_digest"] = m.rules_digest;
  j["include_unmapped"] = m.include_unmapped;

  Json taxonomy = Json::array();
  for (SubsystemId id : AllSubsystems()) {
    const SubsystemInfo& info = Describe(id);
    Json t;
    t["id"] = std::string(info.code);
    t["name"] = std::string(info.name);
    t["description"] = std::string(info.description);
    taxonomy.push_back(std::move(t));
  }
  j["taxonomy"] = std::move(taxonomy);

  Json files = Json::array();
  for (const TaggedFile& f : m.files) {
    Json e;
    e["id"] = f.id;
    e["path"] = f.path;
    e["kind"] = std::string(FileKindName(f.kind));
    e["tag"] = std::string(Code(f.tag));
    files.push_back(std::move(e));
  }
  j["files"] = std::move(files);

  Json file_edges = Json::array();
  for (const FileEdge& e : m.file_edges) file_edges.push_back(Json::array({e.from, e.to}));
  j["file_edges"] = std::move(file_edges);

  Json graph;
  graph["nodes"] = CodeArray(m.subsystem_graph.nodes);
  Json sub_edges = Json::array();
  for (const SubsystemEdge& e : m.subsystem_graph.edges) {
    Json x;
    x["from"] = std::string(Code(e.from));
    x["to"] = std::string(Code(e.to));
    x["weight"] = e.weight;
    sub_edges.push_back(std::move(x));
  }
  graph["edges"] = std::move(sub_edges);
  j["subsystem_graph"] = std::move(graph);

  Json metrics;
  metrics["node_count"] = m.metrics.node_count;
  metrics["edge_count"] = m.metrics.edge_count;
  Json nodes = Json::array();
  for (const NodeMetrics& n : m.metrics.nodes) {
    Json x;
    x["node"] = std::string(Code(n.node));
    x["in_degree"] = n.in_degree;
    x["out_degree"] = n.out_degree;
    x["betweenness_raw"] = n.betweenness_raw;
    x["betweenness_normalized"] = n.betweenness_normalized;
    nodes.push_back(std::move(x));
  }
  metrics["nodes"] = std::move(nodes);
  j["metrics"] = std::move(metrics);

  Json file_metrics = Json::array();
  for (const FileMetrics& f : m.file_metrics) {
    Json x;
    x["file"] = f.file;
    x["in_degree"] = f.in_degree;
    x["out_degree"] = f.out_degree;
    x["betweenness_raw"] = f.betweenness_raw;
    x["betweenness_normalized"] = f.betweenness_normalized;
    file_metrics.push_back(std::move(x));
  }
  j["file_metrics"] = std::move(file_metrics);

  if (m.emergent) j["emergent"] = EmergentToJson(*m.emergent);
  return j;
}

// --- import -----------------------------------------------------------------

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw Error(Stage::kImport, field, message);
}

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(where + "." + key, "missing field");
  return *it;
}

std::string GetString(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_string()) Fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t GetCount(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_number_unsigned()) Fail(where + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

double GetReal(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_number()) Fail(where + "." + key, "expected a number");
  const double d = v.get<double>();
  if (d < 0) Fail(where + "." + key, "must be non-negative");
  return d;
}

const Json& GetArray(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_array()) Fail(where + "." + key, "expected an array");
  return v;
}

SubsystemId ToSubsystem(const Json& v, const std::string& where) {
  if (!v.is_string()) Fail(where, "expected a subsystem id");
  auto id = ParseSubsystemId(v.get<std::string>());
  if (!id) Fail(where, "unknown subsystem id '" + v.get<std::string>() + "'");
  return *id;
}

SubsystemId GetSubsystem(const Json& j, const char* key, const std::string& where) {
  return ToSubsystem(Field(j, key, where), where + "." + key);
}

std::vector<SubsystemId> GetCodes(const Json& j, const char* key,
                                  const std::string& where) {
  std::vector<SubsystemId> out;
  const Json& arr = GetArray(j, key, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(ToSubsystem(arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string At(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

EmergentArchitecture EmergentFromJson(const Json& j, const std::string& where) {
  EmergentArchitecture a;
  a.corpus_size = GetCount(j, "corpus_size", where);
  a.k_inner = GetCount(j, "k_inner", where);
  a.threshold = GetCount(j, "threshold", where);
  const Json& cap = Field(j, "max_edges", where);
  if (!cap.is_null()) {
    if (!cap.is_number_unsigned()) Fail(where + ".max_edges", "expected null or a count");
    a.max_edges = cap.get<std::size_t>();
  }
  a.inner_core = GetCodes(j, "inner_core", where);
  a.outer_core = GetCodes(j, "outer_core", where);
  a.periphery = GetCodes(j, "periphery", where);
  const Json& centrality = GetArray(j, "centrality", where);
  for (std::size_t i = 0; i < centrality.size(); ++i) {
    const std::string w = At(where + ".centrality", i);
    a.centrality.push_back(TierScore{GetSubsystem(centrality[i], "subsystem", w),
                                     GetReal(centrality[i], "mean_betweenness", w)});
  }
  const Json& edges = GetArray(j, "edges", where);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string w = At(where + ".edges", i);
    PairCount p{GetSubsystem(edges[i], "from", w), GetSubsystem(edges[i], "to", w),
                GetCount(edges[i], "count", w)};
    if (p.count < a.threshold) Fail(w + ".count", "below the frequency threshold");
    a.edges.push_back(p);
  }
  return a;
}

ArchModel ModelFromJson(const Json& j) {
  const std::string root = "$";
  if (!j.is_object()) Fail(root, "expected an object");
  const std::string version = GetString(j, "schema_version", root);
  if (version != kModelSchemaVersion) {
    Fail("$.schema_version", "unsupported schema version '" + version + "'");
  }
  ArchModel m;
  m.engine_name = GetString(j, "engine_name", root);
  m.commit_ref = GetString(j, "commit_ref", root);
  m.tool_version = GetString(j, "tool_version", root);
  m.rules_digest = GetString(j, "rules_digest", root);
  const Json& unmapped = Field(j, "include_unmapped", root);
  if (!unmapped.is_boolean()) Fail("$.include_unmapped", "expected a boolean");
  m.include_unmapped = unmapped.get<bool>();
  GetArray(j, "taxonomy", root);

  const Json& files = GetArray(j, "files", root);
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string w = At("$.files", i);
    TaggedFile f;
    f.id = static_cast<FileId>(GetCount(files[i], "id", w));
    if (f.id != i) Fail(w + ".id", "file ids must be contiguous from 0");
    f.path = GetString(files[i], "path", w);
    const auto kind = ParseFileKind(GetString(files[i], "kind", w));
    if (!kind) Fail(w + ".kind", "unknown file kind");
    f.kind = *kind;
    f.tag = GetSubsystem(files[i], "tag", w);
    m.files.push_back(std::move(f));
  }

  const Json& edges = GetArray(j, "file_edges", root);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string w = At("$.file_edges", i);
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      Fail(w, "expected [from, to]");
    }
    FileEdge edge{e[0].get<FileId>(), e[1].get<FileId>()};
    if (edge.from >= m.files.size() || edge.to >= m.files.size()) {
      Fail(w, "edge endpoint is not a file id");
    }
    m.file_edges.push_back(edge);
  }

  const Json& graph = Field(j, "subsystem_graph", root);
  m.subsystem_graph.nodes = GetCodes(graph, "nodes", "$.subsystem_graph");
  const Json& sub_edges = GetArray(graph, "edges", "$.subsystem_graph");
  for (std::size_t i = 0; i < sub_edges.size(); ++i) {
    const std::string w = At("$.subsystem_graph.edges", i);
    SubsystemEdge e{GetSubsystem(sub_edges[i], "from", w),
                    GetSubsystem(sub_edges[i], "to", w),
                    GetCount(sub_edges[i], "weight", w)};
    if (e.weight < 1) Fail(w + ".weight", "must be at least 1");
    m.subsystem_graph.edges.push_back(e);
  }

  const Json& metrics = Field(j, "metrics", root);
  m.metrics.node_count = GetCount(metrics, "node_count", "$.metrics");
  m.metrics.edge_count = GetCount(metrics, "edge_count", "$.metrics");
  const Json& nodes = GetArray(metrics, "nodes", "$.metrics");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string w = At("$.metrics.nodes", i);
    m.metrics.nodes.push_back(NodeMetrics{
        GetSubsystem(nodes[i], "node", w), GetCount(nodes[i], "in_degree", w),
        GetCount(nodes[i], "out_degree", w), GetReal(nodes[i], "betweenness_raw", w),
        GetReal(nodes[i], "betweenness_normalized", w)});
  }

  const Json& file_metrics = GetArray(j, "file_metrics", root);
  for (std::size_t i = 0; i < file_metrics.size(); ++i) {
    const std::string w = At("$.file_metrics", i);
    const Json& x = file_metrics[i];
    m.file_metrics.push_back(FileMetrics{
        static_cast<FileId>(GetCount(x, "file", w)), GetCount(x, "in_degree", w),
        GetCount(x, "out_degree", w), GetReal(x, "betweenness_raw", w),
        GetReal(x, "betweenness_normalized", w)});
    if (m.file_metrics.back().file != i) {
      Fail(w + ".file", "file metrics must follow file id order");
    }
  }
  if (!m.file_metrics.empty() && m.file_metrics.size() != m.files.size()) {
    Fail("$.file_metrics", "must have one record per file");
  }

  if (auto it = j.find("emergent"); it != j.end()) {
    m.emergent = EmergentFromJson(*it, "$.emergent");
  }

  // Cross-checks the exporter guarantees.
  if (m.metrics.node_count != m.subsystem_graph.nodes.size() ||
      m.metrics.edge_count != m.subsystem_graph.edges.size() ||
      m.metrics.nodes.size() != m.subsystem_graph.nodes.size()) {
    Fail("$.metrics", "does not match subsystem_graph");
  }
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> kKnown = {
        "schema_version", "engine_name", "commit_ref",  "tool_version",
        "rules_digest",   "include_unmapped", "taxonomy", "files",
        "file_edges",     "subsystem_graph",  "metrics",  "file_metrics",
        "emergent"};
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      Fail("$." + key, "unknown field");
    }
  }
  return m;
}

}  // namespace

std::string ExportModelJson(const ArchModel& model) {
  return ModelToJson(model).dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

ArchModel ImportModelJson(std::string_view document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    Fail("$", std::string("invalid JSON: ") + e.what());
  }
  return ModelFromJson(j);
}

ArchModel LoadModelFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Stage::kImport, path.string(), "cannot read model file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ImportModelJson(buffer.str());
  } catch (const Error& e) {
    throw Error(Stage::kImport, path.string(), e.what());
  }
}

void WriteTextFile(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Stage::kExport, path.string(), "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Stage::kExport, path.string(), "write failed");
}

std::string ExportEmergentJson(const EmergentArchitecture& architecture) {
  return EmergentToJson(architecture).dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace sydra
