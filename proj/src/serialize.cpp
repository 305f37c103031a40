#include "depcat/serialize.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace depcat {

namespace {

using json = nlohmann::ordered_json;

json triples_json(const std::vector<std::vector<std::uint32_t>>& table,
                  const std::function<bool(std::uint32_t row, std::uint32_t col)>& valid) {
  json out = json::array();
  for (std::uint32_t r = 0; r < table.size(); ++r)
    for (std::uint32_t c = 0; c < table[r].size(); ++c)
      if (valid(r, c)) out.push_back(json::array({r, c, table[r][c]}));
  return out;
}

json category_json(const FinCat& C) {
  json cat;
  cat["objects"] = json::array();
  for (ObjectId a = 0; a < C.num_objects(); ++a) cat["objects"].push_back(C.object_name(a));
  cat["arrows"] = json::array();
  for (ArrowId f = 0; f < C.num_arrows(); ++f)
    cat["arrows"].push_back(
        json{{"name", C.arrow_name(f)}, {"dom", C.dom(f)}, {"cod", C.cod(f)}});
  cat["identity"] = json::array();
  for (ObjectId a = 0; a < C.num_objects(); ++a) cat["identity"].push_back(C.identity(a));
  cat["composition"] = json::array();
  for (const auto& t : C.comp_triples()) cat["composition"].push_back(json::array({t.g, t.f, t.gf}));
  return cat;
}

FinCat category_from_json(const json& cat) {
  std::vector<std::string> object_names = cat.at("objects").get<std::vector<std::string>>();
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  for (const auto& a : cat.at("arrows")) {
    const ObjectId dom = a.at("dom").get<ObjectId>();
    const ObjectId cod = a.at("cod").get<ObjectId>();
    if (dom >= object_names.size())
      throw IntegrityError("arrow dom " + std::to_string(dom) + " is not an object");
    if (cod >= object_names.size())
      throw IntegrityError("arrow cod " + std::to_string(cod) + " is not an object");
    arrows.push_back(Arrow{dom, cod});
    arrow_names.push_back(a.at("name").get<std::string>());
  }
  std::vector<ArrowId> identities = cat.at("identity").get<std::vector<ArrowId>>();
  std::vector<CompTriple> comp;
  for (const auto& t : cat.at("composition")) {
    CompTriple triple{t.at(0).get<ArrowId>(), t.at(1).get<ArrowId>(), t.at(2).get<ArrowId>()};
    if (triple.g >= arrows.size() || triple.f >= arrows.size() || triple.gf >= arrows.size())
      throw IntegrityError("composition triple references a missing arrow");
    comp.push_back(triple);
  }
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

// Rebuilds a dense [row][arrow] table from triples; every (row, arrow) with
// valid(row, arrow) must be covered exactly once.
std::vector<std::vector<std::uint32_t>> dense_table(
    const json& triples, std::size_t rows, std::size_t cols, const std::string& what,
    const std::function<bool(std::uint32_t, std::uint32_t)>& valid) {
  std::vector<std::vector<std::uint32_t>> table(rows, std::vector<std::uint32_t>(cols, kNone));
  for (const auto& t : triples) {
    const auto r = t.at(0).get<std::uint32_t>();
    const auto c = t.at(1).get<std::uint32_t>();
    if (r >= rows || c >= cols)
      throw IntegrityError(what + " triple (" + std::to_string(r) + "," + std::to_string(c) +
                           ") out of range");
    if (table[r][c] != kNone) throw IntegrityError("duplicate " + what + " entry");
    table[r][c] = t.at(2).get<std::uint32_t>();
  }
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (valid(r, c) != (table[r][c] != kNone))
        throw IntegrityError(what + " table must be defined exactly on typed pairs; entry (" +
                             std::to_string(r) + "," + std::to_string(c) + ")");
  return table;
}

std::vector<std::vector<std::uint32_t>> group_by_owner(const std::vector<std::uint32_t>& owner,
                                                       std::size_t num_objects,
                                                       const std::string& what) {
  std::vector<std::vector<std::uint32_t>> groups(num_objects);
  for (std::uint32_t id = 0; id < owner.size(); ++id) {
    if (owner[id] >= num_objects)
      throw IntegrityError(what + " " + std::to_string(id) + " has dangling owner " +
                           std::to_string(owner[id]));
    groups[owner[id]].push_back(id);
  }
  return groups;
}

}  // namespace

std::string serialize(const StructureDocument& doc) {
  const FinCat& C = doc.category;
  json out;
  out["version"] = doc.version;
  out["kind"] = doc.kind;
  out["meta"] = doc.meta;
  out["layers"] = json{{"fam", doc.fam_kind},
                       {"sigma", doc.sigma_kind},
                       {"dep", doc.dep_kind},
                       {"pr2", doc.pr2_kind}};
  out["category"] = category_json(C);
  if (doc.fam) {
    const FamStruct& F = *doc.fam;
    json fam;
    fam["owner"] = F.owner;
    fam["names"] = F.names;
    fam["restriction"] = triples_json(
        F.restriction, [&](std::uint32_t lam, std::uint32_t f) { return C.cod(f) == F.owner[lam]; });
    out["fam"] = fam;
  }
  if (doc.sigma) {
    const SigmaStruct& S = *doc.sigma;
    json sig;
    sig["objects"] = S.sigma_obj;
    sig["pr1"] = S.pr1;
    sig["arrows"] = triples_json(S.sigma_arr, [&](std::uint32_t lam, std::uint32_t f) {
      return C.cod(f) == doc.fam->owner[lam];
    });
    out["sigma"] = sig;
  }
  if (doc.dep) {
    const DepStruct& D = *doc.dep;
    json dep;
    dep["fam"] = D.dep_fam;
    dep["names"] = D.names;
    dep["carrier"] = D.carrier;
    dep["application"] = triples_json(D.application, [&](std::uint32_t phi, std::uint32_t f) {
      return C.cod(f) == doc.fam->owner[D.dep_fam[phi]];
    });
    out["dep"] = dep;
  }
  if (doc.pr2) out["pr2"] = *doc.pr2;
  if (doc.finset) {
    json fs;
    fs["max_size"] = doc.finset->max_size;
    fs["requested_cap"] = doc.finset->requested_cap;
    fs["effective_cap"] = doc.finset->effective_cap;
    fs["fibers"] = doc.finset->fam_fibers;
    out["finset"] = fs;
  }
  return out.dump(2) + "\n";
}

StructureDocument deserialize(const std::string& bytes) {
  json in;
  try {
    in = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    StructureDocument doc;
    doc.version = in.at("version").get<int>();
    if (doc.version != 1)
      throw ParseError("unsupported document version " + std::to_string(doc.version));
    doc.kind = in.at("kind").get<std::string>();
    doc.meta = in.value("meta", std::string{});
    if (in.contains("layers")) {
      doc.fam_kind = in.at("layers").value("fam", std::string{});
      doc.sigma_kind = in.at("layers").value("sigma", std::string{});
      doc.dep_kind = in.at("layers").value("dep", std::string{});
      doc.pr2_kind = in.at("layers").value("pr2", std::string{});
    }
    doc.category = category_from_json(in.at("category"));
    const FinCat& C = doc.category;

    if (in.contains("fam")) {
      const json& fam = in.at("fam");
      FamStruct F;
      F.owner = fam.at("owner").get<std::vector<ObjectId>>();
      F.names = fam.at("names").get<std::vector<std::string>>();
      if (F.names.size() != F.owner.size())
        throw IntegrityError("fam names must match fam owners");
      F.fam_of = group_by_owner(F.owner, C.num_objects(), "family");
      F.restriction =
          dense_table(fam.at("restriction"), F.owner.size(), C.num_arrows(), "restriction",
                      [&](std::uint32_t lam, std::uint32_t f) { return C.cod(f) == F.owner[lam]; });
      for (const auto& row : F.restriction)
        for (auto mu : row)
          if (mu != kNone && mu >= F.owner.size())
            throw IntegrityError("restriction references missing family " + std::to_string(mu));
      doc.fam = std::move(F);
    }
    if (in.contains("sigma")) {
      if (!doc.fam) throw IntegrityError("sigma layer without fam layer");
      SigmaStruct S;
      S.sigma_obj = in.at("sigma").at("objects").get<std::vector<ObjectId>>();
      S.pr1 = in.at("sigma").at("pr1").get<std::vector<ArrowId>>();
      if (S.sigma_obj.size() != doc.fam->size() || S.pr1.size() != doc.fam->size())
        throw IntegrityError("sigma tables must cover every family");
      for (auto o : S.sigma_obj)
        if (o >= C.num_objects()) throw IntegrityError("sigma object out of range");
      for (auto p : S.pr1)
        if (p >= C.num_arrows()) throw IntegrityError("sigma pr1 out of range");
      S.sigma_arr = dense_table(in.at("sigma").at("arrows"), doc.fam->size(), C.num_arrows(),
                                "sigma arrow", [&](std::uint32_t lam, std::uint32_t f) {
                                  return C.cod(f) == doc.fam->owner[lam];
                                });
      for (const auto& row : S.sigma_arr)
        for (auto s : row)
          if (s != kNone && s >= C.num_arrows())
            throw IntegrityError("sigma arrow out of range");
      doc.sigma = std::move(S);
    }
    if (in.contains("dep")) {
      if (!doc.fam) throw IntegrityError("dep layer without fam layer");
      const json& dep = in.at("dep");
      DepStruct D;
      D.dep_fam = dep.at("fam").get<std::vector<FamArrowId>>();
      D.names = dep.at("names").get<std::vector<std::string>>();
      D.carrier = dep.at("carrier").get<std::vector<ArrowId>>();
      if (D.names.size() != D.dep_fam.size() || D.carrier.size() != D.dep_fam.size())
        throw IntegrityError("dep vectors must be same-sized");
      for (auto lam : D.dep_fam)
        if (lam >= doc.fam->size())
          throw IntegrityError("dep arrow over missing family " + std::to_string(lam));
      for (auto c : D.carrier)
        if (c != kNone && c >= C.num_arrows())
          throw IntegrityError("dep carrier out of range");
      D.dep_of = group_by_owner(D.dep_fam, doc.fam->size(), "dependent arrow");
      D.application = dense_table(dep.at("application"), D.dep_fam.size(), C.num_arrows(),
                                  "application", [&](std::uint32_t phi, std::uint32_t f) {
                                    return C.cod(f) == doc.fam->owner[D.dep_fam[phi]];
                                  });
      for (const auto& row : D.application)
        for (auto psi : row)
          if (psi != kNone && psi >= D.dep_fam.size())
            throw IntegrityError("application references missing dep arrow " +
                                 std::to_string(psi));
      doc.dep = std::move(D);
    }
    if (in.contains("pr2")) {
      if (!doc.dep || !doc.sigma) throw IntegrityError("pr2 layer without sigma/dep layers");
      Pr2Table pr2 = in.at("pr2").get<Pr2Table>();
      if (pr2.size() != doc.fam->size())
        throw IntegrityError("pr2 must assign a dep arrow per family");
      for (auto p : pr2)
        if (p >= doc.dep->size())
          throw IntegrityError("pr2 references missing dep arrow " + std::to_string(p));
      doc.pr2 = std::move(pr2);
    }
    if (in.contains("finset")) {
      const json& fs = in.at("finset");
      FinSetData data;
      data.max_size = fs.at("max_size").get<std::size_t>();
      data.requested_cap = fs.at("requested_cap").get<std::size_t>();
      data.effective_cap = fs.at("effective_cap").get<std::size_t>();
      data.fam_fibers = fs.at("fibers").get<std::vector<std::vector<std::uint32_t>>>();
      if (!data.fam_fibers.empty() && doc.fam && data.fam_fibers.size() != doc.fam->size())
        throw IntegrityError("finset fibers must cover every family");
      doc.finset = std::move(data);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

void save_document(const StructureDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidSpec("cannot write " + path);
  out << serialize(doc);
}

StructureDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidSpec("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize(buffer.str());
}

}  // namespace depcat
