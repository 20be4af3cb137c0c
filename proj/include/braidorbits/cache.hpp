#ifndef BRAIDORBITS_CACHE_HPP
#define BRAIDORBITS_CACHE_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "group.hpp"
#include "matching.hpp"
#include "version.hpp"

namespace braidorbits {

// Content-addressed store for head/tail shadow computations. The key
// hashes the group presentation, the type, the level and the engine
// version, so a stale cache can never be read back after an algorithm
// change. Writes are atomic (temp file + rename).
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::string const& dir() const { return dir_; }

  static std::string group_fingerprint(PermGroup const& G) {
    std::string data = std::to_string(G.degree()) + ";" + std::to_string(G.order());
    for (auto const& g : G.generators()) data += ";" + to_cycles(g);
    return fnv_hex(data);
  }

  std::string key(PermGroup const& G, std::string const& type, int k,
                  std::string const& what) const {
    return fnv_hex(std::string(kVersion) + "|" + group_fingerprint(G) + "|" + type + "|" +
                   std::to_string(k) + "|" + what);
  }

  std::optional<nlohmann::json> load(std::string const& key) const {
    std::ifstream in(path(key), std::ios::binary);
    if (!in) return std::nullopt;
    nlohmann::json j;
    in >> j;
    return j;
  }

  void store(std::string const& key, nlohmann::json const& payload) const {
    std::string tmp = path(key) + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << payload.dump(1);
    }
    std::filesystem::rename(tmp, path(key));
  }

  std::vector<std::string> list() const {
    std::vector<std::string> keys;
    for (auto const& e : std::filesystem::directory_iterator(dir_)) {
      auto name = e.path().filename().string();
      if (name.size() > 5 && name.substr(name.size() - 5) == ".json")
        keys.push_back(name.substr(0, name.size() - 5));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  void clear() const {
    for (auto const& k : list()) std::filesystem::remove(path(k));
  }

 private:
  std::string path(std::string const& key) const { return dir_ + "/" + key + ".json"; }

  static std::string fnv_hex(std::string const& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

// Serialization of one side (heads or tails of one nodal class): base
// braid orbits plus translates and normalizers; the locate map is
// reconstructed by re-applying the translates.
inline nlohmann::json side_to_json(PermGroup const& G, SideData const& side) {
  nlohmann::json j;
  j["cls"] = G.conj_class(side.cls).label;
  j["is_head"] = side.is_head;
  nlohmann::json orbits = nlohmann::json::array();
  for (auto const& o : side.orbits) {
    nlohmann::json e;
    nlohmann::json base = nlohmann::json::array();
    for (auto const& t : o.base) {
      nlohmann::json tj = nlohmann::json::array();
      for (auto const& p : t) tj.push_back(to_cycles(p));
      base.push_back(std::move(tj));
    }
    e["base"] = std::move(base);
    e["translate"] = o.translate;
    e["normalizer"] = o.normalizer;
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

// Cache adapter used by NodeIndex. In verify mode a hit is also
// recomputed and the two serializations must agree byte for byte.
class JsonSideCache : public SideCache {
 public:
  explicit JsonSideCache(Cache cache, bool verify = false)
      : cache_(std::move(cache)), verify_(verify) {}

  bool fetch(PermGroup const& G, std::string const& type, int k, int cls, bool is_head,
             SideData& out) override;

  void save(PermGroup const& G, std::string const& type, int k, SideData const& side) override {
    cache_.store(side_key(G, type, k, side.cls, side.is_head), side_to_json(G, side));
  }

  std::string side_key(PermGroup const& G, std::string const& type, int k, int cls,
                       bool is_head) const {
    return cache_.key(G, type, k,
                      std::string(is_head ? "heads:" : "tails:") + G.conj_class(cls).label);
  }

  int hits = 0;
  int misses = 0;

 private:
  Cache cache_;
  bool verify_;
};

inline SideData side_from_json(PermGroup const& G, nlohmann::json const& j) {
  SideData side;
  side.cls = G.class_by_label(j.at("cls").get<std::string>());
  side.is_head = j.at("is_head").get<bool>();
  Permutation x0 = G.element(G.conj_class(side.cls).rep);
  side.closing = side.is_head ? x0 : inverse(x0);
  for (auto const& e : j.at("orbits")) {
    SideOrbit orbit;
    for (auto const& tj : e.at("base")) {
      Tuple t;
      for (auto const& s : tj) t.push_back(parse_cycles(s.get<std::string>(), G.degree()));
      orbit.base.push_back(std::move(t));
    }
    orbit.translate = e.at("translate").get<std::vector<ElemId>>();
    orbit.normalizer = e.at("normalizer").get<std::vector<ElemId>>();
    orbit.shadow_size = orbit.base.size() * orbit.translate.size();
    orbit.orbit_tuples = orbit.shadow_size * G.conj_class(side.cls).size;
    int sid = static_cast<int>(side.orbits.size());
    for (std::size_t bj = 0; bj < orbit.translate.size(); ++bj) {
      Permutation c = G.element(orbit.translate[bj]);
      for (auto const& t : orbit.base) {
        Tuple image = t;
        conjugate_tuple(image, c);
        side.locate.emplace(tuple_key(image), std::make_pair(sid, static_cast<int>(bj)));
      }
    }
    side.orbits.push_back(std::move(orbit));
  }
  return side;
}

inline bool JsonSideCache::fetch(PermGroup const& G, std::string const& type, int k, int cls,
                                 bool is_head, SideData& out) {
  auto j = cache_.load(side_key(G, type, k, cls, is_head));
  if (!j) {
    ++misses;
    return false;
  }
  out = side_from_json(G, *j);
  if (verify_) {
    Subgroup cent{&G, G.centralizer_of_rep(cls)};
    auto cent_gens = small_generating_set(G, cent.elems);
    std::vector<int> classes;
    std::string label;
    for (char c : type) {
      if (c == ',') {
        classes.push_back(G.class_by_label(label));
        label.clear();
      } else {
        label += c;
      }
    }
    RamificationType rt(classes);
    SideData fresh = compute_side(G, rt, k, cls, is_head, cent, cent_gens);
    if (side_to_json(G, fresh).dump() != j->dump())
      throw std::runtime_error("cache verification failed for " +
                               side_key(G, type, k, cls, is_head));
  }
  ++hits;
  return true;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_CACHE_HPP
