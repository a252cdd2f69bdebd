#include "so7/cache.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "so7/atlas.hpp"
#include "so7/error.hpp"

namespace so7 {

namespace {

constexpr const char* kHeader = "so7-atlas group-cache v1";

[[noreturn]] void corrupt(const std::filesystem::path& path,
                          const std::string& what) {
  throw Error("cache file " + path.string() + ": " + what);
}

}  // namespace

void save_group_cache(const Group& g, const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << kHeader << '\n';
    for (const SignedPerm& e : g.elements()) out << e.str() << '\n';
    out << "order=" << g.order() << '\n';
    if (!out) throw Error("write failed for cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Group load_group_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cache file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    corrupt(path, "bad header");

  std::vector<SignedPerm> elements;
  bool saw_order = false;
  size_t claimed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("order=", 0) == 0) {
      try {
        claimed = std::stoull(line.substr(6));
      } catch (const std::exception&) {
        corrupt(path, "unreadable order line");
      }
      saw_order = true;
      break;
    }
    try {
      elements.push_back(SignedPerm::parse(line));
    } catch (const Error& e) {
      corrupt(path, e.what());
    }
  }
  if (!saw_order) corrupt(path, "missing order line");
  if (std::getline(in, line) && !line.empty())
    corrupt(path, "trailing content after the order line");
  if (claimed != elements.size())
    corrupt(path, "order line disagrees with the element count");
  if (!std::is_sorted(elements.begin(), elements.end()))
    corrupt(path, "elements out of order");
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    corrupt(path, "duplicate element");
  if (elements.empty() || !sorted_contains(elements, SignedPerm::identity()))
    corrupt(path, "identity missing");

  std::vector<SignedPerm> gens;
  try {
    gens = greedy_generators(elements);
  } catch (const Error&) {
    corrupt(path, "element list is not closed under multiplication");
  }
  return Group::from_elements(std::move(elements), std::move(gens));
}

Group load_or_build(const std::filesystem::path& cache_dir,
                    const std::string& id) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw Error("unknown group id: " + id);
  std::filesystem::path file = cache_dir / (id + ".group");
  if (std::filesystem::exists(file)) {
    Group g = load_group_cache(file);
    if (g.order() != entry->order)
      corrupt(file, "holds a group of order " + std::to_string(g.order()) +
                        ", catalog says " + std::to_string(entry->order));
    return g;
  }
  Group g = named_group(id);
  save_group_cache(g, file);
  return g;
}

}  // namespace so7
