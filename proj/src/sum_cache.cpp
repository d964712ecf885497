#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "onepi/recursion.hpp"
#include "onepi/serialize.hpp"

namespace onepi {
namespace fs = std::filesystem;

std::string to_string(SumKind kind) {
  switch (kind) {
    case SumKind::OneVI: return "V";
    case SumKind::Bouquet: return "B";
    case SumKind::OnePI: return "I";
    case SumKind::Gamma: return "Gamma";
  }
  return "?";
}

std::string checksum(const std::string &data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json key_to_json(const SumKey &key) {
  return {{"kind", to_string(key.kind)}, {"l", key.l},        {"v", key.v},
          {"k", key.k},                  {"lprime", key.lprime}, {"legs", key.legs}};
}

}  // namespace

SumCache::SumCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {
  if (dir_) fs::create_directories(*dir_);
}

std::string SumCache::file_name(const SumKey &key) {
  std::ostringstream name;
  name << to_string(key.kind) << "_l" << key.l << "_v" << key.v;
  if (key.kind == SumKind::Bouquet) name << "_k" << key.k;
  if (key.kind == SumKind::Gamma) {
    name << "_lp" << key.lprime << "_n" << key.legs.size();
    if (!key.legs.empty()) name << "_" << checksum(json(key.legs).dump()).substr(0, 8);
  }
  name << ".json";
  return name.str();
}

std::optional<GraphSum> SumCache::lookup(const SumKey &key) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
  }
  if (!dir_) return std::nullopt;
  auto from_disk = read_file(key);
  if (from_disk) {
    std::lock_guard lock(mutex_);
    memory_.try_emplace(key, *from_disk);
  }
  return from_disk;
}

void SumCache::store(const SumKey &key, const GraphSum &sum) {
  {
    std::lock_guard lock(mutex_);
    memory_.insert_or_assign(key, sum);
  }
  if (dir_) write_file(key, sum);
}

void SumCache::evict(const SumKey &key) {
  std::lock_guard lock(mutex_);
  memory_.erase(key);
}

void SumCache::clear_memory() {
  std::lock_guard lock(mutex_);
  memory_.clear();
}

std::size_t SumCache::memory_size() const {
  std::lock_guard lock(mutex_);
  return memory_.size();
}

std::optional<GraphSum> SumCache::read_file(const SumKey &key) const {
  const fs::path path = *dir_ / file_name(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception &e) {
    throw CacheCorruption(path.string() + ": unreadable (" + e.what() + ")");
  }
  try {
    const json &header = doc.at("header");
    const json &sum = doc.at("sum");
    if (header.at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (header.at("checksum").get<std::string>() != checksum(sum.dump()))
      throw CacheCorruption(path.string() + ": checksum mismatch");
    json expected = key_to_json(key);
    for (const auto &[field, value] : expected.items())
      if (header.at(field) != value)
        throw CacheCorruption(path.string() + ": header does not match key");
    return sum_from_json(sum);
  } catch (const json::exception &e) {
    throw CacheCorruption(path.string() + ": malformed (" + e.what() + ")");
  }
}

void SumCache::write_file(const SumKey &key, const GraphSum &sum) const {
  const json body = sum_to_json(sum);
  json header = key_to_json(key);
  header["version"] = kCacheVersion;
  header["checksum"] = checksum(body.dump());
  const json doc = {{"header", header}, {"sum", body}};

  // write-then-rename so concurrent readers never see a partial file
  const fs::path path = *dir_ / file_name(key);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << '\n';
  }
  fs::rename(tmp, path);
}

std::vector<SumCache::Entry> SumCache::scan(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &item : fs::directory_iterator(dir))
    if (item.is_regular_file() && item.path().extension() == ".json")
      files.push_back(item.path());
  std::sort(files.begin(), files.end());

  std::vector<Entry> out;
  for (const auto &file : files) {
    Entry e;
    e.file = file;
    try {
      std::ifstream in(file);
      const json doc = json::parse(in);
      const json &header = doc.at("header");
      e.header = header.dump();
      e.checksum_ok = header.at("checksum").get<std::string>() == checksum(doc.at("sum").dump());
      if (e.checksum_ok) e.sum = sum_from_json(doc.at("sum"));
    } catch (const std::exception &) {
      e.checksum_ok = false;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace onepi
