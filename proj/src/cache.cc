// Copyright 2026 The folimits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "folimits/cache.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <tuple>
#include <utility>

#include "folimits/codes.h"
#include "folimits/errors.h"

namespace folimits {
namespace fs = std::filesystem;
namespace {

constexpr char kPrefix[] = "unicycles-d";

UnicycleShape ShapeFromCode(int d, const std::string& code, int size,
                            BigInt aut) {
  UnicycleShape shape;
  shape.uniformity = d;
  shape.code = code;
  shape.size = size;
  shape.aut = std::move(aut);
  const auto tokens = SplitUnicycleCode(d, code);
  shape.cycle_length = static_cast<int>(tokens.size() / 2);
  for (int i = 0; i < shape.cycle_length; ++i) {
    shape.vertex_attachments.push_back(tokens[2 * i]);
    shape.edge_attachments.push_back(tokens[2 * i + 1]);
  }
  return shape;
}

}  // namespace

fs::path DefaultCacheDirectory() {
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "folimits";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "folimits";
  }
  return ".folimits-cache";
}

void WriteUnicycleTable(std::ostream& out, int d,
                        const std::vector<UnicycleShape>& shapes) {
  if (d != 2) out << "d=" << d << '\n';
  for (const auto& shape : shapes) {
    out << shape.code << '\t' << shape.size << '\t' << shape.aut << '\n';
  }
}

std::vector<UnicycleShape> ReadUnicycleTable(std::istream& in, int d) {
  std::vector<UnicycleShape> shapes;
  std::string line;
  int line_number = 0;
  auto fail = [&](const std::string& what) {
    throw CacheError("cache line " + std::to_string(line_number) + ": " +
                     what);
  };
  bool header_seen = d == 2;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "d=" + std::to_string(d)) fail("expected d=" + std::to_string(d));
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    std::string code, size_text, aut_text;
    if (!std::getline(fields, code, '\t') ||
        !std::getline(fields, size_text, '\t') ||
        !std::getline(fields, aut_text)) {
      fail("expected code<TAB>size<TAB>aut");
    }
    try {
      const int size = std::stoi(size_text);
      BigInt aut(aut_text);
      if (size < 1 || aut < 1) fail("size and aut must be positive");
      shapes.push_back(ShapeFromCode(d, code, size, std::move(aut)));
    } catch (const CacheError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (shapes.size() > 1) {
      const auto& a = shapes[shapes.size() - 2];
      const auto& b = shapes.back();
      if (std::tie(a.size, a.code) >= std::tie(b.size, b.code)) {
        fail("entries are not sorted by (size, code)");
      }
    }
  }
  if (!header_seen) throw CacheError("cache file is missing its d= header");
  return shapes;
}

const char* ToString(CacheSource source) {
  return source == CacheSource::kCache ? "cache" : "computed";
}

ShapeCache::ShapeCache(fs::path directory) : directory_(std::move(directory)) {}

fs::path ShapeCache::FilePath(int d, int max_size) const {
  return directory_ / (kPrefix + std::to_string(d) + "-max" +
                       std::to_string(max_size) + ".tsv");
}

bool ShapeCache::Has(int d, int max_size) const {
  std::error_code ec;
  return fs::is_regular_file(FilePath(d, max_size), ec);
}

ShapeCache::Lookup ShapeCache::Unicycles(
    int d, int max_size, const EnumerationBudget& budget) const {
  budget.Check(max_size, "unicycle");
  Lookup lookup;
  if (Has(d, max_size)) {
    std::ifstream in(FilePath(d, max_size));
    if (!in) throw CacheError("cannot read " + FilePath(d, max_size).string());
    lookup.shapes = std::make_shared<const std::vector<UnicycleShape>>(
        ReadUnicycleTable(in, d));
    lookup.source = CacheSource::kCache;
  } else {
    lookup.shapes = ConnectedUnicycles(d, max_size, budget);
    lookup.source = CacheSource::kComputed;
  }
  return lookup;
}

CacheSource ShapeCache::Warm(int d, int max_size,
                             const EnumerationBudget& budget) const {
  budget.Check(max_size, "unicycle");
  if (Has(d, max_size)) return CacheSource::kCache;
  const auto shapes = ConnectedUnicycles(d, max_size, budget);
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) {
    throw CacheError("cannot create " + directory_.string() + ": " +
                     ec.message());
  }
  const fs::path target = FilePath(d, max_size);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + temp.string());
    WriteUnicycleTable(out, d, *shapes);
    out.close();
    if (!out) throw CacheError("failed writing " + temp.string());
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw CacheError("cannot move cache file into place: " + target.string());
  }
  return CacheSource::kComputed;
}

int ShapeCache::Clear() const {
  std::error_code ec;
  if (!fs::is_directory(directory_, ec)) return 0;
  int removed = 0;
  for (const auto& entry : fs::directory_iterator(directory_, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(kPrefix, 0) == 0 && entry.path().extension() == ".tsv") {
      std::error_code remove_ec;
      if (!fs::remove(entry.path(), remove_ec) || remove_ec) {
        throw CacheError("cannot remove " + entry.path().string());
      }
      ++removed;
    }
  }
  if (ec) throw CacheError("cannot list " + directory_.string());
  return removed;
}

}  // namespace folimits
