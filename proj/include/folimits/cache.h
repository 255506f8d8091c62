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


#ifndef FOLIMITS_CACHE_H_
#define FOLIMITS_CACHE_H_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <vector>

#include "folimits/enumerate.h"
#include "folimits/shapes.h"

namespace folimits {

// Environment variable naming the cache directory.
inline constexpr char kCacheDirEnv[] = "FOLIMITS_CACHE_DIR";

// $FOLIMITS_CACHE_DIR, else $XDG_CACHE_HOME/folimits, else
// ~/.cache/folimits, else ./.folimits-cache.
std::filesystem::path DefaultCacheDirectory();

// One line `code<TAB>size<TAB>aut` per shape, ordered by (size, code);
// hypergraph tables start with a `d=<uniformity>` line.
void WriteUnicycleTable(std::ostream& out, int d,
                        const std::vector<UnicycleShape>& shapes);
// Throws CacheError on malformed or unsorted input.
std::vector<UnicycleShape> ReadUnicycleTable(std::istream& in, int d);

enum class CacheSource { kCache, kComputed };
const char* ToString(CacheSource source);

// Connected-unicycle tables on disk, one file per (uniformity, max size).
class ShapeCache {
 public:
  explicit ShapeCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path FilePath(int d, int max_size) const;
  bool Has(int d, int max_size) const;

  struct Lookup {
    std::shared_ptr<const std::vector<UnicycleShape>> shapes;
    CacheSource source = CacheSource::kComputed;
  };

  // Reads the table if present, otherwise enumerates it (without writing).
  Lookup Unicycles(int d, int max_size, const EnumerationBudget& budget) const;

  // Writes the table unless it is already present. Returns kCache when
  // nothing had to be written. Throws CacheError if the directory is not
  // writable.
  CacheSource Warm(int d, int max_size, const EnumerationBudget& budget) const;

  // Removes every table file; returns how many were removed. A missing
  // directory is not an error.
  int Clear() const;

 private:
  std::filesystem::path directory_;
};

}  // namespace folimits

#endif  // FOLIMITS_CACHE_H_
