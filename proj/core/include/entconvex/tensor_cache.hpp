#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "entconvex/spectra.hpp"

namespace entconvex {

// On-disk store of coefficient tensors, one text file per key:
//
//   entconvex-tensor 1
//   key <key>
//   dims <rows> <cols>
//   nnz <count>
//   <row> <col> <re> <im>      (hex floats, exact round trip)
//
// Files are written to a temporary name and renamed, so a reader never sees
// a partial record. Unknown versions are ignored (treated as a miss).
class TensorCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit TensorCache(std::filesystem::path dir);

  // ENTCONVEX_CACHE_DIR, else $XDG_CACHE_HOME/entconvex, else ~/.cache/entconvex.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }

  std::optional<CoefficientTensor> get(const std::string& key) const;
  void put(const std::string& key, const CoefficientTensor& t);

  std::vector<std::string> keys() const;  // sorted
  std::size_t clear();                    // returns entries removed
  std::uintmax_t total_bytes() const;

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

}  // namespace entconvex
