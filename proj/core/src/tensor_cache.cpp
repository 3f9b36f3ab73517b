#include "entconvex/tensor_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "entconvex/errors.hpp"

namespace fs = std::filesystem;

namespace entconvex {

namespace {
constexpr const char* kSuffix = ".tensor";
constexpr const char* kMagic = "entconvex-tensor";

std::string hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}
}  // namespace

TensorCache::TensorCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_))
    throw std::runtime_error("cannot create cache directory " + dir_.string());
}

fs::path TensorCache::default_directory() {
  if (const char* d = std::getenv("ENTCONVEX_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "entconvex";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "entconvex";
  return fs::temp_directory_path() / "entconvex-cache";
}

fs::path TensorCache::file_for(const std::string& key) const { return dir_ / (key + kSuffix); }

std::optional<CoefficientTensor> TensorCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  std::string magic, tag, stored_key;
  int version = 0;
  Eigen::Index rows = 0, cols = 0;
  std::size_t nnz = 0;
  if (!(in >> magic >> version) || magic != kMagic || version != kFormatVersion) return std::nullopt;
  if (!(in >> tag >> stored_key) || tag != "key" || stored_key != key) return std::nullopt;
  if (!(in >> tag >> rows >> cols) || tag != "dims") return std::nullopt;
  if (!(in >> tag >> nnz) || tag != "nnz") return std::nullopt;
  Matrix m = Matrix::Zero(rows, cols);
  std::string re, im;
  Eigen::Index r = 0, c = 0;
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!(in >> r >> c >> re >> im) || r < 0 || c < 0 || r >= rows || c >= cols) return std::nullopt;
    m(r, c) = cplx(std::strtod(re.c_str(), nullptr), std::strtod(im.c_str(), nullptr));
  }
  return CoefficientTensor(std::move(m));
}

void TensorCache::put(const std::string& key, const CoefficientTensor& t) {
  std::lock_guard lock(mutex_);
  const Matrix& m = t.amplitudes();
  std::ostringstream body;
  std::size_t nnz = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != cplx(0.0, 0.0)) {
        body << r << ' ' << c << ' ' << hex(m(r, c).real()) << ' ' << hex(m(r, c).imag()) << '\n';
        ++nnz;
      }
  const fs::path target = file_for(key);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kMagic << ' ' << kFormatVersion << '\n'
        << "key " << key << '\n'
        << "dims " << m.rows() << ' ' << m.cols() << '\n'
        << "nnz " << nnz << '\n'
        << body.str();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::vector<std::string> TensorCache::keys() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const std::string name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > 7 && name.ends_with(kSuffix))
      out.push_back(name.substr(0, name.size() - 7));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t TensorCache::clear() {
  const auto all = keys();
  std::lock_guard lock(mutex_);
  for (const auto& k : all) fs::remove(file_for(k));
  return all.size();
}

std::uintmax_t TensorCache::total_bytes() const {
  std::uintmax_t total = 0;
  for (const auto& k : keys()) total += fs::file_size(file_for(k));
  return total;
}

}  // namespace entconvex
