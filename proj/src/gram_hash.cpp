#include "minjoin/gram_hash.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace minjoin {

std::uint64_t hash_bytes(std::string_view data, std::uint64_t seed) {
  constexpr std::uint64_t m = 0xC6A4A7935BD1E995ULL;
  constexpr int r = 47;

  std::uint64_t h = seed ^ (data.size() * m);
  const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data());
  std::size_t n = data.size();

  while (n >= 8) {
    std::uint64_t k = 0;
    for (int i = 0; i < 8; ++i) k |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    k *= m;
    k ^= k >> r;
    k *= m;
    h ^= k;
    h *= m;
    p += 8;
    n -= 8;
  }

  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) tail |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  if (n > 0) {
    h ^= tail;
    h *= m;
  }

  h ^= h >> r;
  h *= m;
  h ^= h >> r;
  return h;
}

namespace {

// Exact value * 2^64 for value in (0,1). Multiplying by a power of two only
// shifts the exponent, so ldexp introduces no rounding and the mapping is
// strictly order preserving.
std::uint64_t scale_unit_interval(double value) {
  double scaled = std::ldexp(value, 64);
  if (!(scaled > 0.0) || scaled >= std::ldexp(1.0, 64)) {
    throw std::invalid_argument("hash value outside the open interval (0,1)");
  }
  return static_cast<std::uint64_t>(scaled);
}

}  // namespace

std::uint64_t content_fingerprint(std::string_view s, std::size_t pos, std::size_t len) {
  if (len == 0) throw std::invalid_argument("empty span");
  if (pos > s.size() || len > s.size() - pos) throw std::out_of_range("span exceeds string");
  return content_fingerprint(s.substr(pos, len));
}

LookupTable LookupTable::from_stream(std::istream& in, std::string_view origin) {
  LookupTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](const std::string& what) {
      std::ostringstream msg;
      msg << std::string(origin) << ":" << lineno << ": " << what;
      throw std::runtime_error(msg.str());
    };

    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) fail("expected GRAM<TAB>value");
    std::string gram = line.substr(0, tab);
    double value = 0.0;
    try {
      std::size_t consumed = 0;
      value = std::stod(line.substr(tab + 1), &consumed);
      if (tab + 1 + consumed != line.size()) fail("trailing characters after value");
    } catch (const std::exception&) {
      fail("malformed value");
    }
    if (!(value > 0.0 && value < 1.0)) fail("value must lie in (0,1)");

    if (table.q_ == 0) {
      table.q_ = static_cast<std::uint32_t>(gram.size());
    } else if (gram.size() != table.q_) {
      fail("grams must all have the same length");
    }
    if (!table.values_.emplace(std::move(gram), scale_unit_interval(value)).second) {
      fail("duplicate gram");
    }
  }
  if (table.values_.empty()) {
    throw std::runtime_error(std::string(origin) + ": empty hash table");
  }
  return table;
}

LookupTable LookupTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hash table: " + path);
  return from_stream(in, path);
}

std::uint64_t LookupTable::value_of(std::string_view gram) const {
  auto it = values_.find(gram);
  if (it == values_.end()) {
    throw std::out_of_range("gram not in hash table: " + std::string(gram));
  }
  return it->second;
}

GramHasher GramHasher::rolling(std::uint64_t seed, std::uint32_t q) {
  if (q == 0) throw std::invalid_argument("gram length must be positive");
  GramHasher h;
  h.q_ = q;
  h.seed_ = seed;
  h.base_ = splitmix64(seed) | 1;
  h.tweak_ = splitmix64(seed ^ kGolden64);
  h.base_pow_ = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) h.base_pow_ *= h.base_;
  return h;
}

GramHasher GramHasher::lookup(std::shared_ptr<const LookupTable> table) {
  if (!table) throw std::invalid_argument("null lookup table");
  GramHasher h;
  h.q_ = table->gram_length();
  h.table_ = std::move(table);
  return h;
}

GramHasher GramHasher::reseeded(std::uint64_t seed) const {
  if (is_lookup()) throw std::logic_error("lookup-backed hasher cannot be reseeded");
  return rolling(seed, q_);
}

std::uint64_t GramHasher::hash_gram(std::string_view gram) const {
  if (gram.size() != q_) throw std::invalid_argument("gram length mismatch");
  if (table_) return table_->value_of(gram);
  std::uint64_t raw = 0;
  for (unsigned char c : gram) raw = raw * base_ + c;
  return mix64(raw ^ tweak_);
}

void GramHasher::hash_sequence(std::string_view s, std::vector<std::uint64_t>& out) const {
  if (s.size() < q_) throw std::invalid_argument("string shorter than gram length");
  const std::size_t m = s.size() - q_ + 1;
  out.resize(m);
  if (table_) {
    for (std::size_t i = 0; i < m; ++i) out[i] = table_->value_of(s.substr(i, q_));
    return;
  }
  std::uint64_t raw = 0;
  for (std::uint32_t j = 0; j < q_; ++j) raw = raw * base_ + static_cast<unsigned char>(s[j]);
  out[0] = mix64(raw ^ tweak_);
  for (std::size_t i = 1; i < m; ++i) {
    raw -= static_cast<unsigned char>(s[i - 1]) * base_pow_;
    raw = raw * base_ + static_cast<unsigned char>(s[i + q_ - 1]);
    out[i] = mix64(raw ^ tweak_);
  }
}

}  // namespace minjoin
