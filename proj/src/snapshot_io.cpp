#include "hodge/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "hodge/errors.hpp"
#include "hodge/multi_index.hpp"

namespace hodge {

namespace {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

constexpr std::size_t kMagicLen = 7;
constexpr std::size_t kHeaderLen = kMagicLen + 3 * sizeof(std::int32_t);

template <class T>
void put(std::vector<unsigned char>& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  out.insert(out.end(), bytes, bytes + sizeof(T));
}

template <class T>
T get(std::span<const unsigned char> in, std::size_t offset) {
  T value;
  std::memcpy(&value, in.data() + offset, sizeof(T));
  return value;
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const FormField& u) {
  const PhysicalField f = to_physical(u);
  std::vector<unsigned char> out;
  out.reserve(kHeaderLen + f.values.size() * sizeof(double));
  out.insert(out.end(), kSnapshotMagic, kSnapshotMagic + kMagicLen);
  put<std::int32_t>(out, u.grid().dim());
  put<std::int32_t>(out, u.degree());
  put<std::int32_t>(out, u.grid().res());
  for (double v : f.values) put<double>(out, v);
  return out;
}

FormField decode_snapshot(std::span<const unsigned char> bytes) {
  if (bytes.size() < kHeaderLen || std::memcmp(bytes.data(), kSnapshotMagic, kMagicLen) != 0) {
    throw IntegrityError("snapshot: bad magic");
  }
  const int n = get<std::int32_t>(bytes, kMagicLen);
  const int degree = get<std::int32_t>(bytes, kMagicLen + 4);
  const int res = get<std::int32_t>(bytes, kMagicLen + 8);
  if (n < 2 || n > 3 || degree < 0 || degree > n || res < 4 || res % 2 != 0) {
    throw IntegrityError("snapshot: inconsistent header");
  }
  auto grid = SpectralGrid::make(n, res);
  const std::size_t count = static_cast<std::size_t>(binomial(n, degree)) * grid->size();
  if (bytes.size() != kHeaderLen + count * sizeof(double)) throw IntegrityError("snapshot: payload size mismatch");
  PhysicalField f{grid, degree, std::vector<double>(count)};
  std::memcpy(f.values.data(), bytes.data() + kHeaderLen, count * sizeof(double));
  return from_physical(f);
}

void write_snapshot(const std::filesystem::path& path, const FormField& u) {
  const auto bytes = encode_snapshot(u);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("write_snapshot: cannot open " + path.string());
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

FormField read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("read_snapshot: cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace hodge
