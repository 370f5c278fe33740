#include "pactsc/tensor_io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <limits>
#include <vector>

namespace pactsc {
namespace {

constexpr std::uint32_t kMaxRank = 32;
constexpr std::uint64_t kMaxElements = 1ull << 31;  // 16 GiB of doubles
constexpr std::uint32_t kMaxNameLength = 1u << 16;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
}

class Reader {
 public:
  explicit Reader(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

  std::uint32_t u32(const char* what) {
    require(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }

  double f64(const char* what) {
    require(8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return std::bit_cast<double>(v);
  }

  std::string bytes(std::size_t n, const char* what) {
    require(n, what);
    std::string out(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return out;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void require(std::size_t n, const char* what) {
    if (bytes_.size() - pos_ < n)
      throw PatdError(PatdStatus::kTruncated, std::string("tensor file truncated in ") + what);
  }

  std::vector<unsigned char> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

const char* patd_status_name(PatdStatus status) {
  switch (status) {
    case PatdStatus::kOk: return "ok";
    case PatdStatus::kIoFailure: return "io_failure";
    case PatdStatus::kBadMagic: return "bad_magic";
    case PatdStatus::kUnsupportedVersion: return "unsupported_version";
    case PatdStatus::kTruncated: return "truncated";
    case PatdStatus::kDuplicateName: return "duplicate_name";
    case PatdStatus::kInvalidDims: return "invalid_dims";
  }
  return "unknown";
}

void save_tensors(const TensorTable& table, const std::filesystem::path& path) {
  std::string out;
  out += "PATD";
  put_u32(out, kPatdVersion);
  put_u32(out, static_cast<std::uint32_t>(table.size()));
  for (const auto& [name, tensor] : table) {
    if (name.size() > kMaxNameLength)
      throw PatdError(PatdStatus::kInvalidDims, "tensor name too long: " + name);
    put_u32(out, static_cast<std::uint32_t>(name.size()));
    out += name;
    put_u32(out, static_cast<std::uint32_t>(tensor.shape.size()));
    for (int d : tensor.shape) {
      if (d <= 0) throw PatdError(PatdStatus::kInvalidDims, "non-positive dim in " + name);
      put_u32(out, static_cast<std::uint32_t>(d));
    }
    if (static_cast<std::uint64_t>(tensor.size()) > kMaxElements)
      throw PatdError(PatdStatus::kInvalidDims, "tensor too large: " + name);
    if (shape_size(tensor.shape) != tensor.size())
      throw PatdError(PatdStatus::kInvalidDims, "shape/value mismatch in " + name);
    for (double v : tensor.values) put_f64(out, v);
  }

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw PatdError(PatdStatus::kIoFailure, "cannot open " + tmp.string());
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) throw PatdError(PatdStatus::kIoFailure, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw PatdError(PatdStatus::kIoFailure,
                    "cannot rename " + tmp.string() + " to " + path.string());
  }
}

TensorTable load_tensors(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw PatdError(PatdStatus::kIoFailure, "cannot open " + path.string());
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(file),
                                   std::istreambuf_iterator<char>()};
  if (file.bad()) throw PatdError(PatdStatus::kIoFailure, "read failure on " + path.string());

  Reader reader(std::move(bytes));
  const std::string magic = reader.bytes(4, "magic");
  if (magic != "PATD")
    throw PatdError(PatdStatus::kBadMagic, "not a tensor container: " + path.string());
  const std::uint32_t version = reader.u32("version");
  if (version != kPatdVersion)
    throw PatdError(PatdStatus::kUnsupportedVersion,
                    "unsupported container version " + std::to_string(version));
  const std::uint32_t count = reader.u32("entry count");

  TensorTable table;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t name_len = reader.u32("name length");
    if (name_len > kMaxNameLength)
      throw PatdError(PatdStatus::kInvalidDims, "tensor name length out of range");
    const std::string name = reader.bytes(name_len, "name");
    const std::uint32_t rank = reader.u32("rank");
    if (rank > kMaxRank) throw PatdError(PatdStatus::kInvalidDims, "rank out of range in " + name);
    std::vector<int> shape;
    std::uint64_t elements = 1;
    for (std::uint32_t d = 0; d < rank; ++d) {
      const std::uint32_t dim = reader.u32("dims");
      if (dim == 0 || dim > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw PatdError(PatdStatus::kInvalidDims, "dim out of range in " + name);
      elements *= dim;
      if (elements > kMaxElements)
        throw PatdError(PatdStatus::kInvalidDims, "tensor too large: " + name);
      shape.push_back(static_cast<int>(dim));
    }
    std::vector<double> values(static_cast<std::size_t>(elements));
    for (auto& v : values) v = reader.f64("payload");
    auto [it, inserted] = table.emplace(name, Tensor::from_values(std::move(shape), std::move(values)));
    if (!inserted) throw PatdError(PatdStatus::kDuplicateName, "duplicate tensor name " + name);
  }
  return table;
}

}  // namespace pactsc
