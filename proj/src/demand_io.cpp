#include "resvplan/demand_io.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace resvplan {

namespace {

constexpr std::array<char, 4> kMagic = {'R', 'V', 'P', 'D'};
constexpr char kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t value) {
  const char bytes[4] = {
      static_cast<char>(value & 0xff),
      static_cast<char>((value >> 8) & 0xff),
      static_cast<char>((value >> 16) & 0xff),
      static_cast<char>((value >> 24) & 0xff),
  };
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw std::runtime_error("truncated demand cache");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_demand_csv(std::ostream& out, const DemandVector& demand) {
  out << "stage,demand\n";
  std::int64_t stage = 1;
  for (std::int64_t d : demand.values()) {
    out << stage++ << ',' << d << '\n';
  }
}

DemandVector read_demand_csv(std::istream& in) {
  std::vector<std::int64_t> demands;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (first && line.rfind("stage", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("demand CSV row without a comma: '" + line + "'");
    }
    try {
      demands.push_back(std::stoll(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::runtime_error("demand CSV row with a non-integer demand: '" + line + "'");
    }
  }
  return DemandVector(std::move(demands));
}

void write_demand_binary(std::ostream& out, const DemandVector& demand) {
  if (demand.horizon() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("demand vector too long for the binary cache");
  }
  out.write(kMagic.data(), kMagic.size());
  out.put(kVersion);
  put_u32(out, static_cast<std::uint32_t>(demand.horizon()));
  for (std::int64_t d : demand.values()) {
    if (d > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("demand value too large for the binary cache");
    }
    put_u32(out, static_cast<std::uint32_t>(d));
  }
  if (!out) throw std::runtime_error("failed writing demand cache");
}

DemandVector read_demand_binary(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a demand cache (bad magic)");
  const int version = in.get();
  if (version != kVersion) {
    throw std::runtime_error("unsupported demand cache version " + std::to_string(version));
  }
  const std::uint32_t count = get_u32(in);
  std::vector<std::int64_t> demands;
  demands.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) demands.push_back(get_u32(in));
  return DemandVector(std::move(demands));
}

}  // namespace resvplan
