#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "subpack/closed_form.hpp"
#include "subpack/numeric.hpp"
#include "subpack/parallel.hpp"
#include "subpack/params.hpp"

namespace subpack {

class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive integer interval written `a..b` (a single integer `a` means `a..a`).
struct Range {
  std::int64_t lo;
  std::int64_t hi;

  std::int64_t size() const { return hi - lo + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

namespace detail {
inline std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw RangeError("malformed range '" + std::string(context) + "'");
  }
  return value;
}
}  // namespace detail

inline Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = detail::parse_int(text, text);
    return {v, v};
  }
  const Range r{detail::parse_int(text.substr(0, dots), text), detail::parse_int(text.substr(dots + 2), text)};
  if (r.lo > r.hi) throw RangeError("malformed range '" + std::string(text) + "': empty interval");
  return r;
}

struct Grid {
  Range N;
  Range K;
  Range D;
};

/// Parses `N=a..b,K=c..d,D=e..f`; keys may appear in any order, all three required.
inline Grid parse_grid(std::string_view text) {
  Grid g{{0, -1}, {0, -1}, {0, -1}};
  bool seen[3] = {false, false, false};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    if (item.size() < 3 || item[1] != '=') throw RangeError("malformed grid '" + std::string(text) + "'");
    const auto range = parse_range(item.substr(2));
    switch (item[0]) {
      case 'N': g.N = range; seen[0] = true; break;
      case 'K': g.K = range; seen[1] = true; break;
      case 'D': g.D = range; seen[2] = true; break;
      default: throw RangeError("malformed grid '" + std::string(text) + "': unknown key");
    }
    pos = comma + 1;
  }
  if (!(seen[0] && seen[1] && seen[2])) throw RangeError("grid must name N, K and D");
  return g;
}

struct GridCells {
  std::vector<Parameters> valid;  // lexicographic in (N, K, D)
  std::int64_t skipped = 0;
};

inline GridCells enumerate_grid(const Grid& g) {
  GridCells cells;
  for (auto n = g.N.lo; n <= g.N.hi; ++n)
    for (auto k = g.K.lo; k <= g.K.hi; ++k)
      for (auto d = g.D.lo; d <= g.D.hi; ++d) {
        try {
          cells.valid.push_back(Parameters::make(n, k, d));
        } catch (const DomainError&) {
          ++cells.skipped;
        }
      }
  return cells;
}

struct SweepRow {
  std::int64_t N, K, D, T, S;
  BigInt L_numerator;
  BigInt L_denominator;
  BigInt subpacketization;
  BigInt multiplier;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline SweepRow make_row(const Parameters& p) {
  const auto shape = derive_shape(p);
  const auto result = subpacketization_level(p);
  return SweepRow{p.N(), p.K(), p.D(), shape.T, shape.S,
                  numerator_of(result.L), denominator_of(result.L),
                  result.subpacketization, result.multiplier};
}

struct SweepResult {
  std::vector<SweepRow> rows;
  std::int64_t skipped = 0;
};

inline SweepResult sweep(const Grid& g, unsigned jobs = std::thread::hardware_concurrency()) {
  const auto cells = enumerate_grid(g);
  SweepResult out;
  out.skipped = cells.skipped;
  out.rows.resize(cells.valid.size());
  parallel_for(cells.valid.size(), [&](std::size_t i) { out.rows[i] = make_row(cells.valid[i]); }, jobs);
  return out;
}

inline constexpr std::string_view kCsvHeader =
    "N,K,D,T,S,L_numerator,L_denominator,subpacketization,multiplier";

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.N << ',' << r.K << ',' << r.D << ',' << r.T << ',' << r.S << ',' << r.L_numerator << ','
       << r.L_denominator << ',' << r.subpacketization << ',' << r.multiplier << '\n';
  }
}

inline std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::runtime_error("CSV header mismatch");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
    auto i = [&](int k) { return detail::parse_int(f[k], line); };
    rows.push_back(SweepRow{i(0), i(1), i(2), i(3), i(4), BigInt(f[5]), BigInt(f[6]), BigInt(f[7]), BigInt(f[8])});
  }
  return rows;
}

inline nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"N", r.N},
                   {"K", r.K},
                   {"D", r.D},
                   {"T", r.T},
                   {"S", r.S},
                   {"L_numerator", r.L_numerator.str()},
                   {"L_denominator", r.L_denominator.str()},
                   {"subpacketization", r.subpacketization.str()},
                   {"multiplier", r.multiplier.str()}});
  }
  return arr;
}

inline std::vector<SweepRow> from_json(const nlohmann::json& arr) {
  std::vector<SweepRow> rows;
  for (const auto& o : arr) {
    rows.push_back(SweepRow{o.at("N").get<std::int64_t>(), o.at("K").get<std::int64_t>(),
                            o.at("D").get<std::int64_t>(), o.at("T").get<std::int64_t>(),
                            o.at("S").get<std::int64_t>(), BigInt(o.at("L_numerator").get<std::string>()),
                            BigInt(o.at("L_denominator").get<std::string>()),
                            BigInt(o.at("subpacketization").get<std::string>()),
                            BigInt(o.at("multiplier").get<std::string>())});
  }
  return rows;
}

}  // namespace subpack
