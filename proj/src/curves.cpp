#include "ecga/curves.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "ecga/error.hpp"

namespace ecga::ec {

namespace {

struct CurveRecord {
  const char* name;
  const char* p;
  const char* a;
  const char* b;
  const char* gx;
  const char* gy;
};

// Decimal values exactly as published for the two NIST prime curves.
constexpr CurveRecord kBuiltin[] = {
    {"p256",
     "115792089210356248762697446949407573530086143415290314195533631308867097853951",
     "115792089210356248762697446949407573530086143415290314195533631308867097853948",
     "41058363725152142129326129780047268409114441015993725554835256314039467401291",
     "48439561293906451759052585252797914202762949526041747995844080717082404635286",
     "36134250956749795798585127919587881956611106672985015071877198253568414405109"},
    {"p521",
     "6864797660130609714981900799081393217269435300143305409394463459185543183397656052122"
     "559640661454554977296311391480858037121987999716643812574028291115057151",
     "6864797660130609714981900799081393217269435300143305409394463459185543183397656052122"
     "559640661454554977296311391480858037121987999716643812574028291115057148",
     "1093849038073734274511112390766805569936207598951683748994586394495953116150735016013"
     "708737573759623248592132296706313309438452531591012912142327488478985984",
     "266174080205021706322876871672336096072985916875697314770667136841880294499642780849"
     "1545080627771902352094241225065558662157113545570916814161637315895999846",
     "375718002577002046354550722449118360359445513476976248669456777961554447744055631669"
     "1234405012945539562144444537289428522585666729196580810124344277578376784"},
};

std::string trim(std::string_view text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  return std::string(text.substr(lo, hi - lo));
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::InvalidConfig, "empty integer literal");
  const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  const std::string digits = hex ? s.substr(2) : s;
  BigInt value = 0;
  for (char c : digits) {
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (hex && c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (hex && c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      throw Error(ErrorCode::InvalidConfig, "bad digit in integer literal '" + s + "'");
    }
    value = value * (hex ? 16 : 10) + d;
  }
  return value;
}

std::vector<std::string> builtin_curve_names() {
  std::vector<std::string> names;
  for (const auto& rec : kBuiltin) names.emplace_back(rec.name);
  return names;
}

CurveParams curve_by_name(std::string_view name) {
  for (const auto& rec : kBuiltin) {
    if (name == rec.name) {
      return CurveParams::create(rec.name, parse_bigint(rec.p), parse_bigint(rec.a),
                                 parse_bigint(rec.b), parse_bigint(rec.gx), parse_bigint(rec.gy));
    }
  }
  throw Error(ErrorCode::UnknownCurve, "no built-in curve named '" + std::string(name) + "'");
}

CurveParams load_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open curve file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, "curve file " + path.string() + ": " + e.what());
  }
  auto field = [&](const char* key) -> BigInt {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw Error(ErrorCode::InvalidConfig,
                  "curve file " + path.string() + " lacks string field '" + key + "'");
    }
    return parse_bigint(doc[key].get<std::string>());
  };
  std::string name = doc.value("name", path.stem().string());
  return CurveParams::create(std::move(name), field("p"), field("a"), field("b"), field("gx"),
                             field("gy"));
}

CurveParams resolve_curve(std::string_view spec) {
  for (const auto& rec : kBuiltin) {
    if (spec == rec.name) return curve_by_name(spec);
  }
  const std::filesystem::path direct{std::string(spec)};
  if (std::filesystem::is_regular_file(direct)) return load_curve_file(direct);
  if (const char* dir = std::getenv("ECGA_CURVE_DIR"); dir != nullptr && *dir != '\0') {
    const auto candidate = std::filesystem::path(dir) / (std::string(spec) + ".json");
    if (std::filesystem::is_regular_file(candidate)) return load_curve_file(candidate);
  }
  throw Error(ErrorCode::UnknownCurve, "curve '" + std::string(spec) +
                                           "' is neither built in nor a readable curve file");
}

}  // namespace ecga::ec
