#include "isob/classify.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

#include "isob/errors.hpp"

namespace isob {

std::string to_string(GroupType t) { return t == GroupType::Type1 ? "Type1" : "Type2"; }

namespace {

struct Exceptional {
  const char* name;
  GroupFamily family;
};

constexpr std::array<Exceptional, 15> kExceptional{{
    {"G2(2)", GroupFamily::G2_2},     {"F4(4)", GroupFamily::F4_4},     {"F4(-20)", GroupFamily::F4_M20},
    {"E6(6)", GroupFamily::E6_6},     {"E6(2)", GroupFamily::E6_2},     {"E6(-14)", GroupFamily::E6_M14},
    {"E7(7)", GroupFamily::E7_7},     {"E7(-5)", GroupFamily::E7_M5},   {"E7(-25)", GroupFamily::E7_M25},
    {"E8(8)", GroupFamily::E8_8},     {"E6(-26)", GroupFamily::E6_M26}, {"G2(C)", GroupFamily::G2_C},
    {"F4(C)", GroupFamily::F4_C},     {"E6(C)", GroupFamily::E6_C},     {"E7(C)", GroupFamily::E7_C},
}};

std::string normalize(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

int parse_int(const std::string& s, std::string_view text) {
  const bool neg = !s.empty() && s[0] == '-';
  const std::string digits = neg ? s.substr(1) : s;
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "cannot parse group '" + std::string(text) + "'");
  return neg ? -std::stoi(digits) : std::stoi(digits);
}

int half(int even, std::string_view text) {
  if (even % 2) throw Error(ErrorKind::InvalidArgument, "'" + std::string(text) + "' needs an even parameter");
  return even / 2;
}

[[noreturn]] void out_of_table(const GroupDescriptor& g, const std::string& why) {
  throw Error(ErrorKind::OutOfTable, to_string(g) + " is not in the table: " + why);
}

}  // namespace

GroupDescriptor parse_group(std::string_view text) {
  const std::string s = normalize(text);
  for (const auto& e : kExceptional)
    if (s == e.name) return {e.family, {}};
  if (s == "E8(C)") return {GroupFamily::E8_C, {}};

  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw Error(ErrorKind::InvalidArgument, "cannot parse group '" + std::string(text) + "'");
  const std::string head = s.substr(0, open);
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  const auto comma = body.find(',');
  const std::string first = body.substr(0, comma);
  const std::string second = comma == std::string::npos ? "" : body.substr(comma + 1);
  const bool two = comma != std::string::npos;

  if (head == "SO*" && !two) return {GroupFamily::SO_STAR, {half(parse_int(first, text), text)}};
  if (head == "SU*" && !two) return {GroupFamily::SU_STAR, {half(parse_int(first, text), text)}};
  if (two && second == "R") {
    if (head == "SL") return {GroupFamily::SL_R, {parse_int(first, text)}};
    if (head == "SP") return {GroupFamily::SP_R, {half(parse_int(first, text), text)}};
  }
  if (two && second == "C") {
    if (head == "SL") return {GroupFamily::SL_C, {parse_int(first, text)}};
    if (head == "SO") return {GroupFamily::SO_C, {parse_int(first, text)}};
    if (head == "SP") return {GroupFamily::SP_C, {half(parse_int(first, text), text)}};
  }
  if (two) {
    const int p = parse_int(first, text), q = parse_int(second, text);
    if (head == "SU") return {GroupFamily::SU, {p, q}};
    if (head == "SP") return {GroupFamily::SP, {p, q}};
    if (head == "SO") {
      if (q == 1) return {GroupFamily::SO_N1, {p}};
      return {GroupFamily::SO, {p, q}};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "cannot parse group '" + std::string(text) + "'");
}

std::string to_string(const GroupDescriptor& g) {
  auto p = [&](std::size_t i) { return i < g.params.size() ? std::to_string(g.params[i]) : std::string("?"); };
  auto twice = [&](std::size_t i) {
    return i < g.params.size() ? std::to_string(2 * g.params[i]) : std::string("?");
  };
  switch (g.family) {
    case GroupFamily::SU: return "SU(" + p(0) + "," + p(1) + ")";
    case GroupFamily::SP_R: return "SP(" + twice(0) + ",R)";
    case GroupFamily::SO: return "SO(" + p(0) + "," + p(1) + ")";
    case GroupFamily::SP: return "SP(" + p(0) + "," + p(1) + ")";
    case GroupFamily::SO_STAR: return "SO*(" + twice(0) + ")";
    case GroupFamily::SL_R: return "SL(" + p(0) + ",R)";
    case GroupFamily::SO_N1: return "SO(" + p(0) + ",1)";
    case GroupFamily::SU_STAR: return "SU*(" + twice(0) + ")";
    case GroupFamily::SL_C: return "SL(" + p(0) + ",C)";
    case GroupFamily::SO_C: return "SO(" + p(0) + ",C)";
    case GroupFamily::SP_C: return "SP(" + twice(0) + ",C)";
    case GroupFamily::E8_C: return "E8(C)";
    default:
      for (const auto& e : kExceptional)
        if (e.family == g.family) return e.name;
  }
  return "?";
}

TypeLookup classify_group(const GroupDescriptor& g) {
  auto need = [&](std::size_t count) {
    if (g.params.size() != count)
      throw Error(ErrorKind::InvalidArgument, "wrong number of parameters for " + to_string(g));
  };
  auto at_least = [&](std::size_t i, int lo) {
    if (g.params[i] < lo) out_of_table(g, "parameter below " + std::to_string(lo));
  };
  switch (g.family) {
    case GroupFamily::SU: {
      need(2);
      at_least(0, 1);
      at_least(1, 1);
      TypeLookup t{GroupType::Type1, {}};
      if (g.params[0] == 1 && g.params[1] == 1)
        t.notes.push_back("SU(1,1) is isomorphic to SL(2,R), which the table lists as Type2; the SU(p,q) row is followed literally");
      return t;
    }
    case GroupFamily::SP_R:
    case GroupFamily::SO_STAR:
      need(1);
      at_least(0, g.family == GroupFamily::SP_R ? 2 : 3);
      return {GroupType::Type1, {}};
    case GroupFamily::SO: {
      need(2);
      if (g.params[1] < 1) out_of_table(g, "parameter below 1");
      if (g.params[0] == 1) out_of_table(g, "the table lists SO(n,1) but not SO(1,n)");
      at_least(0, 2);
      at_least(1, 2);
      if ((g.params[0] == 2 && g.params[1] == 2) || (g.params[0] == 3 && g.params[1] == 3))
        out_of_table(g, "(2,2) and (3,3) are excluded");
      return {GroupType::Type1, {}};
    }
    case GroupFamily::SP:
      need(2);
      at_least(0, 1);
      at_least(1, 1);
      return {GroupType::Type1, {}};
    case GroupFamily::SL_R:
    case GroupFamily::SO_N1:
    case GroupFamily::SU_STAR:
    case GroupFamily::SL_C:
    case GroupFamily::SO_C:
    case GroupFamily::SP_C:
      need(1);
      at_least(0, 2);
      return {GroupType::Type2, {}};
    case GroupFamily::E6_M26:
    case GroupFamily::G2_C:
    case GroupFamily::F4_C:
    case GroupFamily::E6_C:
    case GroupFamily::E7_C:
    case GroupFamily::E8_C:
      need(0);
      return {GroupType::Type2, {}};
    default:
      need(0);
      return {GroupType::Type1, {}};
  }
}

GroupType lookup_type(const GroupDescriptor& g) { return classify_group(g).type; }

GroupType product_type(const std::vector<GroupDescriptor>& factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyProduct, "empty product of groups");
  GroupType out = GroupType::Type2;
  for (const auto& g : factors)
    if (lookup_type(g) == GroupType::Type1) out = GroupType::Type1;
  return out;
}

Rational milnor_wood_bound(const MilnorWoodQuery& q) {
  if (q.k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(q.k));
  Rational out(abs(q.euler_tm), power);
  out.canonicalize();
  return out;
}

bool obstructs_flat(const MilnorWoodQuery& q, const Integer& euler_e) {
  return Rational(abs(euler_e)) > milnor_wood_bound(q);
}

double smillie_ratio(int k, std::optional<double> v2k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (!v2k) {
    if (k != 1) throw Error(ErrorKind::InvalidArgument, "v_2k must be supplied for k >= 2");
    v2k = std::numbers::pi;
  }
  if (!(*v2k > 0)) throw Error(ErrorKind::NonPositiveVolume, "ideal simplex volume must be positive");
  double double_factorial = 1;
  for (int i = 1; i <= k; ++i) double_factorial *= 2 * i - 1;
  return std::pow(std::numbers::pi, k) / (std::ldexp(1.0, k) * double_factorial * *v2k);
}

}  // namespace isob
