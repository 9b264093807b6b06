#include "cannonball/classifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cannonball {
namespace {

constexpr std::array<std::pair<ClassKind, std::string_view>, 5> kKindLabels = {{
    {ClassKind::allowed_mod72, "AllowedMod72"},
    {ClassKind::allowed_mod24, "AllowedMod24"},
    {ClassKind::allowed_mod12, "AllowedMod12"},
    {ClassKind::excluded_mod12, "ExcludedMod12"},
    {ClassKind::excluded_mod72_or_24, "ExcludedMod72or24"},
}};

int mod_small(const Integer& n, unsigned long modulus) {
  return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), modulus));
}

}  // namespace

bool ClassVerdict::allowed() const {
  return kind == ClassKind::allowed_mod72 || kind == ClassKind::allowed_mod24 || kind == ClassKind::allowed_mod12;
}

std::string_view label(ClassKind kind) {
  for (const auto& [k, text] : kKindLabels)
    if (k == kind) return text;
  return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view text) {
  for (const auto& [k, name] : kKindLabels)
    if (name == text) return k;
  return std::nullopt;
}

std::string describe(const ClassVerdict& verdict) {
  return std::string(label(verdict.kind)) + "(" + std::to_string(verdict.residue) + ")";
}

Integer MuDecomposition::reconstruct() const { return 12 * A * m1 + B * mu; }

ClassDecomposition classify(const Integer& M) {
  if (M <= 1) throw std::invalid_argument("classify: M must be > 1");

  ClassDecomposition out;
  out.m_value = M;
  const int r12 = mod_small(M, 12);
  const int r24 = mod_small(M, 24);
  const int r72 = mod_small(M, 72);
  out.m = (M - r12) / 12;

  auto over24 = [&](int mu, int offset, int B) {
    out.decomposition = MuDecomposition{mu, Integer{(M - offset) / 24}, 2, B};
  };

  switch (r12) {
    case 0:
      if (r24 == 0) over24(0, 0, 0);
      out.verdict = (r72 == 0 || r72 == 24) ? ClassVerdict{ClassKind::allowed_mod72, 72, r72}
                                            : ClassVerdict{ClassKind::excluded_mod72_or_24, 72, r72};
      break;
    case 9:
      if (r24 == 9) over24(9, 9, 1);
      out.verdict = (r72 == 9 || r72 == 33) ? ClassVerdict{ClassKind::allowed_mod72, 72, r72}
                                            : ClassVerdict{ClassKind::excluded_mod72_or_24, 72, r72};
      break;
    case 1:
    case 2:
      if (r24 == r12) {
        over24(r12, r12, 1);
        out.verdict = {ClassKind::allowed_mod24, 24, r24};
      } else {
        out.verdict = {ClassKind::excluded_mod72_or_24, 24, r24};
      }
      break;
    case 4:
      if (r24 == 16) {
        over24(4, 16, 4);
        out.verdict = {ClassKind::allowed_mod24, 24, r24};
      } else {
        out.verdict = {ClassKind::excluded_mod72_or_24, 24, r24};
      }
      break;
    case 11:
      out.decomposition = MuDecomposition{11, Integer{(M - 11) / 12}, 1, 1};
      out.verdict = {ClassKind::allowed_mod12, 12, 11};
      break;
    default:
      out.verdict = {ClassKind::excluded_mod12, 12, r12};
      break;
  }
  return out;
}

std::vector<int> allowed_residues(int modulus) {
  static const std::vector<int> mod72 = {0, 24, 9, 33, 1, 25, 49, 2, 26, 50, 16, 40, 64, 11, 23, 35, 47, 59, 71};
  if (modulus != 12 && modulus != 24 && modulus != 72)
    throw std::invalid_argument("allowed_residues: modulus must be 12, 24 or 72");
  std::vector<int> out;
  for (int r : mod72) out.push_back(r % modulus);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string residue_class_label(int modulus, int residue) {
  const auto allowed = allowed_residues(modulus);
  if (!std::binary_search(allowed.begin(), allowed.end(), residue))
    throw std::invalid_argument("residue_class_label: " + std::to_string(residue) + " is not allowed mod " +
                                std::to_string(modulus));
  switch (residue % 12) {
    case 0: return "M≡0,24 (mod 72)";
    case 9: return "M≡9,33 (mod 72)";
    case 1: return "M≡1 (mod 24)";
    case 2: return "M≡2 (mod 24)";
    case 4: return "M≡16 (mod 24)";
    case 11: return "M≡11 (mod 12)";
    default: break;
  }
  throw std::invalid_argument("residue_class_label: " + std::to_string(residue) + " is not allowed mod " +
                              std::to_string(modulus));
}

}  // namespace cannonball
