#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cannonball/arith.hpp"

namespace cannonball {

/// Residue-class verdict for M.
///
/// Allowed classes: M ≡ 0, 24, 9, 33 (mod 72); M ≡ 1, 2, 16 (mod 24);
/// M ≡ 11 (mod 12). Everything else is excluded, either already mod 12
/// (residues 3, 5, 6, 7, 8, 10) or by the finer mod-24/mod-72 refinement.
enum class ClassKind { allowed_mod72, allowed_mod24, allowed_mod12, excluded_mod12, excluded_mod72_or_24 };

struct ClassVerdict {
  ClassKind kind = ClassKind::excluded_mod12;
  int modulus = 12;
  int residue = 0;

  bool allowed() const;
  bool operator==(const ClassVerdict&) const = default;
};

std::string_view label(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view text);

/// Human-readable form, e.g. "AllowedMod72(24)".
std::string describe(const ClassVerdict& verdict);

/// The decomposition M = 12·A·m₁ + B·μ for μ ∈ {0, 1, 2, 4, 9, 11}.
///
///   μ = 0  → A = 2, B = 0  (M = 24m₁)
///   μ = 1  → A = 2, B = 1  (M = 24m₁ + 1)
///   μ = 2  → A = 2, B = 1  (M = 24m₁ + 2)
///   μ = 4  → A = 2, B = 4  (M = 24m₁ + 16)
///   μ = 9  → A = 2, B = 1  (M = 24m₁ + 9)
///   μ = 11 → A = 1, B = 1  (M = 12m₁ + 11)
struct MuDecomposition {
  int mu = 0;
  Integer m1;
  int A = 0;
  int B = 0;

  Integer reconstruct() const;
  bool operator==(const MuDecomposition&) const = default;
};

struct ClassDecomposition {
  Integer m_value;
  Integer m;  ///< M = 12m + (M mod 12)
  /// Present whenever M lies in one of the formal decompositions above,
  /// including the excluded classes M ≡ 48 and M ≡ 57 (mod 72).
  std::optional<MuDecomposition> decomposition;
  ClassVerdict verdict;

  bool allowed() const { return verdict.allowed(); }
  bool operator==(const ClassDecomposition&) const = default;
};

/// Throws std::invalid_argument for M ≤ 1.
ClassDecomposition classify(const Integer& M);

/// Allowed residues for modulus 12, 24 or 72, ascending. Throws
/// std::invalid_argument for any other modulus.
std::vector<int> allowed_residues(int modulus);

/// Which allowed class a residue mod `modulus` belongs to, e.g. "M≡9 (mod 72)".
std::string residue_class_label(int modulus, int residue);

}  // namespace cannonball
