#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

namespace distlap {

/// Identifiers of the spectral-radius bounds. L_* bound the largest distance
/// Laplacian eigenvalue, Q_* the largest distance signless Laplacian one.
enum class BoundId {
  L_I1,
  L_D1,
  L_D2,
  L_N1,
  L_N2,
  L_N3,
  L_R1,
  L_R2,
  Q_TB_LO,
  Q_TB_UP,
  Q_I3,
  Q_I4,
  Q_I5,
  Q_I6,
  Q_I2,
  Q_CI5,
  Q_CS6,
  Q_CS7,
};

enum class Target { Laplacian, SignlessLaplacian };
enum class Side { Lower, Upper };

struct BoundInfo {
  BoundId id;
  std::string_view name;   ///< e.g. "L_N3"
  std::string_view label;  ///< short label used in tables, e.g. "n3"
  Target target;
  Side side;
  bool strict;             ///< strict inequality for n >= 3
  int min_order;
  bool needs_transmission_regular;
};

inline constexpr std::array<BoundInfo, 18> kBoundTable{{
    {BoundId::L_I1, "L_I1", "i1", Target::Laplacian, Side::Upper, false, 2, false},
    {BoundId::L_D1, "L_D1", "d1", Target::Laplacian, Side::Upper, false, 4, false},
    {BoundId::L_D2, "L_D2", "d2", Target::Laplacian, Side::Upper, true, 2, false},
    {BoundId::L_N1, "L_N1", "n1", Target::Laplacian, Side::Upper, false, 2, false},
    {BoundId::L_N2, "L_N2", "n2", Target::Laplacian, Side::Upper, false, 2, false},
    {BoundId::L_N3, "L_N3", "n3", Target::Laplacian, Side::Upper, false, 3, false},
    {BoundId::L_R1, "L_R1", "r1", Target::Laplacian, Side::Upper, true, 2, true},
    {BoundId::L_R2, "L_R2", "r2", Target::Laplacian, Side::Upper, false, 3, true},
    {BoundId::Q_TB_LO, "Q_TB_LO", "tb", Target::SignlessLaplacian, Side::Lower, false, 2, false},
    {BoundId::Q_TB_UP, "Q_TB_UP", "tb", Target::SignlessLaplacian, Side::Upper, false, 2, false},
    {BoundId::Q_I3, "Q_I3", "i3", Target::SignlessLaplacian, Side::Lower, false, 2, false},
    {BoundId::Q_I4, "Q_I4", "i4", Target::SignlessLaplacian, Side::Upper, false, 2, false},
    {BoundId::Q_I5, "Q_I5", "i5", Target::SignlessLaplacian, Side::Lower, false, 2, false},
    {BoundId::Q_I6, "Q_I6", "i6", Target::SignlessLaplacian, Side::Upper, false, 2, false},
    {BoundId::Q_I2, "Q_I2", "i2", Target::SignlessLaplacian, Side::Upper, false, 2, false},
    {BoundId::Q_CI5, "Q_CI5", "CI5", Target::SignlessLaplacian, Side::Lower, false, 2, false},
    {BoundId::Q_CS6, "Q_CS6", "CS6", Target::SignlessLaplacian, Side::Upper, false, 2, false},
    {BoundId::Q_CS7, "Q_CS7", "CS7", Target::SignlessLaplacian, Side::Upper, false, 2, false},
}};

constexpr const BoundInfo& info(BoundId id) { return kBoundTable[static_cast<std::size_t>(id)]; }
constexpr std::string_view to_string(BoundId id) { return info(id).name; }

inline std::optional<BoundId> bound_from_string(std::string_view name) {
  for (const auto& b : kBoundTable)
    if (b.name == name) return b.id;
  return std::nullopt;
}

/// Soundness slack for comparing a bound against a computed eigenvalue.
inline double soundness_slack(double target) { return 1e-7 + 1e-9 * std::abs(target); }

/// Looser tolerance used to decide that a bound is attained.
inline double equality_tolerance(double target) { return 1e-6 + 1e-8 * std::abs(target); }

}  // namespace distlap
