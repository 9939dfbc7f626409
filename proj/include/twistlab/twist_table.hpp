#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/endorep.hpp"

namespace twistlab {

// The ten named Dehn twists: the genus-2 chain c1..c5, Matsumoto's
// beta_0, beta_1, beta_2, the separating curve c (Cs), and the boundary
// twist (Bd, one-boundary model only).
enum class TwistId { C1, C2, C3, C4, C5, B0, B1, B2, Cs, Bd };

inline constexpr int kNumTwists = 10;

struct TwistGenerator {
  TwistId id;
  std::string name;
  Word curve;       // one-boundary curve representative
  EndoRep action;   // exact automorphism of F4
  EndoRep inverse;  // verified two-sided inverse
};

// Read-only singleton holding the twist actions.  The entries are data:
// they were produced by the table-search tool and are certified by the
// relation battery in the test suite rather than by construction.
class TwistTable {
 public:
  // Honors the TWISTLAB_TABLE environment variable (path to a table file).
  static const TwistTable& instance();

  // One automorphism per line:
  //   name | curve | a1 b1 a2 b2 images | a1 b1 a2 b2 inverse images
  // fields separated by '|', words in the shared literal syntax, '#'
  // comments and blank lines ignored.
  static TwistTable from_text(std::string_view text);
  static TwistTable from_file(const std::string& path);
  static std::string_view default_text();

  const TwistGenerator& get(TwistId id) const;
  const TwistGenerator* find(std::string_view name) const;
  std::span<const TwistGenerator> all() const { return entries_; }

 private:
  std::vector<TwistGenerator> entries_;
};

std::optional<TwistId> twist_id_from_name(std::string_view name);
std::string_view twist_name(TwistId id);

}  // namespace twistlab
