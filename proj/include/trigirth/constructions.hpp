#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigirth/core.hpp"
#include "trigirth/solver.hpp"

namespace trigirth {

/// {->123, ->142, ->134, ->243} on [4].
OrientedThreeGraph directed_four_set();

enum class GadgetKind { P, S };

/// Fixed vertex ids of the gadget labels. `t` exists only in S.
namespace gadget_vertex {
inline constexpr VertexId a = 1;
inline constexpr VertexId b = 2;
inline constexpr VertexId c = 3;
inline constexpr VertexId x = 4;
inline constexpr VertexId y = 5;
inline constexpr VertexId z = 6;
inline constexpr VertexId t = 7;
}  // namespace gadget_vertex

/// P: the 6-point projective plane triangulation with ->acb removed and
/// ->xzy added (10 triples). S: the 7-vertex modified gadget (14 triples).
OrientedThreeGraph gadget(GadgetKind kind);
/// Human-readable label legend, e.g. "a=1 b=2 c=3 x=4 y=5 z=6".
std::string gadget_legend(GadgetKind kind);

struct AttachmentResult {
  OrientedThreeGraph graph;
  StarSystem star;
};

struct AttachOptions {
  /// Verify the single-cycle precondition (costs |E| + 1 exact LPs).
  bool check_single_cycle = true;
  unsigned jobs = 1;
};

/// Attaches a fresh gadget copy along every leaf of `star`, leaf by leaf:
/// each step glues a copy on ->a b_i c_i, deletes that triple, and identifies
/// the copy's new vertices with those of the first copy. Fresh vertices are
/// k+1, k+2, ... in the order x, y, z (, t).
/// Throws NotSingleCycle or InvalidStar.
AttachmentResult attach(const OrientedThreeGraph& g, GadgetKind kind, const StarSystem& star,
                        const AttachOptions& options = {});

/// The iterated chain G_0, G_1, ..., G_k with the exported star systems.
/// P starts from the directed 4-set with star {->123}; S from S + ->acb with
/// star {->ybc, ->yat, ->yxz}.
AttachmentResult iterate(GadgetKind kind, int k);

/// Cyclic neighbour order at each vertex; `order[v-1]` lists the neighbours of v.
struct RotationSystem {
  int n = 0;
  std::vector<std::vector<VertexId>> order;
};

RotationSystem builtin_k4_rotation();
/// The classical toroidal embedding of K7: at v the order is v+1, v+3, v+2,
/// v+6, v+4, v+5 (mod 7).
RotationSystem builtin_k7_rotation();

/// rot format: `rot 1`, `n <count>`, then `r <v> <n1> <n2> ...`.
RotationSystem parse_rotation(std::string_view text);
std::string emit_rotation(const RotationSystem& rot);

struct FaceList {
  int vertices = 0;
  std::size_t edges = 0;
  std::vector<std::vector<VertexId>> faces;

  bool all_triangles() const;
  long euler_characteristic() const {
    return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces.size());
  }
};

/// Face tracing: dart (i->j) is followed by (j->k) with k the successor of i
/// in the rotation at j. Throws AsymmetricRotation.
FaceList faces_from_rotation(const RotationSystem& rot);

/// One oriented triple per traced face. Throws NotATriangulation.
OrientedThreeGraph cycle_from_triangulation(const FaceList& faces);

/// Raised when a completion input is not a single cycle, or some single added
/// 3-set would create a new cycle. Carries the offending certificate.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& message, std::optional<CycleCertificate> cert)
      : Error(ErrorKind::HypothesisViolated, message), certificate_(std::move(cert)) {}
  const std::optional<CycleCertificate>& certificate() const { return certificate_; }

 private:
  std::optional<CycleCertificate> certificate_;
};

/// Orients every remaining 3-set of V(g) so that E(g) stays the only cycle.
/// 3-sets are processed lexicographically; ->abc (a<b<c) is preferred.
/// Throws HypothesisViolated, or Error(CompletionStuck).
OrientedThreeGraph complete_to_tournament(const OrientedThreeGraph& g, unsigned jobs = 1);

}  // namespace trigirth
