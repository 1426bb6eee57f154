#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colquiver/error.hpp"

namespace colquiver {

using Multiplicity = std::int64_t;

/// An m-coloured multi-quiver on vertices 0..n-1 with arrow colours 0..m.
///
/// Colour arguments are always reduced modulo m+1, so `count(i, k, -1)` reads
/// colour m. Equality compares n, m and the multiplicity table; labels are
/// display metadata and do not take part.
class ColouredQuiver {
 public:
  ColouredQuiver() = default;
  ColouredQuiver(int n, int m);
  ColouredQuiver(int n, int m, std::vector<std::string> labels);

  int n() const { return n_; }
  int m() const { return m_; }
  int colours() const { return m_ + 1; }

  Multiplicity count(int from, int to, int colour) const { return q_[index(from, to, colour)]; }
  void set(int from, int to, int colour, Multiplicity mult) { q_[index(from, to, colour)] = mult; }
  void add(int from, int to, int colour, Multiplicity mult) { q_[index(from, to, colour)] += mult; }

  /// Total number of arrows from -> to over all colours.
  Multiplicity total(int from, int to) const;
  /// The unique colour carrying arrows from -> to, if any (first one if the
  /// quiver violates monochromaticity).
  std::optional<int> colour_of(int from, int to) const;
  bool has_no_arrows() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  void set_label(int v, std::string label) { labels_.at(v) = std::move(label); }

  /// Same arrows with the vertex order permuted: vertex v of the result is
  /// vertex perm[v] of *this.
  ColouredQuiver permuted(const std::vector<int>& perm) const;

  bool contains_vertex(int v) const { return v >= 0 && v < n_; }

  friend bool operator==(const ColouredQuiver& a, const ColouredQuiver& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.q_ == b.q_;
  }

 private:
  std::size_t index(int from, int to, int colour) const;

  int n_ = 0;
  int m_ = 1;
  std::vector<std::string> labels_;
  std::vector<Multiplicity> q_;
};

/// An ordinary quiver given by arrow counts, used for Gabriel quivers and for
/// classical Fomin-Zelevinsky mutation.
class IntQuiver {
 public:
  IntQuiver() = default;
  explicit IntQuiver(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  Multiplicity arrows(int from, int to) const { return a_[idx(from, to)]; }
  void set(int from, int to, Multiplicity mult) { a_[idx(from, to)] = mult; }
  void add(int from, int to, Multiplicity mult) { a_[idx(from, to)] += mult; }

  bool has_loops() const;
  bool has_two_cycles() const;
  bool is_acyclic() const;
  IntQuiver opposite() const;

  friend bool operator==(const IntQuiver&, const IntQuiver&) = default;

 private:
  std::size_t idx(int from, int to) const;

  int n_ = 0;
  std::vector<Multiplicity> a_;
};

enum class Condition { no_loops, monochromatic, skew_symmetric, nonnegative, colour_restriction };

struct Violation {
  Condition condition;
  int from;
  int to;
  int colour;  // -1 when the violation concerns a pair rather than one colour
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const ColouredQuiver& q);
bool is_valid(const ColouredQuiver& q);

ColouredQuiver mutate(const ColouredQuiver& q, int j);
ColouredQuiver mutate_alt(const ColouredQuiver& q, int j);
ColouredQuiver inverse_mutate(const ColouredQuiver& q, int j);
ColouredQuiver mutate_sequence(ColouredQuiver q, const std::vector<int>& seq);

IntQuiver fz_mutate(const IntQuiver& b, int j);

/// Coloured seed of an acyclic quiver: its arrows in colour 0, reversed in colour m.
ColouredQuiver seed_from_acyclic(const IntQuiver& gamma, int m);

/// m=1 encoding of an ordinary quiver: q^(0) = arrows, q^(1) = reversed arrows.
ColouredQuiver encode_two_colour(const IntQuiver& b);
/// Colour-0 part of a coloured quiver.
IntQuiver colour_zero_part(const ColouredQuiver& q);

inline constexpr int kCanonicalFormDefaultBound = 8;

/// Lexicographically minimal serialization of q over all vertex permutations.
std::string canonical_form(const ColouredQuiver& q, int max_vertices = kCanonicalFormDefaultBound);

/// Violations of the colour restriction for paths i -(e)-> j -(0)-> k:
/// any arrows i -> k must have colour e or e+1.
std::vector<Violation> colour_restriction_violations(const ColouredQuiver& q);

}  // namespace colquiver
