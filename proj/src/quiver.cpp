#include "colquiver/quiver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace colquiver {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_quiver: return "invalid_quiver";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::internal_contradiction: return "internal_contradiction";
    case Errc::data_corruption: return "data_corruption";
    case Errc::invalid_input: return "invalid_input";
    case Errc::bound_exceeded: return "bound_exceeded";
    case Errc::not_found: return "not_found";
    case Errc::cluster_mismatch: return "cluster_mismatch";
  }
  return "unknown";
}

namespace {

using Wide = __int128;

// Entries of a mutated quiver are computed exactly in 128 bits and must fit
// back into 64, so equal results overflow together whatever the formula.
Multiplicity narrow(Wide x) {
  if (x > std::numeric_limits<Multiplicity>::max() || x < std::numeric_limits<Multiplicity>::min()) {
    throw Error(Errc::bound_exceeded, "arrow multiplicity overflows 64 bits");
  }
  return static_cast<Multiplicity>(x);
}

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::bound_exceeded, "arrow multiplicity overflows 64 bits");
  return r;
}

Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::bound_exceeded, "arrow multiplicity overflows 64 bits");
  return r;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v + 1));
  return labels;
}

int wrap(int colour, int colours) {
  const int r = colour % colours;
  return r < 0 ? r + colours : r;
}

void require_valid(const ColouredQuiver& q) {
  const auto violations = validate(q);
  if (!violations.empty()) {
    throw Error(Errc::invalid_quiver, "invalid coloured quiver: " + violations.front().message);
  }
}

void require_vertex(const ColouredQuiver& q, int j) {
  if (!q.contains_vertex(j)) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(j) + " out of range for quiver with " + std::to_string(q.n()) +
                    " vertices");
  }
}

// Arrows at j have their colour shifted by `into_shift` (arrows into j) and
// -into_shift (arrows out of j).
void shift_colours_at(const ColouredQuiver& src, ColouredQuiver& dst, int j, int into_shift) {
  for (int v = 0; v < src.n(); ++v) {
    if (v == j) continue;
    for (int c = 0; c < src.colours(); ++c) {
      dst.set(v, j, c + into_shift, src.count(v, j, c));
      dst.set(j, v, c - into_shift, src.count(j, v, c));
    }
  }
}

}  // namespace

ColouredQuiver::ColouredQuiver(int n, int m) : ColouredQuiver(n, m, default_labels(n)) {}

ColouredQuiver::ColouredQuiver(int n, int m, std::vector<std::string> labels)
    : n_(n), m_(m), labels_(std::move(labels)) {
  if (n < 0) throw Error(Errc::invalid_input, "vertex count must be nonnegative");
  if (m < 1) throw Error(Errc::invalid_input, "m must be a positive integer");
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(Errc::invalid_input, "expected one label per vertex");
  }
  q_.assign(static_cast<std::size_t>(n) * n * (m + 1), 0);
}

std::size_t ColouredQuiver::index(int from, int to, int colour) const {
  return (static_cast<std::size_t>(from) * n_ + to) * (m_ + 1) + wrap(colour, m_ + 1);
}

Multiplicity ColouredQuiver::total(int from, int to) const {
  Multiplicity sum = 0;
  for (int c = 0; c <= m_; ++c) sum += count(from, to, c);
  return sum;
}

std::optional<int> ColouredQuiver::colour_of(int from, int to) const {
  for (int c = 0; c <= m_; ++c) {
    if (count(from, to, c) > 0) return c;
  }
  return std::nullopt;
}

bool ColouredQuiver::has_no_arrows() const {
  return std::all_of(q_.begin(), q_.end(), [](Multiplicity x) { return x == 0; });
}

ColouredQuiver ColouredQuiver::permuted(const std::vector<int>& perm) const {
  std::vector<std::string> labels;
  labels.reserve(n_);
  for (int v : perm) labels.push_back(labels_.at(v));
  ColouredQuiver out(n_, m_, std::move(labels));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      for (int c = 0; c <= m_; ++c) out.set(i, k, c, count(perm[i], perm[k], c));
  return out;
}

std::size_t IntQuiver::idx(int from, int to) const {
  return static_cast<std::size_t>(from) * n_ + to;
}

bool IntQuiver::has_loops() const {
  for (int i = 0; i < n_; ++i)
    if (arrows(i, i) != 0) return true;
  return false;
}

bool IntQuiver::has_two_cycles() const {
  for (int i = 0; i < n_; ++i)
    for (int k = i + 1; k < n_; ++k)
      if (arrows(i, k) > 0 && arrows(k, i) > 0) return true;
  return false;
}

bool IntQuiver::is_acyclic() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<int> indegree(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      if (arrows(i, k) > 0) ++indegree[k];
  std::vector<int> ready;
  for (int v = 0; v < n_; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int k = 0; k < n_; ++k) {
      if (arrows(v, k) > 0 && --indegree[k] == 0) ready.push_back(k);
    }
  }
  return seen == n_;
}

IntQuiver IntQuiver::opposite() const {
  IntQuiver out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) out.set(k, i, arrows(i, k));
  return out;
}

std::vector<Violation> validate(const ColouredQuiver& q) {
  std::vector<Violation> out;
  const int n = q.n();
  const int m = q.m();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int c = 0; c <= m; ++c) {
        if (q.count(i, k, c) < 0) {
          out.push_back({Condition::nonnegative, i, k, c,
                         "negative multiplicity on " + std::to_string(i) + "->" + std::to_string(k) +
                             " colour " + std::to_string(c)});
        }
      }
      if (i == k) {
        for (int c = 0; c <= m; ++c) {
          if (q.count(i, i, c) != 0) {
            out.push_back({Condition::no_loops, i, i, c,
                           "(I) loop at vertex " + std::to_string(i) + " colour " + std::to_string(c)});
          }
        }
        continue;
      }
      int used = 0;
      for (int c = 0; c <= m; ++c) used += q.count(i, k, c) != 0 ? 1 : 0;
      if (used > 1) {
        out.push_back({Condition::monochromatic, i, k, -1,
                       "(II) " + std::to_string(used) + " colours on " + std::to_string(i) + "->" +
                           std::to_string(k)});
      }
      for (int c = 0; c <= m; ++c) {
        if (q.count(i, k, c) != q.count(k, i, m - c)) {
          out.push_back({Condition::skew_symmetric, i, k, c,
                         "(III) q[" + std::to_string(i) + "][" + std::to_string(k) + "][" + std::to_string(c) +
                             "] != q[" + std::to_string(k) + "][" + std::to_string(i) + "][" +
                             std::to_string(m - c) + "]"});
        }
      }
    }
  }
  return out;
}

bool is_valid(const ColouredQuiver& q) { return validate(q).empty(); }

ColouredQuiver mutate(const ColouredQuiver& q, int j) {
  require_vertex(q, j);
  require_valid(q);
  const int n = q.n();
  const int m = q.m();
  ColouredQuiver out(n, m, q.labels());
  shift_colours_at(q, out, j, +1);
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    for (int k = 0; k < n; ++k) {
      if (k == j || k == i) continue;
      const Multiplicity total = q.total(i, k);
      for (int c = 0; c <= m; ++c) {
        const Multiplicity here = q.count(i, k, c);
        const Wide value = Wide{here} - (Wide{total} - here) +
                           Wide{q.count(i, j, c) - q.count(i, j, c - 1)} * q.count(j, k, 0) +
                           Wide{q.count(i, j, m)} * (q.count(j, k, c) - q.count(j, k, c + 1));
        out.set(i, k, c, narrow(std::max<Wide>(0, value)));
      }
    }
  }
  return out;
}

ColouredQuiver inverse_mutate(const ColouredQuiver& q, int j) {
  require_vertex(q, j);
  require_valid(q);
  const int n = q.n();
  const int m = q.m();
  ColouredQuiver out(n, m, q.labels());
  shift_colours_at(q, out, j, -1);
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    for (int k = 0; k < n; ++k) {
      if (k == j || k == i) continue;
      const Multiplicity total = q.total(i, k);
      for (int c = 0; c <= m; ++c) {
        const Multiplicity here = q.count(i, k, c);
        const Wide value = Wide{here} - (Wide{total} - here) +
                           Wide{q.count(i, j, c) - q.count(i, j, c + 1)} * q.count(j, k, m) +
                           Wide{q.count(i, j, 0)} * (q.count(j, k, c) - q.count(j, k, c - 1));
        out.set(i, k, c, narrow(std::max<Wide>(0, value)));
      }
    }
  }
  return out;
}

ColouredQuiver mutate_alt(const ColouredQuiver& q, int j) {
  require_vertex(q, j);
  require_valid(q);
  const int n = q.n();
  const int m = q.m();

  // Step 1: for each i -(c)-> j -(0)-> k add i -(c)-> k and k -(m-c)-> i.
  ColouredQuiver work = q;
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    for (int c = 0; c <= m; ++c) {
      const Multiplicity in = q.count(i, j, c);
      if (in == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (k == j || k == i) continue;
        const Multiplicity out = q.count(j, k, 0);
        if (out == 0) continue;
        const Multiplicity added = checked_mul(in, out);
        work.set(i, k, c, checked_add(work.count(i, k, c), added));
        work.set(k, i, m - c, checked_add(work.count(k, i, m - c), added));
      }
    }
  }

  // Step 2: cancel equal numbers of the two colours until each pair is monochromatic.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k || i == j || k == j) continue;
      std::vector<int> present;
      for (int c = 0; c <= m; ++c)
        if (work.count(i, k, c) > 0) present.push_back(c);
      if (present.size() > 2) {
        throw Error(Errc::internal_contradiction,
                    std::to_string(present.size()) + " colours between " + std::to_string(i) + " and " +
                        std::to_string(k) + " while cancelling; input is not a reachable tilting quiver");
      }
      if (present.size() == 2) {
        const Multiplicity cancel = std::min(work.count(i, k, present[0]), work.count(i, k, present[1]));
        work.add(i, k, present[0], -cancel);
        work.add(i, k, present[1], -cancel);
      }
    }
  }

  // Step 3: colours into j go up by one, colours out of j go down by one.
  ColouredQuiver out = work;
  shift_colours_at(work, out, j, +1);
  return out;
}

ColouredQuiver mutate_sequence(ColouredQuiver q, const std::vector<int>& seq) {
  for (int j : seq) q = mutate(q, j);
  return q;
}

IntQuiver fz_mutate(const IntQuiver& b, int j) {
  const int n = b.n();
  if (j < 0 || j >= n) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(j) + " out of range");
  if (b.has_loops()) throw Error(Errc::invalid_quiver, "quiver has loops");
  if (b.has_two_cycles()) throw Error(Errc::invalid_quiver, "quiver has oriented 2-cycles");
  IntQuiver out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      if (i == j || k == j) {
        out.set(i, k, b.arrows(k, i));
      } else {
        const Wide value = Wide{b.arrows(i, k)} - b.arrows(k, i) + Wide{b.arrows(i, j)} * b.arrows(j, k) -
                           Wide{b.arrows(k, j)} * b.arrows(j, i);
        out.set(i, k, narrow(std::max<Wide>(0, value)));
      }
    }
  }
  return out;
}

ColouredQuiver seed_from_acyclic(const IntQuiver& gamma, int m) {
  if (gamma.has_loops()) throw Error(Errc::invalid_quiver, "seed quiver has loops");
  if (!gamma.is_acyclic()) throw Error(Errc::invalid_quiver, "seed quiver has an oriented cycle");
  ColouredQuiver out(gamma.n(), m);
  for (int i = 0; i < gamma.n(); ++i) {
    for (int k = 0; k < gamma.n(); ++k) {
      const Multiplicity a = gamma.arrows(i, k);
      if (a == 0) continue;
      out.set(i, k, 0, a);
      out.set(k, i, m, a);
    }
  }
  return out;
}

ColouredQuiver encode_two_colour(const IntQuiver& b) {
  ColouredQuiver out(b.n(), 1);
  for (int i = 0; i < b.n(); ++i) {
    for (int k = 0; k < b.n(); ++k) {
      out.set(i, k, 0, b.arrows(i, k));
      out.set(i, k, 1, b.arrows(k, i));
    }
  }
  return out;
}

IntQuiver colour_zero_part(const ColouredQuiver& q) {
  IntQuiver out(q.n());
  for (int i = 0; i < q.n(); ++i)
    for (int k = 0; k < q.n(); ++k) out.set(i, k, q.count(i, k, 0));
  return out;
}

std::string canonical_form(const ColouredQuiver& q, int max_vertices) {
  const int n = q.n();
  const int m = q.m();
  if (n > max_vertices) {
    throw Error(Errc::bound_exceeded, "canonical_form: " + std::to_string(n) + " vertices exceeds bound " +
                                          std::to_string(max_vertices));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Multiplicity> best;
  std::vector<Multiplicity> current;
  current.reserve(static_cast<std::size_t>(n) * n * (m + 1));
  do {
    current.clear();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int c = 0; c <= m; ++c) current.push_back(q.count(perm[i], perm[k], c));
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::ostringstream os;
  os << "n=" << n << ";m=" << m << ";";
  for (std::size_t t = 0; t < best.size(); ++t) os << (t ? "," : "") << best[t];
  return os.str();
}

std::vector<Violation> colour_restriction_violations(const ColouredQuiver& q) {
  std::vector<Violation> out;
  const int n = q.n();
  const int colours = q.colours();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k) {
        if (k == j || k == i || q.count(j, k, 0) == 0) continue;
        for (int e = 0; e < colours; ++e) {
          if (q.count(i, j, e) == 0) continue;
          for (int c = 0; c < colours; ++c) {
            if (q.count(i, k, c) == 0 || c == e || c == wrap(e + 1, colours)) continue;
            out.push_back({Condition::colour_restriction, i, k, c,
                           "colour restriction: path " + std::to_string(i) + "-(" + std::to_string(e) + ")->" +
                               std::to_string(j) + "-(0)->" + std::to_string(k) + " but arrow " +
                               std::to_string(i) + "->" + std::to_string(k) + " has colour " +
                               std::to_string(c)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace colquiver
