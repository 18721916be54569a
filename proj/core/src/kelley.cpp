#include "boolmeas/kelley.hpp"

#include <algorithm>

#include "boolmeas/error.hpp"
#include "boolmeas/simplex.hpp"

namespace boolmeas {

void KelleyInstance::validate() const {
  if (family.empty()) throw ValidationError("family", "family is empty");
  if (algebra.atom_count() > kMaxKelleyAtoms) {
    throw CapExceeded("kelley: " + std::to_string(algebra.atom_count()) + " atoms exceeds cap " +
                      std::to_string(kMaxKelleyAtoms));
  }
  if (family.size() > kMaxKelleyFamily) {
    throw CapExceeded("kelley: family of " + std::to_string(family.size()) + " exceeds cap " +
                      std::to_string(kMaxKelleyFamily));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string where = "family/" + std::to_string(i);
    if (family[i].atom_count != algebra.atom_count()) {
      throw ValidationError(where, "member has " + std::to_string(family[i].atom_count) +
                                       " atoms, algebra has " + std::to_string(algebra.atom_count()));
    }
    if (family[i].is_zero()) throw ValidationError(where, "family member is 0");
  }
}

std::uint64_t max_intersecting_count(const KelleyInstance& instance,
                                     const std::vector<std::uint64_t>& multiplicity) {
  // Members share a nonzero meet iff they share an atom.
  std::uint64_t best = 0;
  for (unsigned x = 0; x < instance.algebra.atom_count(); ++x) {
    std::uint64_t load = 0;
    for (std::size_t i = 0; i < instance.family.size(); ++i) {
      if (instance.family[i].contains(x)) load += multiplicity[i];
    }
    best = std::max(best, load);
  }
  return best;
}

KelleyResult kelley_lp(const KelleyInstance& instance) {
  instance.validate();
  const unsigned k = instance.algebra.atom_count();
  const std::size_t f = instance.family.size();

  // Fractional packing: max sum z_i  s.t.  sum_{i : x in A_i} z_i <= 1 per
  // atom x. Its optimum P is >= 1 and the intersection number is 1/P; the
  // dual (fractional covering) rescaled by 1/P is the witness measure.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(f, Rational(0)));
  for (unsigned x = 0; x < k; ++x) {
    for (std::size_t i = 0; i < f; ++i) {
      if (instance.family[i].contains(x)) a[x][i] = 1;
    }
  }
  const auto sol = solve_packing_lp(a, std::vector<Rational>(k, Rational(1)),
                                    std::vector<Rational>(f, Rational(1)));
  if (sol.status != LpSolution::Status::optimal || sol.objective < 1) {
    throw std::logic_error("kelley_lp: packing LP did not reach an optimum >= 1");
  }

  KelleyResult r;
  r.value = 1 / sol.objective;
  r.witness.reserve(k);
  for (const auto& y : sol.dual) r.witness.push_back(y / sol.objective);

  // Scale the packing to integers to get the multiset certificate.
  const Integer lcd = common_denominator(sol.primal);
  auto& cert = r.certificate;
  for (const auto& z : sol.primal) {
    const Rational scaled = z * Rational(lcd);
    cert.multiplicity.push_back(numerator(scaled).convert_to<std::uint64_t>());
    cert.size += cert.multiplicity.back();
  }
  cert.max_intersecting = max_intersecting_count(instance, cert.multiplicity);
  return r;
}

namespace {

// Branch and bound over composition vectors of a fixed total size.
class CompositionSearch {
 public:
  CompositionSearch(const std::vector<std::uint64_t>& members, unsigned atoms)
      : members_(members), loads_(atoms, 0), counts_(members.size(), 0) {}

  // Least achievable max load for multisets of exactly `total` members,
  // restricted to max load < bound.
  bool run(std::uint64_t total, std::uint64_t bound) {
    total_ = total;
    bound_ = bound;
    found_ = false;
    dfs(0, total);
    return found_;
  }

  std::uint64_t best_load() const { return best_load_; }
  const std::vector<std::uint64_t>& best_counts() const { return best_counts_; }

 private:
  void dfs(std::size_t i, std::uint64_t remaining) {
    const std::uint64_t current = *std::max_element(loads_.begin(), loads_.end());
    if (current >= bound_) return;
    if (i + 1 == members_.size()) {
      add(i, remaining);
      const std::uint64_t load = *std::max_element(loads_.begin(), loads_.end());
      if (load < bound_) {
        bound_ = load;
        best_load_ = load;
        best_counts_ = counts_;
        found_ = true;
      }
      add(i, -static_cast<std::int64_t>(remaining));
      return;
    }
    for (std::uint64_t take = remaining + 1; take-- > 0;) {
      add(i, take);
      dfs(i + 1, remaining - take);
      add(i, -static_cast<std::int64_t>(take));
    }
  }

  void add(std::size_t i, std::int64_t delta) {
    counts_[i] += delta;
    for (std::size_t x = 0; x < loads_.size(); ++x) {
      if ((members_[i] >> x) & 1U) loads_[x] += delta;
    }
  }

  const std::vector<std::uint64_t>& members_;
  std::vector<std::uint64_t> loads_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  std::uint64_t bound_ = 0;
  bool found_ = false;
  std::uint64_t best_load_ = 0;
  std::vector<std::uint64_t> best_counts_;
};

}  // namespace

BruteForceResult intersection_number_bruteforce(const KelleyInstance& instance, unsigned max_size) {
  instance.validate();
  if (max_size == 0) throw ValidationError("N", "multiset size bound must be positive");
  if (max_size > kMaxBruteForceSize) {
    throw CapExceeded("intersection_number_bruteforce: N = " + std::to_string(max_size) +
                      " exceeds cap " + std::to_string(kMaxBruteForceSize));
  }
  const auto& family = instance.family;

  // Symmetry pruning: duplicate members are interchangeable, and a member
  // that strictly contains another never lowers the ratio, so only the
  // distinct minimal members carry multiplicity.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < family.size() && keep; ++j) {
      if (i == j) continue;
      const auto a = family[i].bits, b = family[j].bits;
      const bool strict_superset = (a & b) == b && a != b;
      const bool earlier_duplicate = a == b && j < i;
      if (strict_superset || earlier_duplicate) keep = false;
    }
    if (keep) reps.push_back(i);
  }
  std::vector<std::uint64_t> members;
  for (auto i : reps) members.push_back(family[i].bits);

  CompositionSearch search(members, instance.algebra.atom_count());
  BruteForceResult r;
  // Start from a single member: ratio 1.
  r.value = 1;
  r.best.multiplicity.assign(family.size(), 0);
  r.best.multiplicity[reps.front()] = 1;
  r.best.size = 1;
  r.best.max_intersecting = 1;

  for (std::uint64_t n = 2; n <= max_size; ++n) {
    // Need load / n < value, i.e. load < ceil(value * n).
    const Rational limit = r.value * Rational(n);
    const std::uint64_t bound = ceil(limit).convert_to<std::uint64_t>();
    if (!search.run(n, bound)) continue;
    const Rational ratio = make_rational(Integer(search.best_load()), Integer(n));
    if (ratio >= r.value) continue;
    r.value = ratio;
    r.best.multiplicity.assign(family.size(), 0);
    for (std::size_t j = 0; j < reps.size(); ++j) r.best.multiplicity[reps[j]] = search.best_counts()[j];
    r.best.size = n;
    r.best.max_intersecting = search.best_load();
  }
  return r;
}

SupportsVerdict supports_decision(const FiniteSetAlgebra& algebra, std::vector<FiniteElement> family,
                                  unsigned brute_size) {
  const KelleyInstance instance{algebra, std::move(family)};
  SupportsVerdict v;
  v.lp = kelley_lp(instance);
  v.brute = intersection_number_bruteforce(instance, brute_size);
  v.brute_size = brute_size;
  v.agrees = v.brute.value == v.lp.value;
  return v;
}

}  // namespace boolmeas
