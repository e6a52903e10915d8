#include "parkfn/oracle.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <thread>

#include "parkfn/error.hpp"
#include "parkfn/pq.hpp"

namespace parkfn::oracle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Candidate tuples: a in [0, a_bound)^p and b in [0, b_bound)^q.
struct Layout {
  std::size_t p = 0;
  std::size_t q = 0;
  Natural a_bound = 0;
  Natural b_bound = 0;
};

Layout layout_of(const FamilySpec& spec, bool slack) {
  Layout l = std::visit(
      overloaded{
          [](const Classical& c) {
            if (c.n == 0) throw Error(ErrorKind::InvalidArgument, "classical family needs n >= 1");
            return Layout{c.n, 0, static_cast<Natural>(c.n), 0};
          },
          [](const Vector& v) { return Layout{v.u.size(), 0, v.u.back(), 0}; },
          [](const PQ& f) {
            return Layout{f.p, f.q, static_cast<Natural>(f.q) + 1, static_cast<Natural>(f.p) + 1};
          },
          [](const TwoDim& t) { return Layout{t.U.p(), t.U.q(), t.U.max_u(), t.U.max_v()}; },
      },
      spec.family);
  if (slack) {
    ++l.a_bound;
    ++l.b_bound;
  }
  return l;
}

BigInt block_size(std::size_t len, Natural bound, bool increasing) {
  if (len == 0) return 1;
  const BigInt b = exact::from_natural(bound);
  if (!increasing) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), len);
    return r;
  }
  // Multisets of size len from bound values.
  return exact::binomial(b + static_cast<long>(len) - 1, static_cast<long>(len));
}

// Visits every tuple of the block in lexicographic order. With `first` set,
// position 0 is pinned to that value.
template <class F>
void for_each_tuple(std::size_t len, Natural bound, bool increasing, std::optional<Natural> first,
                    F&& fn) {
  Seq t(len, 0);
  if (len == 0) {
    fn(t);
    return;
  }
  if (bound == 0) return;
  if (first) {
    if (*first >= bound) return;
    t[0] = *first;
  }
  for (std::size_t i = 1; i < len; ++i) t[i] = increasing ? t[i - 1] : 0;
  const std::size_t start = first ? 1 : 0;
  while (true) {
    fn(t);
    std::size_t i = len;
    while (i > start && t[i - 1] + 1 >= bound) --i;
    if (i == start) return;
    ++t[i - 1];
    for (std::size_t j = i; j < len; ++j) t[j] = increasing ? t[j - 1] : 0;
  }
}

struct Prepared {
  FamilySpec spec;
  Layout layout;
  std::vector<Seq> b_list;               // lexicographic
  std::vector<std::size_t> b_class;      // order-statistic class of each b
  std::vector<Seq> b_class_rep;          // sorted representative per class
  std::optional<CapacityVector> classical_u;
};

Prepared prepare(const FamilySpec& spec, const Options& options) {
  Prepared prep{spec, layout_of(spec, options.slack), {}, {}, {}, std::nullopt};
  if (const auto* c = std::get_if<Classical>(&spec.family)) {
    prep.classical_u = CapacityVector::classical(c->n);
  }
  std::map<Seq, std::size_t> classes;
  for_each_tuple(prep.layout.q, prep.layout.b_bound, spec.increasing, std::nullopt,
                 [&](const Seq& b) {
                   Seq sorted = order_statistics(b);
                   auto [it, inserted] = classes.emplace(sorted, prep.b_class_rep.size());
                   if (inserted) prep.b_class_rep.push_back(std::move(sorted));
                   prep.b_list.push_back(b);
                   prep.b_class.push_back(it->second);
                 });
  return prep;
}

bool member(const Prepared& prep, const PQPair& x) {
  const FamilySpec& spec = prep.spec;
  return std::visit(
      overloaded{
          [&](const Classical&) {
            return spec.prime ? is_prime_vector_pf(x.a, *prep.classical_u)
                              : is_vector_pf(x.a, *prep.classical_u);
          },
          [&](const Vector& v) {
            return spec.prime ? is_prime_vector_pf(x.a, v.u) : is_vector_pf(x.a, v.u);
          },
          [&](const PQ&) { return spec.prime ? is_pq_prime(x) : is_pq_pf(x); },
          [&](const TwoDim& t) {
            return spec.prime ? is_u_prime(x, t.U, PrimeMethod::Direct) : is_u_pf(x, t.U).bounded;
          },
      },
      spec.family);
}

// Every predicate depends on (a, b) only through their order statistics, so
// results are cached per sorted a over all b classes.
class MemberCache {
 public:
  explicit MemberCache(const Prepared& prep) : prep_(prep) {}

  const std::vector<char>& row(const Seq& a) {
    Seq sorted = order_statistics(a);
    auto it = rows_.find(sorted);
    if (it != rows_.end()) return it->second;
    std::vector<char> r(prep_.b_class_rep.size());
    PQPair x{sorted, {}};
    for (std::size_t c = 0; c < r.size(); ++c) {
      x.b = prep_.b_class_rep[c];
      r[c] = member(prep_, x) ? 1 : 0;
    }
    return rows_.emplace(std::move(sorted), std::move(r)).first->second;
  }

 private:
  const Prepared& prep_;
  std::map<Seq, std::vector<char>> rows_;
};

// Shard `id` of `shards` owns the tuples whose first flattened entry is
// congruent to id.
template <class F>
void run_shard(const Prepared& prep, std::size_t id, std::size_t shards, F&& on_member) {
  const Layout& l = prep.layout;
  MemberCache cache(prep);
  auto a_pass = [&](const Seq& a) {
    const auto& row = cache.row(a);
    for (std::size_t i = 0; i < prep.b_list.size(); ++i) {
      if (l.p == 0 && (l.q == 0 ? id != 0 : prep.b_list[i][0] % shards != id)) continue;
      if (row[prep.b_class[i]]) on_member(a, prep.b_list[i]);
    }
  };
  if (l.p == 0) {
    for_each_tuple(0, 0, false, std::nullopt, a_pass);
    return;
  }
  for (Natural v = id; v < l.a_bound; v += shards) {
    for_each_tuple(l.p, l.a_bound, prep.spec.increasing, v, a_pass);
  }
}

void require_within_cap(const FamilySpec& spec, const Options& options) {
  const Natural cap = options.cap != 0 ? options.cap : configured_cap();
  const BigInt space = search_space(spec, options);
  if (space > exact::from_natural(cap)) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                describe(spec) + " has " + space.get_str() + " candidates, cap is " +
                    std::to_string(cap));
  }
}

}  // namespace

Natural configured_cap() {
  const char* env = std::getenv("PARKFN_SEARCH_CAP");
  if (env == nullptr || *env == '\0') return default_cap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("PARKFN_SEARCH_CAP must be a positive integer, got '") + env + "'");
  }
  return static_cast<Natural>(v);
}

BigInt search_space(const FamilySpec& spec, const Options& options) {
  const Layout l = layout_of(spec, options.slack);
  return block_size(l.p, l.a_bound, spec.increasing) * block_size(l.q, l.b_bound, spec.increasing);
}

bool is_member(const FamilySpec& spec, const PQPair& x) {
  Prepared prep{spec, layout_of(spec, false), {}, {}, {}, std::nullopt};
  if (const auto* c = std::get_if<Classical>(&spec.family)) {
    prep.classical_u = CapacityVector::classical(c->n);
  }
  return member(prep, x);
}

void for_each(const FamilySpec& spec, const std::function<void(const PQPair&)>& fn,
              const Options& options) {
  require_within_cap(spec, options);
  const Prepared prep = prepare(spec, options);
  PQPair x;
  run_shard(prep, 0, 1, [&](const Seq& a, const Seq& b) {
    x.a = a;
    x.b = b;
    fn(x);
  });
}

std::vector<PQPair> enumerate(const FamilySpec& spec, const Options& options) {
  std::vector<PQPair> out;
  for_each(spec, [&](const PQPair& x) { out.push_back(x); }, options);
  return out;
}

EnumerationReport count(const FamilySpec& spec, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  require_within_cap(spec, options);
  const std::size_t shards = options.shards == 0 ? 1 : options.shards;
  const Prepared prep = prepare(spec, options);

  std::vector<unsigned long long> partial(shards, 0);
  auto work = [&](std::size_t id) {
    run_shard(prep, id, shards, [&](const Seq&, const Seq&) { ++partial[id]; });
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (std::size_t id = 0; id < shards; ++id) workers.emplace_back(work, id);
    for (auto& w : workers) w.join();
  }

  EnumerationReport report;
  report.spec = spec;
  report.count = 0;
  for (auto c : partial) report.count += exact::from_natural(c);
  report.search_space = search_space(spec, options);
  report.shards = shards;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string describe(const FamilySpec& spec) {
  std::string out = std::visit(
      overloaded{
          [](const Classical& c) { return "classical(n=" + std::to_string(c.n) + ")"; },
          [](const Vector& v) {
            std::string s = "vector(u=";
            for (std::size_t i = 0; i < v.u.size(); ++i) {
              s += (i ? "," : "") + std::to_string(v.u[i]);
            }
            return s + ")";
          },
          [](const PQ& f) { return "pq(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")"; },
          [](const TwoDim& t) {
            return "twodim(" + std::to_string(t.U.p()) + "," + std::to_string(t.U.q()) + ")";
          },
      },
      spec.family);
  if (spec.prime) out += " prime";
  if (spec.increasing) out += " increasing";
  return out;
}

}  // namespace parkfn::oracle
