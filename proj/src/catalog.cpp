#include "hbe/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "hbe/errors.hpp"

namespace hbe {

void Catalog::add(Identity identity) {
  if (find(identity.descriptor.id) != nullptr) {
    throw std::invalid_argument("duplicate identity id " + identity.descriptor.id);
  }
  items_.push_back(std::move(identity));
}

const Identity *Catalog::find(std::string_view id) const {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [id](const Identity &i) { return i.descriptor.id == id; });
  return it == items_.end() ? nullptr : &*it;
}

const Identity &Catalog::get(std::string_view id) const {
  if (const Identity *i = find(id)) {
    return *i;
  }
  throw DomainError("unknown identity " + std::string(id));
}

void Catalog::check_point(const Identity &identity, const EvalPoint &point) const {
  const auto &d = identity.descriptor;
  if (point.n < d.n_min) {
    throw DomainError(d.id + ": n = " + std::to_string(point.n) + " is below n_min = " +
                      std::to_string(d.n_min));
  }
  if (d.requires_m && !point.m) {
    throw DomainError(d.id + " requires a parameter m");
  }
  if (!d.requires_m && point.m) {
    throw DomainError(d.id + " takes no parameter m");
  }
  if (point.m && !d.admits(*point.m)) {
    throw DomainError(d.id + ": m = " + point.m->to_string() + " is outside the domain");
  }
}

const Catalog &default_catalog() {
  static const Catalog catalog = make_catalog();
  return catalog;
}

std::vector<IdentityDescriptor> registry() {
  std::vector<IdentityDescriptor> out;
  for (const auto &i : default_catalog().identities()) {
    out.push_back(i.descriptor);
  }
  return out;
}

const IdentityDescriptor &lookup(std::string_view id) {
  return default_catalog().get(id).descriptor;
}

SideValue lhs_direct(std::string_view id, const EvalPoint &point, const Catalog &catalog) {
  const Identity &i = catalog.get(id);
  catalog.check_point(i, point);
  return i.lhs(point);
}

SideValue rhs_closed(std::string_view id, const EvalPoint &point, const Catalog &catalog) {
  const Identity &i = catalog.get(id);
  catalog.check_point(i, point);
  return i.rhs(point);
}

VerificationReport verify_point(std::string_view id, const EvalPoint &point,
                                const Catalog &catalog) {
  using clock = std::chrono::steady_clock;
  const Identity &i = catalog.get(id);
  catalog.check_point(i, point);

  VerificationReport r;
  r.identity = i.descriptor.id;
  r.point = point;

  auto t0 = clock::now();
  SideValue lhs = i.lhs(point);
  auto t1 = clock::now();
  SideValue rhs = i.rhs(point);
  auto t2 = clock::now();

  r.lhs = std::move(lhs.value);
  r.rhs = std::move(rhs.value);
  r.lhs_terms = lhs.terms;
  r.equal = r.lhs == r.rhs;
  r.wall_time_lhs = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
  r.wall_time_rhs = std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1);
  return r;
}

std::vector<VerificationReport> verify_range(std::string_view id, std::int64_t n_max,
                                             const std::vector<ExactParam> &m_set,
                                             const Catalog &catalog, unsigned threads) {
  const Identity &identity = catalog.get(id);
  const auto &d = identity.descriptor;

  std::vector<EvalPoint> points;
  if (d.requires_m) {
    std::vector<ExactParam> ms;
    for (const auto &m : m_set) {
      if (d.admits(m)) {
        ms.push_back(m);
      }
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (const auto &m : ms) {
      for (std::int64_t n = d.n_min; n <= n_max; ++n) {
        points.push_back({m, n});
      }
    }
  } else {
    for (std::int64_t n = d.n_min; n <= n_max; ++n) {
      points.push_back({std::nullopt, n});
    }
  }

  std::vector<VerificationReport> reports(points.size());
  if (threads == 0) {
    threads = default_threads();
  }
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        reports[i] = verify_point(d.id, points[i], catalog);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = points.size();
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return reports;
}

std::vector<ExactParam> exact_param_grid(std::int64_t twice_lo, std::int64_t twice_hi) {
  std::vector<ExactParam> out;
  for (std::int64_t t = std::max<std::int64_t>(twice_lo, -1); t <= twice_hi; ++t) {
    if (t == -2 || (t < 0 && t % 2 == 0)) {
      continue;
    }
    out.push_back(ExactParam::from_twice(t));
  }
  return out;
}

unsigned default_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("HBE_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) {
        n = std::min(n, static_cast<unsigned>(cap));
      }
    } catch (const std::exception &) {
      // unparsable cap: ignore
    }
  }
  return n;
}

} // namespace hbe
