#include "ecctree/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ecctree/enumeration.hpp"

namespace ecctree {

std::string_view to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Pass: return "pass";
    case ClassStatus::Fail: return "fail";
    case ClassStatus::UniqueUnknown: return "unique-unknown";
  }
  return "unknown";
}

std::size_t VerifyReport::tree_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size;
  return total;
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const ClassReport& c) { return c.status == ClassStatus::Fail; }));
}

namespace {

struct ClassJob {
  std::string key;
  std::vector<Tree> members;
  Tree constructor;
  bool uniqueness_required;
};

ClassReport evaluate_class(const ClassJob& job, const IndexSpec& index) {
  ClassReport report;
  report.key = job.key;
  report.size = job.members.size();
  report.constructor = canonical_form(job.constructor);
  report.uniqueness_required = job.uniqueness_required;

  std::vector<IndexValue> values;
  values.reserve(job.members.size());
  for (const auto& t : job.members) values.push_back(index.evaluate(t));

  // Strict comparison on the underlying numbers picks the extremum even in
  // floating mode; ties are then collected with the tolerant comparison.
  auto better = [&](const IndexValue& a, const IndexValue& b) {
    if (a.is_exact()) return index.minimize() ? a.exact() < b.exact() : b.exact() < a.exact();
    return index.minimize() ? a.approx() < b.approx() : b.approx() < a.approx();
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (better(values[i], values[best])) best = i;
  }
  report.extremal_value = values[best];

  bool inexact_tie = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (compare(values[i], values[best]) != 0) continue;
    report.attainers.push_back(canonical_form(job.members[i]));
    if (!values[i].is_exact() && i != best) inexact_tie = true;
  }
  std::sort(report.attainers.begin(), report.attainers.end());

  report.extremal_is_constructor =
      std::binary_search(report.attainers.begin(), report.attainers.end(), report.constructor);
  report.unique = report.attainers.size() == 1;
  report.uniqueness_threshold_respected = !report.uniqueness_required || report.unique;
  report.tie = inexact_tie;

  if (!report.extremal_is_constructor) {
    report.status = ClassStatus::Fail;
  } else if (report.uniqueness_threshold_respected) {
    report.status = ClassStatus::Pass;
  } else {
    report.status = report.tie ? ClassStatus::UniqueUnknown : ClassStatus::Fail;
  }
  return report;
}

std::vector<ClassReport> run_jobs(const std::vector<ClassJob>& jobs, const IndexSpec& index, unsigned workers) {
  std::vector<ClassReport> out(jobs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) out[i] = evaluate_class(jobs[i], index);
  };
  if (workers <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return out;
}

void check_order(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "order must be at least 2");
  if (n > verify_cap()) {
    throw Error(ErrorCode::SizeLimit,
                "order " + std::to_string(n) + " exceeds verification cap " + std::to_string(verify_cap()));
  }
}

void check_steiner(std::size_t n, const IndexSpec& index) {
  if (index.is_steiner() && (index.k() < 2 || index.k() + 1 > n)) {
    throw Error(ErrorCode::BadK, "verification needs 2 <= k <= n-1 (k=" + std::to_string(index.k()) + ")");
  }
}

bool uniqueness_required(const IndexSpec& index, std::size_t n, std::uint32_t d) {
  if (!index.is_steiner()) return true;
  return index.k() + (d + 1) / 2 <= n;
}

}  // namespace

VerifyReport verify_sequence_classes(std::size_t n, const IndexSpec& index, const VerifyOptions& options) {
  check_order(n);
  check_steiner(n, index);

  std::vector<ClassJob> jobs;
  for (auto& [seq, members] : classify_by_sequence(n)) {
    if (options.only_class && seq != *options.only_class) continue;
    jobs.push_back({seq.to_string(), std::move(members), build_extremal(seq),
                    uniqueness_required(index, n, seq.diameter())});
  }

  VerifyReport report;
  report.order = n;
  report.index_spec = index.to_string();
  report.classes = run_jobs(jobs, index, options.jobs);
  return report;
}

VerifyReport verify_wiener_type(std::size_t n, const WeightFunction& g, const VerifyOptions& options) {
  return verify_sequence_classes(n, IndexSpec(g), options);
}

VerifyReport verify_steiner(std::size_t n, std::uint32_t k, const VerifyOptions& options) {
  return verify_sequence_classes(n, IndexSpec(IndexSpec::Steiner{k}), options);
}

VerifyReport verify_diameter(std::size_t n, std::uint32_t d, const IndexSpec& index, const VerifyOptions& options) {
  check_order(n);
  check_steiner(n, index);
  if (d < 2 || d + 1 > n) {
    throw Error(ErrorCode::BadParameters, "diameter must satisfy 2 <= d <= n-1 (d=" + std::to_string(d) + ")");
  }

  ClassJob job{"n=" + std::to_string(n) + ",d=" + std::to_string(d), {}, build_Tdn(n, d),
               uniqueness_required(index, n, d)};
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) {
    if (diameter(*t) == d) job.members.push_back(std::move(*t));
  }

  VerifyReport report;
  report.order = n;
  report.index_spec = index.to_string();
  report.diameter = d;
  report.classes = run_jobs({std::move(job)}, index, options.jobs);
  return report;
}

}  // namespace ecctree
