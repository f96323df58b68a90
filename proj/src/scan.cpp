#include <chrono>

#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"
#include "netfield/solver.hpp"

namespace netfield {

std::string_view scan_method_name(ScanMethod m) {
  switch (m) {
    case ScanMethod::Condition: return "condition";
    case ScanMethod::Oracle: return "oracle";
    case ScanMethod::Characterization: return "characterization";
    case ScanMethod::Auto: return "auto";
  }
  return "auto";
}

ScanMethod parse_scan_method(std::string_view name) {
  for (auto m : {ScanMethod::Condition, ScanMethod::Oracle, ScanMethod::Characterization, ScanMethod::Auto}) {
    if (scan_method_name(m) == name) return m;
  }
  throw Error(Errc::InvalidParam, "unknown method '" + std::string(name) + "'");
}

std::string ScanEntry::status() const {
  return verdict ? std::string(status_name(verdict->status)) : std::string("n/a");
}

std::vector<std::uint64_t> ScanResult::with_status(Status s) const {
  std::vector<std::uint64_t> out;
  for (const auto& e : verdicts) {
    if (e.verdict && e.verdict->status == s) out.push_back(e.q);
  }
  return out;
}

namespace {

bool has_characterization(const FamilyTag& tag) {
  return std::holds_alternative<SwirlFamily>(tag) || std::holds_alternative<LowerBoundFamily>(tag);
}

Verdict characterize(const FamilyTag& tag, const Field& field) {
  if (const auto* s = std::get_if<SwirlFamily>(&tag)) return swirl_verdict(s->omega, field);
  if (const auto* lb = std::get_if<LowerBoundFamily>(&tag)) return lower_bound_characterize(lb->m, field->q());
  Verdict v;
  v.method = "characterization";
  v.proof = "no closed form for family " + family_name(tag);
  return v;
}

class FamilyScanner {
 public:
  FamilyScanner(const FamilyTag& tag, const ScanOptions& options) : tag_(tag), options_(options) {}

  Verdict run(const Field& field, ScanMethod method) {
    switch (method) {
      case ScanMethod::Characterization: return characterize(tag_, field);
      case ScanMethod::Condition: return condition(field);
      case ScanMethod::Oracle: return oracle(field);
      case ScanMethod::Auto: break;
    }
    if (has_characterization(tag_)) {
      auto v = characterize(tag_, field);
      if (v.status != Status::Unknown || !condition_params(tag_)) return v;
    }
    if (const auto params = condition_params(tag_); params && params->omega >= 3) return condition(field);
    return oracle(field);
  }

 private:
  Verdict condition(const Field& field) {
    const auto params = condition_params(tag_);
    if (!params) {
      Verdict v;
      v.method = "condition";
      v.proof = "family " + family_name(tag_) + " has no product-set form";
      return v;
    }
    return condition_feasible(*params, field, options_.search);
  }

  Verdict oracle(const Field& field) {
    if (!net_) net_ = build_family(tag_, options_.subset_cap);
    return oracle_exhaustive(*net_, field, options_.search.budget, options_.normalize);
  }

  FamilyTag tag_;
  ScanOptions options_;
  std::optional<Network> net_;
};

}  // namespace

ScanResult scan_family(const FamilyTag& family, std::uint64_t q_lo, std::uint64_t q_hi, ScanMethod method,
                       const ScanOptions& options) {
  if (q_lo > q_hi) throw Error(Errc::InvalidParam, "empty q range");
  if (q_hi > FieldSpec::kMaxOrder) throw Error(Errc::FieldTooLarge, "q range exceeds 65536");
  ScanResult result{family, {}, std::nullopt, {}};
  FamilyScanner scanner(family, options);
  for (auto q = q_lo; q <= q_hi; ++q) {
    ScanEntry entry;
    entry.q = q;
    if (!is_prime_power(q)) {
      entry.method = "n/a";
      result.verdicts.push_back(std::move(entry));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    entry.verdict = scanner.run(make_field(q), method);
    entry.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    entry.method = entry.verdict->method;
    if (entry.verdict->status == Status::Solvable && !result.q_min) result.q_min = q;
    if (entry.verdict->status == Status::Unsolvable && result.q_min) result.exceptional_q.push_back(q);
    result.verdicts.push_back(std::move(entry));
  }
  return result;
}

}  // namespace netfield
