// Copyright 2026 The orthostep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "orthostep/builder.hpp"
#include "orthostep/classifier.hpp"
#include "orthostep/oracle.hpp"

namespace orthostep::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

const std::map<std::string, Format> kFormats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};

struct Options {
  std::vector<Int> periods;
  Format format = Format::kText;
  Int lmax = 0;
  Int bound = 0;
  int n = 3;
  std::vector<Int> family;
};

std::string join(std::span<const Int> v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

json profile_json(const StepProfile& p) {
  json j;
  j["periods"] = std::vector<Int>(p.periods.original().begin(), p.periods.original().end());
  j["scale"] = p.step_width;
  j["length"] = p.length();
  j["values"] = p.values;
  j["sign_class"] = to_string(classify(p));
  j["palindromic"] = is_palindrome(p);
  return j;
}

void write_csv(std::ostream& out, const StepProfile& p) {
  out << "index,start,end,value\n";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const Int start = static_cast<Int>(i) * p.step_width;
    out << i << ',' << start << ',' << start + p.step_width << ',' << p.values[i] << '\n';
  }
}

void require_arity(const std::vector<Int>& periods, std::size_t lo, std::size_t hi, const char* cmd) {
  if (periods.size() < lo || periods.size() > hi) {
    std::ostringstream os;
    os << cmd << " takes " << lo;
    if (hi != lo) os << " to " << hi;
    os << " periods, got " << periods.size();
    throw UsageError(os.str());
  }
}

Int default_lmax(const PeriodSet& pset, Int requested) {
  if (requested > 0) return requested;
  Int sum = 0;
  for (Int t : pset.normalized()) sum += t;
  return sum;
}

int cmd_compute(const Options& o, std::ostream& out) {
  require_arity(o.periods, 1, 4, "compute");
  const StepProfile p = build_hn(o.periods);
  switch (o.format) {
    case Format::kJson:
      out << profile_json(p).dump() << '\n';
      break;
    case Format::kCsv:
      write_csv(out, p);
      break;
    case Format::kText:
      out << join(p.values, " ") << '\n';
      out << "# step_width=" << p.step_width << " length=" << p.length() << " sign_class=" << to_string(classify(p))
          << " palindromic=" << (is_palindrome(p) ? "true" : "false") << '\n';
      break;
  }
  return kOk;
}

int cmd_predict(const Options& o, std::ostream& out) {
  require_arity(o.periods, 3, 3, "predict");
  const auto& t = o.periods;
  const SignPrediction pred = predict_h3_sign(t[0], t[1], t[2]);
  const PeriodSet pset = PeriodSet::normalize(o.periods);
  const auto norm = pset.normalized();
  if (o.format == Format::kJson) {
    json j;
    j["periods"] = t;
    j["predicted"] = to_string(pred.predicted);
    j["pairs"] = json::array();
    for (const auto& pc : pred.pairs) {
      j["pairs"].push_back({{"pair", {t[pc.i], t[pc.j]}}, {"gcd", pc.gcd}, {"clause", to_string(pc.clause)}});
    }
    j["witness"] = pred.witness ? json({t[pred.pairs[*pred.witness].i], t[pred.pairs[*pred.witness].j]}) : json();
    out << j.dump() << '\n';
    return kOk;
  }
  out << to_string(pred.predicted) << '\n';
  for (std::size_t k = 0; k < pred.pairs.size(); ++k) {
    const auto& pc = pred.pairs[k];
    out << "(" << t[pc.i] << "," << t[pc.j] << ") normalized (" << norm[pc.i] << "," << norm[pc.j]
        << ") gcd " << pc.gcd << " " << to_string(pc.clause) << (pred.witness == k ? " witness" : "") << '\n';
  }
  return kOk;
}

json checks_json(const std::vector<PeriodCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"period", c.period}, {"sums", c.sums}, {"pass", c.pass}});
  return arr;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_arity(o.periods, 2, 4, "verify");
  const StepProfile p = build_hn(o.periods);
  const OrthoReport checks = verify_orthogonality(p);
  const OrthoReport oracle = minimal_orthogonal(p.periods, default_lmax(p.periods, o.lmax));

  const bool same_length = oracle.found() && *oracle.minimal_length == static_cast<Int>(p.values.size());
  const bool agree = checks.all_pass() && same_length && oracle.nullspace_dimension == 1 &&
                     proportional_positive(p.values, oracle.oracle_profile);

  if (o.format == Format::kJson) {
    json j = profile_json(p);
    j["period_checks"] = checks_json(checks.period_checks);
    j["oracle"] = {{"minimal_length", oracle.found() ? json(*oracle.minimal_length) : json()},
                   {"dimension", oracle.nullspace_dimension},
                   {"agree", agree}};
    out << j.dump() << '\n';
  } else {
    out << (agree ? "agree" : "DISAGREE") << '\n';
    out << "builder length " << p.values.size() << " sign_class " << to_string(classify(p)) << '\n';
    for (const auto& c : checks.period_checks) {
      out << "period " << c.period << " residue sums [" << join(c.sums, ",") << "] " << (c.pass ? "pass" : "FAIL")
          << '\n';
    }
    if (oracle.found()) {
      out << "oracle minimal length " << *oracle.minimal_length << " dimension " << oracle.nullspace_dimension << '\n';
    } else {
      out << "oracle: no solution up to L_max\n";
    }
    out << "profile " << join(p.values, " ") << '\n';
  }
  if (!agree) {
    err << "builder: " << join(p.values, " ") << '\n';
    err << "oracle:  " << join(oracle.oracle_profile, " ") << '\n';
    return kViolation;
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  require_arity(o.periods, 1, 4, "oracle");
  const PeriodSet pset = PeriodSet::normalize(o.periods);
  const Int lmax = default_lmax(pset, o.lmax);
  Int max_period = *std::max_element(pset.normalized().begin(), pset.normalized().end());
  if (lmax < max_period) throw UsageError("--lmax must be at least the largest normalized period");
  const OrthoReport r = minimal_orthogonal(pset, lmax);
  if (o.format == Format::kJson) {
    json j;
    j["periods"] = o.periods;
    j["scale"] = pset.scale();
    j["lmax"] = lmax;
    j["minimal_length"] = r.found() ? json(*r.minimal_length) : json();
    j["dimension"] = r.nullspace_dimension;
    j["values"] = r.oracle_profile;
    j["period_checks"] = checks_json(r.period_checks);
    out << j.dump() << '\n';
  } else if (r.found()) {
    out << join(r.oracle_profile, " ") << '\n';
    out << "# minimal_length=" << *r.minimal_length << " dimension=" << r.nullspace_dimension
        << " scale=" << pset.scale() << '\n';
  } else {
    out << "not found below L_max=" << lmax << '\n';
  }
  return kOk;
}

struct ScanRecord {
  std::vector<Int> tuple;
  std::string predicted;
  std::string computed;
  bool agree = true;
};

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n != 3 && o.n != 4) throw UsageError("--n must be 3 or 4");
  const long cap = o.n == 3 ? kScanCapN3 : kScanCapN4;
  if (o.bound < 2 || o.bound > cap) {
    throw UsageError("--bound must be between 2 and " + std::to_string(cap) + " for n = " + std::to_string(o.n));
  }

  std::set<std::vector<Int>> seen;
  std::vector<ScanRecord> records;
  std::vector<Int> tuple(static_cast<std::size_t>(o.n), 2);
  // Nondecreasing tuples in lexicographic order.
  while (true) {
    const PeriodSet pset = PeriodSet::normalize(tuple);
    std::vector<Int> key(pset.normalized().begin(), pset.normalized().end());
    if (seen.insert(key).second) {
      ScanRecord rec;
      rec.tuple = tuple;
      const SignClass computed = classify(build_hn(tuple));
      rec.computed = to_string(computed);
      if (o.n == 3) {
        const SignClass predicted = predict_h3_sign(tuple[0], tuple[1], tuple[2]).predicted;
        rec.predicted = to_string(predicted);
        rec.agree = predicted == computed;
      } else {
        const bool hyp = prop71_hypothesis(tuple[0], tuple[1], tuple[2], tuple[3]).has_value();
        rec.predicted = hyp ? "not_mixed_sign" : "unknown";
        rec.agree = !(hyp && computed == SignClass::kMixedSign);
      }
      records.push_back(std::move(rec));
    }
    std::size_t i = tuple.size();
    while (i > 0 && tuple[i - 1] == o.bound) --i;
    if (i == 0) break;
    ++tuple[i - 1];
    std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(i), tuple.end(), tuple[i - 1]);
  }

  std::size_t disagreements = 0;
  std::map<std::string, std::size_t> by_class;
  if (o.format == Format::kCsv) out << "tuple,predicted,computed,agree\n";
  for (const auto& r : records) {
    disagreements += r.agree ? 0 : 1;
    ++by_class[r.computed];
    switch (o.format) {
      case Format::kJson:
        out << json{{"tuple", r.tuple}, {"predicted", r.predicted}, {"computed", r.computed}, {"agree", r.agree}}.dump()
            << '\n';
        break;
      case Format::kCsv:
        out << join(r.tuple, " ") << ',' << r.predicted << ',' << r.computed << ',' << (r.agree ? 1 : 0) << '\n';
        break;
      case Format::kText:
        out << join(r.tuple, " ") << "  predicted " << r.predicted << "  computed " << r.computed << "  "
            << (r.agree ? "agree" : "DISAGREE") << '\n';
        break;
    }
  }
  if (o.format == Format::kJson) {
    json s{{"tuples", records.size()}, {"disagreements", disagreements}, {"by_class", by_class}};
    out << json{{"summary", s}}.dump() << '\n';
  } else if (o.format == Format::kText) {
    out << "summary: " << records.size() << " tuples, " << disagreements << " disagreements";
    for (const auto& [k, v] : by_class) out << ", " << k << "=" << v;
    out << '\n';
  }
  if (disagreements > 0) {
    err << disagreements << " tuple(s) contradict the expected sign\n";
    return kViolation;
  }
  return kOk;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.family.size() != 4) throw UsageError("family takes exactly four integers a b c d");
  const auto t = prop72_family(o.family[0], o.family[1], o.family[2], o.family[3]);
  const StepProfile p = build_h4(t[0], t[1], t[2], t[3]);
  const SignClass c = classify(p);
  if (o.format == Format::kJson) {
    json j;
    j["parameters"] = o.family;
    j["periods"] = t;
    j["length"] = p.length();
    j["sign_class"] = to_string(c);
    out << j.dump() << '\n';
  } else {
    out << "(" << join(t, ",") << ") " << to_string(c) << '\n';
  }
  if (c != SignClass::kMixedSign) {
    err << "expected mixed_sign for this family, got " << to_string(c) << '\n';
    return kViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal step functions for sums of periodic function spaces", "orthostep"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(kFormats));
  };

  auto* compute = app.add_subcommand("compute", "Build h_n for 1-4 periods");
  compute->add_option("periods", o.periods, "Positive integer periods")->required();
  add_format(compute);

  auto* predict = app.add_subcommand("predict", "Predict the sign class of h_3 from gcd conditions");
  predict->add_option("periods", o.periods, "Three positive integer periods")->required();
  add_format(predict);

  auto* verify = app.add_subcommand("verify", "Check the construction against the brute-force oracle");
  verify->add_option("periods", o.periods, "2-4 positive integer periods")->required();
  verify->add_option("--lmax", o.lmax, "Largest length scanned by the oracle (default: sum of normalized periods)");
  add_format(verify);

  auto* oracle = app.add_subcommand("oracle", "Run only the brute-force minimal-length search");
  oracle->add_option("periods", o.periods, "1-4 positive integer periods")->required();
  oracle->add_option("--lmax", o.lmax, "Largest length scanned (default: sum of normalized periods)");
  add_format(oracle);

  auto* scan = app.add_subcommand("scan", "Classify every tuple up to a bound");
  scan->add_option("--n", o.n, "Tuple size (3 or 4)")->required();
  scan->add_option("--bound", o.bound, "Largest period")->required();
  add_format(scan);

  auto* family = app.add_subcommand("family", "Build the (abc, abd, acd, bcd) family and classify h_4");
  family->add_option("params", o.family, "a b c d")->required();
  add_format(family);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (predict->parsed()) return cmd_predict(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (family->parsed()) return cmd_family(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace orthostep::cli
