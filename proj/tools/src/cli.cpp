#include "weilkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "weilkit/classify.hpp"
#include "weilkit/cmfield.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/honda_tate.hpp"
#include "weilkit/integer.hpp"
#include "weilkit/lattice.hpp"
#include "weilkit/serialize.hpp"
#include "weilkit/weil.hpp"

namespace weilkit::cli {

using io::Json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotWeil:
    case ErrorCode::Reducible:
    case ErrorCode::ReduciblePoly:
    case ErrorCode::NotIsogenyClass:
    case ErrorCode::NotMonogenicDeclared:
    case ErrorCode::NonTransitiveH:
    case ErrorCode::UnstableKernel:
    case ErrorCode::NoAdmissibleAssignment:
    case ErrorCode::WrongDimension:
      return kValidationFailure;
    case ErrorCode::SearchExhausted:
    case ErrorCode::Inconsistent:
    case ErrorCode::InternalInconsistency:
    case ErrorCode::PrecisionExhausted:
      return kSearchFailure;
    default:
      return kMalformed;
  }
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t start = token[0] == '-' || token[0] == '+' ? 1 : 0;
    bool digits = start < token.size() &&
                  std::all_of(token.begin() + static_cast<long>(start), token.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!digits) throw Error(ErrorCode::InvalidArgument, "malformed integer '" + token + "'");
    if (token[0] == '+') token.erase(0, 1);
    out.emplace_back(token);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

namespace {

long parse_long(const std::string& s, const std::string& what) {
  auto v = parse_integer_list(s);
  if (v.size() != 1 || !v[0].fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "malformed " + what + " '" + s + "'");
  return v[0].get_si();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> cycle_perm(int n) {
  std::vector<int> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
  return c;
}

}  // namespace

GaloisShape parse_galois(int n, const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "--galois must look like j:H, e.g. 1:S5");
  long j = parse_long(parts[0], "j");
  if (j < 1 || j > n) throw Error(ErrorCode::InvalidArgument, "j must lie in 1..n");
  for (auto s : transitive_shadows(n))
    if (s.h_name == parts[1]) {
      s.j = static_cast<int>(j);
      return s;
    }
  throw Error(ErrorCode::InvalidArgument, "unknown transitive group '" + parts[1] + "' for n = " + std::to_string(n));
}

PermGens parse_h(int n, const std::string& text) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const std::string ns = std::to_string(n);
  if (text == "C" + ns) return {cycle_perm(n)};
  if (text == "S" + ns) {
    PermGens g{cycle_perm(n)};
    if (n > 1) {
      std::vector<int> t(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = i;
      std::swap(t[0], t[1]);
      g.push_back(t);
    }
    return g;
  }
  if (text.find_first_of(",;") != std::string::npos || (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0])))) {
    PermGens gens;
    for (const auto& p : split(text, ';')) {
      std::vector<int> perm;
      for (const auto& x : parse_integer_list(p)) {
        if (!x.fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "permutation entry out of range");
        perm.push_back(static_cast<int>(x.get_si()));
      }
      gens.push_back(perm);
    }
    return gens;
  }
  if (n == 3 || n == 5 || n == 7)
    for (const auto& s : transitive_shadows(n))
      if (s.h_name == text) return s.h_generators;
  throw Error(ErrorCode::InvalidArgument, "unknown group '" + text + "' for n = " + std::to_string(n));
}

namespace {

struct Outcome {
  Json body;
  int code = kOk;
};

Outcome analyze(const std::string& coeffs_arg, std::uint64_t p, int f, std::istream& in) {
  std::string text = coeffs_arg;
  if (coeffs_arg == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  IntPoly poly(parse_integer_list(text));

  Json report;
  Json coeffs = Json::array();
  for (const auto& c : parse_integer_list(text)) coeffs.push_back(io::encode(c));
  report["input"] = {{"coeffs", coeffs}, {"p", p}, {"f", f}};
  report["flavor"] = nullptr;
  report["slopes"] = Json::array();
  report["weakly_neat"] = nullptr;
  report["splits_completely"] = nullptr;
  report["factors"] = Json::array();
  report["absolutely_simple"] = nullptr;
  report["classification"] = nullptr;
  report["warnings"] = Json::array();

  auto violations = weil_violations(poly, p, f);
  report["violations"] = violations;
  report["valid"] = violations.empty();
  if (!violations.empty()) {
    report["error"] = "not a Weil polynomial";
    report["error_code"] = std::string(to_string(ErrorCode::NotWeil));
    return {report, kValidationFailure};
  }

  WeilPolynomial w = validate_weil(poly, p, f);
  ReductionFlavor rf = reduction_flavor(w);
  report["flavor"] = to_string(rf.kind);
  report["slopes"] = io::encode(rf.profile);
  report["weakly_neat"] = is_weakly_neat(w);
  if (is_irreducible(w.poly)) report["splits_completely"] = splitting_test(w);

  Decomposition dec = decompose(w);
  int total_dim = 0;
  for (size_t i = 0; i < dec.classes.size(); ++i) {
    const auto& [cls, mult] = dec.classes[i];
    Json j = io::encode(cls);
    j["multiplicity"] = mult;
    report["factors"].push_back(j);
    total_dim += cls.dimension * mult;
    if (cls.approximate) report["warnings"].push_back("factor " + std::to_string(i) + " has approximate local invariants");
  }
  report["absolutely_simple"] = dec.absolutely_simple;
  report["cm_algebra"] = dec.cm_algebra;
  if (total_dim == 16) {
    ConcreteMatch m = classify_concrete(dec);
    if (m.consistent) {
      report["classification"] = m.case_tag;
    } else {
      report["warnings"].push_back("dimension 16 but no rank-6 decomposition type matches: " + m.reason);
    }
  }
  return {report, kOk};
}

Outcome lattices(int n, bool oracle) {
  auto lats = saturated_cyclic_sublattices(n);
  Json list = Json::array();
  for (const auto& l : lats) list.push_back(io::encode(l));
  Json out{{"n", n}, {"count", lats.size()}, {"lattices", list}};
  if (oracle) {
    auto brute = brute_force_lattices(n);
    auto key = [](const IntMatrix& m) {
      std::vector<std::string> k;
      for (const auto& row : m.to_rows())
        for (const auto& x : row) k.push_back(x.get_str());
      k.push_back(std::to_string(m.rows()));
      return k;
    };
    std::set<std::vector<std::string>> a, b;
    for (const auto& l : lats) a.insert(key(l.basis));
    for (const auto& m : brute) b.insert(key(m));
    out["oracle"] = {{"count", brute.size()}, {"agrees", a == b}};
  }
  return {out, kOk};
}

Outcome classify(int n, const std::string& kernel_arg, const std::string& galois_arg) {
  KernelTag tag = parse_kernel_tag(kernel_arg);
  ShapeArg shape;
  if (!galois_arg.empty()) shape = parse_galois(n, galois_arg);
  DecompositionType d = classify_prime_rank(n, tag, shape);
  Json out = io::encode(d);
  out["kernel"] = to_string(tag);
  out["shape"] = shape ? io::encode(*shape) : Json(nullptr);
  return {out, kOk};
}

Outcome simulate_cmd(int n, const std::string& h_arg, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  PermGens h = parse_h(n, h_arg);
  DensityReport r = simulate(n, h, k, trials, seed, {threads, {}});
  Json out = io::encode(r);
  out["h"] = h;
  out["seed"] = std::to_string(seed);
  out["within_4_sigma"] = r.abs_error.get_d() <= 4 * r.sigma;
  return {out, kOk};
}

Outcome cmsearch(long d, const std::string& inert_arg, std::uint64_t bound) {
  std::vector<std::uint64_t> inert;
  for (const auto& x : parse_integer_list(inert_arg)) {
    if (x < 0 || !x.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "inert prime out of range");
    inert.push_back(x.get_ui());
  }
  return {io::encode(find_inert_cm_prime(d, inert, bound)), kOk};
}

Outcome enumerate_tables(int n) {
  auto rows = enumerate_table(n);
  Json list = Json::array();
  std::set<int> tags;
  std::set<std::string> algebras;
  int accepted = 0;
  for (const auto& r : rows) {
    list.push_back(io::encode(r));
    if (r.result) {
      ++accepted;
      tags.insert(r.result->case_tag);
      algebras.insert(r.result->algebra);
    }
  }
  Json summary{{"rows", rows.size()},
               {"accepted", accepted},
               {"rejected", static_cast<int>(rows.size()) - accepted},
               {"case_tags", tags},
               {"algebras", algebras}};
  return {Json{{"n", n}, {"rows", list}, {"summary", summary}}, kOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Weil polynomial and decomposition toolkit", "weilkit"};
  app.require_subcommand(1);

  std::string coeffs;
  std::uint64_t p = 0;
  int f = 1;
  auto* an = app.add_subcommand("analyze", "Weil checks, Newton polygon and Honda-Tate data of a polynomial");
  an->add_option("--coeffs", coeffs, "ascending coefficients, comma separated, or - for standard input")->required();
  an->add_option("--p", p, "characteristic")->required();
  an->add_option("--f", f, "q = p^f")->required();

  int n = 0;
  bool oracle = false;
  auto* la = app.add_subcommand("lattices", "saturated shift-stable sublattices of Z^n");
  la->add_option("--n", n, "rank")->required();
  la->add_flag("--oracle", oracle, "compare with the brute-force enumeration");

  std::string kernel, galois;
  auto* cl = app.add_subcommand("classify", "decomposition type for a kernel and Galois shape");
  cl->add_option("--n", n, "prime rank in {3, 5, 7}")->required();
  cl->add_option("--kernel", kernel, "zero, diagonal, sumzero or full")->required();
  cl->add_option("--galois", galois, "j:H, e.g. 1:S5");

  std::string h;
  int k = 0;
  std::uint64_t trials = 0, seed = 0;
  unsigned threads = 0;
  auto* si = app.add_subcommand("simulate", "Monte Carlo estimate of the full-image probability");
  si->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  si->add_option("--n", n, "number of coordinates")->required();
  si->add_option("--h", h, "Cn, Sn, a transitive group name or explicit permutations")->required();
  si->add_option("--k", k, "number of sign vectors drawn per trial")->required();
  si->add_option("--trials", trials, "number of trials")->required();
  si->add_option("--seed", seed, "seed of the counter-based generator")->required();
  si->add_option("--threads", threads, "worker threads (0: WEILKIT_THREADS or hardware)");

  long d = 0;
  std::string inert;
  std::uint64_t bound = 0;
  auto* cm = app.add_subcommand("cmsearch", "smallest prime giving a cyclic CM field with prescribed inert primes");
  cm->add_option("--d", d, "odd degree of the totally real subfield")->required();
  cm->add_option("--inert", inert, "comma-separated primes that must be inert");
  cm->add_option("--bound", bound, "largest prime examined")->required();

  auto* en = app.add_subcommand("enumerate-tables", "every kernel and Galois shape with its decomposition type");
  n = 5;
  en->add_option("--n", n, "prime rank")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << io::dump({{"error", e.what()}, {"error_code", "InvalidArgument"}, {"details", Json::array()}});
    return kMalformed;
  }

  try {
    Outcome o;
    if (an->parsed()) {
      o = analyze(coeffs, p, f, in);
    } else if (la->parsed()) {
      o = lattices(n, oracle);
    } else if (cl->parsed()) {
      o = classify(n, kernel, galois);
    } else if (si->parsed()) {
      o = simulate_cmd(n, h, k, trials, seed, threads);
    } else if (cm->parsed()) {
      o = cmsearch(d, inert, bound);
    } else {
      o = enumerate_tables(n);
    }
    out << io::dump(o.body);
    return o.code;
  } catch (const Error& e) {
    out << io::dump(io::encode(e));
    return exit_code_for(e.code());
  }
}

}  // namespace weilkit::cli
