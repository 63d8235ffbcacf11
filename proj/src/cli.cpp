#include "leibext/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "leibext/classification.hpp"
#include "leibext/errors.hpp"
#include "leibext/json_io.hpp"
#include "leibext/verify.hpp"

namespace leibext::cli {

namespace {

struct Options {
  int n = 0;
  std::uint64_t seed = 1;
  int trials = 100;
  double tol_rel = Tolerance{}.rel;
  double tol_abs = Tolerance{}.abs;
  std::vector<std::string> inputs;
  std::string output = "-";
  std::string format = "json";
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(o), in_(in), out_(out), err_(err) {}

  Tolerance tol() const { return {opt_.tol_abs, opt_.tol_rel}; }

  std::vector<Json> documents() {
    std::vector<Json> docs;
    const auto sources = opt_.inputs.empty() ? std::vector<std::string>{"-"} : opt_.inputs;
    for (const auto& src : sources) {
      if (src == "-") {
        std::stringstream buf;
        buf << in_.rdbuf();
        docs.push_back(Json::parse(buf.str()));
      } else {
        std::ifstream f(src);
        if (!f) throw FormatError("cannot open input " + src);
        docs.push_back(Json::parse(f));
      }
    }
    return docs;
  }

  Json single() {
    auto docs = documents();
    if (docs.size() != 1) throw FormatError("expected exactly one input");
    return docs.front();
  }

  // Two documents, or one object holding both under the given keys.
  std::pair<Json, Json> pair(const char* first, const char* second) {
    auto docs = documents();
    if (docs.size() == 2) return {docs[0], docs[1]};
    if (docs.size() == 1 && docs[0].is_object() && docs[0].contains(first) &&
        docs[0].contains(second)) {
      return {docs[0][first], docs[0][second]};
    }
    throw FormatError(std::string("expected two inputs or an object with \"") + first + "\" and \"" +
                      second + "\"");
  }

  void emit(const std::string& text) {
    if (opt_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output);
    if (!f) throw FormatError("cannot open output " + opt_.output);
    f << text;
  }
  void emit(const Json& j) { emit(j.dump(2) + "\n"); }

  std::ostream& err() { return err_; }
  const Options& options() const { return opt_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

// Parameters given directly or as an adapted-basis tensor.
ExtensionParams params_or_tensor(const Json& j) {
  if (j.is_object() && j.contains("gamma")) return read_params(tensor_from_json(j));
  return params_from_json(j);
}

int require_n(const Options& o) {
  if (o.n < kMinN || o.n > kMaxN) throw ArgumentError("--n must lie in 4..8");
  return o.n;
}

int cmd_build(Session& s) {
  s.emit(to_json(build_table(params_from_json(s.single()))));
  return kExitOk;
}

int cmd_check(Session& s) {
  const StructureTensor t = tensor_from_json(s.single());
  const LeibnizDefect d = leibniz_defect(t);
  Json out = {{"leibniz_residual", d.residual},
              {"worst_triple", d.worst_triple},
              {"filiform", is_filiform(t)},
              {"series", to_json(lower_central_series(t))}};
  s.emit(out);
  return kExitOk;
}

int cmd_act(Session& s) {
  auto [pj, tj] = s.pair("params", "transform");
  s.emit(to_json(act_on_params(transform_from_json(tj), params_from_json(pj))));
  return kExitOk;
}

int cmd_classify(Session& s) {
  const ExtensionParams p = params_or_tensor(s.single());
  const OrbitLabel label = classify(p, s.tol(), s.options().seed);
  if (label.invariants.flag_margin < 1e-6) {
    s.err() << "warning: zero/nonzero decision margin " << label.invariants.flag_margin
            << " is below 1e-6; the subset is numerically ambiguous\n";
  }
  s.emit(to_json(label));
  return kExitOk;
}

int cmd_isomorphic(Session& s) {
  auto [pj, qj] = s.pair("p", "q");
  const IsomorphismResult r = isomorphic(params_or_tensor(pj), params_or_tensor(qj), s.tol());
  s.emit(Json{{"isomorphic", r.isomorphic},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}});
  return kExitOk;
}

int cmd_representatives(Session& s) {
  const int n = require_n(s.options());
  Json subsets = Json::array();
  for (const auto& r : representatives(n)) {
    subsets.push_back({{"subset", r.subset.label()},
                       {"representative", to_json(r.params)},
                       {"parametric", r.parametric}});
  }
  Json extra = Json::array();
  for (const auto& e : exceptional_representatives(n)) {
    extra.push_back({{"subset", e.subset.label()}, {"representative", to_json(e.params)}, {"locus", e.locus}});
  }
  if (s.options().format == "table") {
    std::ostringstream os;
    for (const auto& r : representatives(n)) {
      os << std::left << std::setw(6) << r.subset.label() << (r.parametric ? "parametric  " : "single      ");
      const auto v = to_vector(r.params);
      os << "L(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        if (r.parametric && i == 0) os << "lambda";
        else os << v[i].real();
      }
      os << ")\n";
    }
    s.emit(os.str());
  } else {
    s.emit(Json{{"n", n}, {"subsets", subsets}, {"exceptional", extra}});
  }
  return kExitOk;
}

int cmd_derive(Session& s) {
  s.emit(to_json(solve_leibniz_constraints(s.options().n)));
  return kExitOk;
}

int cmd_verify(Session& s) {
  const VerificationReport r = verify_all(s.options().seed, s.options().trials);
  s.emit(s.options().format == "table" ? report_table(r) : report_json(r));
  return r.passed() == r.total() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz central extensions CE(mu_n), n = 4..8"};
  app.require_subcommand(1, 1);
  Options opt;
  const auto common = [&opt](CLI::App* c) {
    c->add_option("--n", opt.n, "dimension parameter n");
    c->add_option("--seed", opt.seed, "random seed");
    c->add_option("--trials", opt.trials, "trials per check");
    c->add_option("--tol-rel", opt.tol_rel, "relative tolerance");
    c->add_option("--tol-abs", opt.tol_abs, "absolute tolerance");
    c->add_option("--input", opt.inputs, "input JSON file, - for stdin (repeatable)");
    c->add_option("--output", opt.output, "output file, - for stdout");
    c->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  using Handler = int (*)(Session&);
  const std::vector<std::tuple<const char*, const char*, Handler>> verbs{
      {"build", "parameters to structure tensor", cmd_build},
      {"check", "Leibniz residual and lower central series of a tensor", cmd_check},
      {"act", "apply an adapted transform to parameters", cmd_act},
      {"classify", "subset, normal form and witness", cmd_classify},
      {"isomorphic", "decide isomorphism of two parameter sets", cmd_isomorphic},
      {"representatives", "normal forms for --n", cmd_representatives},
      {"derive-constraints", "solve the Leibniz constraints for --n", cmd_derive},
      {"verify-paper", "run the full verification suite", cmd_verify},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, fn] : verbs) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    subs.emplace_back(c, fn);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  }

  Session session(opt, in, out, err);
  try {
    for (const auto& [c, fn] : subs)
      if (c->parsed()) return fn(session);
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitMalformedInput;
}

}  // namespace leibext::cli
