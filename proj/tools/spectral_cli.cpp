#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spectral/json_io.hpp"

using namespace spectral;
using json_io::Json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string field = "rat";
  std::string model = "dense";

  std::string interval, ideal, source, target, f, g, morphism, input, module, barcode, point, set, strategy = "double-orth",
      direction, region, p, q, op, a, b, eps, step;
  long length = 0, i = 0, j = 0;
};

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" reads stdin, "@path" reads a file, an existing path is read, anything else is inline.
std::string resolve(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  std::string path;
  if (!arg.empty() && arg.front() == '@') path = arg.substr(1);
  else if (std::error_code ec; std::filesystem::is_regular_file(arg, ec)) path = arg;
  if (path.empty()) return arg;
  std::ifstream file(path);
  if (!file) throw MalformedInput("cannot read " + path);
  return slurp(file);
}

Json load(const std::string& arg, const char* what) {
  if (arg.empty()) throw Usage(std::string("missing input: ") + what);
  return json_io::parse_text(resolve(arg));
}

// Interval inputs also accept the bare "[a,b)" shorthand, which is not JSON.
Json load_interval(const std::string& arg) {
  if (arg.empty()) throw Usage("missing interval");
  const std::string text = resolve(arg);
  try {
    return json_io::parse_text(text);
  } catch (const MalformedInput&) {
    return Json(text);
  }
}

Rational load_rational(const std::string& arg, const char* what) {
  if (arg.empty()) throw Usage(std::string("missing value: ") + what);
  return Rational::parse(arg);
}

IndexModel parse_model(const std::string& s) {
  if (s == "dense") return IndexModel::real_line();
  if (s == "dense-surd") return IndexModel::rationals_with_cuts();
  if (s.rfind("chain:", 0) == 0) {
    const std::string n = s.substr(6);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos) throw Usage("bad chain length: " + s);
    return IndexModel::finite_chain(std::stoul(n));
  }
  throw Usage("unknown model: " + s);
}

ScalarField parse_field(const std::string& s) {
  if (s == "rat") return ScalarField::rationals();
  if (s.rfind("fp:", 0) == 0) {
    const std::string n = s.substr(3);
    if (n.empty() || n.size() > 18 || n.find_first_not_of("0123456789") != std::string::npos) {
      throw Usage("bad prime field: " + s);
    }
    const auto p = std::stoull(n);
    if (!is_prime(p)) throw Usage(n + " is not prime");
    return ScalarField::prime_field(p);
  }
  throw Usage("unknown field: " + s);
}

void check_module(const IndexModel& model, const FpModule& m) {
  for (const auto& x : m.summands()) validate(model, x);
}

template <class S>
void check_morphism(const IndexModel& model, const FpMorphism<S>& f) {
  check_module(model, f.source);
  check_module(model, f.target);
}

ClosureStrategy parse_strategy(const std::string& s) {
  if (s == "double-orth") return ClosureStrategy::DoubleOrthogonal;
  if (s == "supinf") return ClosureStrategy::SupInfSaturation;
  if (s == "order") return ClosureStrategy::OrderTopology;
  throw Usage("unknown strategy: " + s);
}

// Commands whose inputs carry scalars, run over the selected field.
template <class S>
Json run_scalar(const std::string& cmd, const Options& o, const IndexModel& model, const ScalarField& field) {
  if (cmd == "compose") {
    const auto f = json_io::morphism_from_json<S>(load(o.f, "--f"), field);
    const auto g = json_io::morphism_from_json<S>(load(o.g, "--g"), field);
    check_morphism(model, f);
    check_morphism(model, g);
    return json_io::to_json(compose(f, g));
  }
  if (cmd == "kernel") {
    const auto f = json_io::morphism_from_json<S>(load(o.morphism, "--morphism"), field);
    check_morphism(model, f);
    const auto k = kernel(f);
    return {{"module", json_io::to_json(k.module)}, {"inclusion", json_io::to_json(k.inclusion)}};
  }
  if (cmd == "cokernel") {
    const auto f = json_io::morphism_from_json<S>(load(o.morphism, "--morphism"), field);
    check_morphism(model, f);
    const auto c = cokernel(f);
    return {{"module", json_io::to_json(c.module)}, {"projection", json_io::to_json(c.projection)}};
  }
  if (cmd == "reduce-gens") {
    const auto gs = json_io::generators_from_json<S>(load(o.input, "--input"), field);
    check_module(model, gs.ambient);
    return {{"retained", reduce_generators(gs.ambient, gs.generators)}};
  }
  const auto chain = [&] {
    auto m = json_io::chain_from_json<S>(load(o.module, "--module"), field);
    m.validate();
    return m;
  };
  if (cmd == "is-flat") return {{"flat", is_flat(chain())}};
  if (cmd == "decompose") return json_io::to_json(decompose(chain()));
  if (cmd == "rank") return {{"rank", rank_invariant(chain(), o.i, o.j)}};
  if (cmd == "realize") {
    return json_io::to_json(realize<S>(json_io::barcode_from_json(load(o.barcode, "--barcode")), o.length));
  }
  throw std::logic_error("unhandled command " + cmd);
}

Json run(const std::string& cmd, const Options& o) {
  const IndexModel model = parse_model(o.model);
  const ScalarField field = parse_field(o.field);
  const auto point = [&](const std::string& arg, const char* what) {
    const DPoint p = json_io::dpoint_from_json(load(arg, what));
    validate(model, p);
    return p;
  };
  const auto symbolic = [&](const std::string& arg, const char* what) {
    return json_io::set_from_json(model, load(arg, what));
  };

  if (cmd == "hom") {
    const FpInterval x = json_io::interval_from_json(load_interval(o.interval));
    validate(model, x);
    return {{"dim", hom_to_injective(x, point(o.ideal, "--ideal"))}};
  }
  if (cmd == "hom-fp") {
    const FpInterval x = json_io::interval_from_json(load_interval(o.source));
    const FpInterval y = json_io::interval_from_json(load_interval(o.target));
    validate(model, x);
    validate(model, y);
    return {{"dim", hom_dim(x, y)}};
  }
  if (cmd == "compose" || cmd == "kernel" || cmd == "cokernel" || cmd == "reduce-gens" || cmd == "is-flat" ||
      cmd == "decompose" || cmd == "realize" || cmd == "rank") {
    if (field.kind == ScalarField::Kind::PrimeField) return run_scalar<Fp>(cmd, o, model, field);
    return run_scalar<Rational>(cmd, o, model, field);
  }
  if (cmd == "classify") return {{"type", static_cast<int>(classify_ideal(model, point(o.point, "--point")))}};
  if (cmd == "closure") {
    const SymbolicSet u = symbolic(o.set, "--set");
    SymbolicSet c = u;
    if (o.strategy == "all") {
      c = closure(u, ClosureStrategy::DoubleOrthogonal);
      for (const auto s : {ClosureStrategy::SupInfSaturation, ClosureStrategy::OrderTopology}) {
        if (!(closure(u, s) == c)) {
          throw DomainError("strategy_disagreement", "closure strategies disagree on " + u.str());
        }
      }
    } else {
      c = closure(u, parse_strategy(o.strategy));
    }
    return {{"closed", c == u}, {"set", json_io::to_json(c)}};
  }
  if (cmd == "is-closed") return {{"closed", is_closed(symbolic(o.set, "--set"))}};
  if (cmd == "orthogonal") {
    if (o.direction == "left") return json_io::to_json(left_orthogonal(symbolic(o.set, "--set")));
    if (o.direction == "right") {
      return json_io::to_json(right_orthogonal(json_io::region_from_json(model, load(o.region, "--region"))));
    }
    throw Usage("--direction must be left or right");
  }
  if (cmd == "separate") {
    const auto [u, v] = separate(model, point(o.p, "--p"), point(o.q, "--q"));
    return {{"first", json_io::to_json(u)}, {"second", json_io::to_json(v)}};
  }
  if (cmd == "set") {
    const SymbolicSet a = symbolic(o.a, "--a");
    if (o.op == "union") return json_io::to_json(set_union(a, symbolic(o.b, "--b")));
    if (o.op == "intersect") return json_io::to_json(set_intersection(a, symbolic(o.b, "--b")));
    if (o.op == "complement") return json_io::to_json(set_complement(a));
    if (o.op == "member") return {{"member", a.contains(point(o.point, "--point"))}};
    throw Usage("--op must be union, intersect, complement or member");
  }
  if (cmd == "shift") {
    const Rational eps = load_rational(o.eps, "--eps");
    if (!o.interval.empty()) {
      const FpInterval x = json_io::interval_from_json(load_interval(o.interval));
      validate(model, x);
      SymbolicSet::require_dense(model);
      return json_io::to_json(shift(x, eps));
    }
    SymbolicSet::require_dense(model);
    return json_io::to_json(shift(point(o.point, "--point"), eps));
  }
  if (cmd == "interleaved") {
    return {{"interleaved", is_interleaved(model, point(o.p, "--p"), point(o.q, "--q"), load_rational(o.eps, "--eps"))}};
  }
  if (cmd == "distance") return json_io::to_json(distance(model, point(o.p, "--p"), point(o.q, "--q")));
  if (cmd == "ball") return json_io::to_json(ball(model, point(o.p, "--p"), load_rational(o.eps, "--eps")));
  if (cmd == "distance-oracle") {
    const auto r = brute_force_distance(model, point(o.p, "--p"), point(o.q, "--q"), load_rational(o.step, "--step"));
    if (r.infinite) return {{"infinite", true}};
    return {{"lower", r.lower.str()}, {"upper", r.upper.str()}};
  }
  throw Usage("unknown subcommand " + cmd);
}

std::string text_of(const Json& j, const IndexModel& model) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_object()) return j.dump();
  if (j.contains("components")) return json_io::set_from_json(model, j).str();
  if (j.contains("summands")) {
    const FpModule m = json_io::module_from_json(j);
    std::string s;
    for (const auto& x : m.summands()) s += (s.empty() ? "" : " + ") + x.str();
    return s.empty() ? "0" : s;
  }
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string v = text_of(*it, model);
    if (v.find('\n') != std::string::npos) {
      std::string indented;
      for (std::size_t at = 0; at < v.size();) {
        const std::size_t nl = std::min(v.find('\n', at), v.size());
        indented += "\n  " + v.substr(at, nl - at);
        at = nl + 1;
      }
      v = indented;
    } else {
      v = " " + v;
    }
    out += (out.empty() ? "" : "\n") + it.key() + ":" + v;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with persistence modules over totally ordered sets and their Ziegler spectra."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", o.field, "rat or fp:<p>");
  app.add_option("--model", o.model, "dense, dense-surd or chain:<L>");

  const auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* hom = add("hom", "dim Hom(k_[a,b), k_I) for an interval and an ideal");
  hom->add_option("--interval", o.interval)->required();
  hom->add_option("--ideal", o.ideal)->required();
  auto* hom_fp = add("hom-fp", "dim Hom between two interval modules");
  hom_fp->add_option("--source", o.source)->required();
  hom_fp->add_option("--target", o.target)->required();
  auto* comp = add("compose", "f after g");
  comp->add_option("--f", o.f)->required();
  comp->add_option("--g", o.g)->required();
  for (const char* name : {"kernel", "cokernel"}) {
    add(name, name == std::string("kernel") ? "kernel of a morphism with its inclusion"
                                            : "cokernel of a morphism with its projection")
        ->add_option("--morphism", o.morphism)
        ->required();
  }
  add("reduce-gens", "independent subset of generators of a submodule of a projective")
      ->add_option("--input", o.input)
      ->required();
  add("is-flat", "whether all structure maps of a chain module are injective")->add_option("--module", o.module)->required();
  add("decompose", "barcode of a chain module")->add_option("--module", o.module)->required();
  auto* realize_cmd = add("realize", "chain module of a barcode");
  realize_cmd->add_option("--barcode", o.barcode)->required();
  realize_cmd->add_option("--length", o.length)->required();
  auto* rank = add("rank", "rank of the structure map i <= j");
  rank->add_option("--module", o.module)->required();
  rank->add_option("--i", o.i)->required();
  rank->add_option("--j", o.j)->required();
  add("classify", "type of an ideal")->add_option("--point", o.point)->required();
  auto* clo = add("closure", "Ziegler closure of a set of ideals");
  clo->add_option("--set", o.set)->required();
  clo->add_option("--strategy", o.strategy)->check(CLI::IsMember({"double-orth", "supinf", "order", "all"}));
  add("is-closed", "whether a set of ideals is Ziegler closed")->add_option("--set", o.set)->required();
  auto* orth = add("orthogonal", "left orthogonal of a set or right orthogonal of a region");
  orth->add_option("--direction", o.direction)->required()->check(CLI::IsMember({"left", "right"}));
  orth->add_option("--set", o.set);
  orth->add_option("--region", o.region);
  auto* sep = add("separate", "disjoint open neighbourhoods of two distinct ideals");
  sep->add_option("--p", o.p)->required();
  sep->add_option("--q", o.q)->required();
  auto* set = add("set", "Boolean operations on sets of ideals");
  set->add_option("--op", o.op)->required()->check(CLI::IsMember({"union", "intersect", "complement", "member"}));
  set->add_option("--a", o.a)->required();
  set->add_option("--b", o.b);
  set->add_option("--point", o.point);
  auto* shift_cmd = add("shift", "shift an interval or an ideal down by eps");
  shift_cmd->add_option("--interval", o.interval);
  shift_cmd->add_option("--point", o.point);
  shift_cmd->add_option("--eps", o.eps)->required();
  auto* inter = add("interleaved", "whether two injective indecomposables are eps-interleaved");
  inter->add_option("--p", o.p)->required();
  inter->add_option("--q", o.q)->required();
  inter->add_option("--eps", o.eps)->required();
  auto* dist = add("distance", "interleaving distance of two injective indecomposables");
  dist->add_option("--p", o.p)->required();
  dist->add_option("--q", o.q)->required();
  auto* ball_cmd = add("ball", "open interleaving ball as a set of ideals");
  ball_cmd->add_option("--p", o.p)->required();
  ball_cmd->add_option("--eps", o.eps)->required();
  auto* oracle = add("distance-oracle", "bracket the interleaving distance by scanning eps");
  oracle->add_option("--p", o.p)->required();
  oracle->add_option("--q", o.q)->required();
  oracle->add_option("--step", o.step)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto emit_error = [](const std::string& kind, const std::string& detail) {
    std::cout << Json{{"error", {{"kind", kind}, {"detail", detail}}}}.dump() << "\n";
  };
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Json out = run(cmd, o);
    if (o.format == "text") std::cout << text_of(out, parse_model(o.model)) << "\n";
    else std::cout << out.dump() << "\n";
    return 0;
  } catch (const DomainError& e) {
    emit_error(e.kind(), e.what());
    return 1;
  } catch (const MalformedInput& e) {
    emit_error("malformed_input", e.what());
    return 2;
  } catch (const Usage& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const Json::exception& e) {
    emit_error("malformed_input", e.what());
    return 2;
  }
}
