#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "glp/closed.hpp"
#include "glp/error.hpp"
#include "glp/kripke.hpp"
#include "glp/reduction.hpp"
#include "glp/syntax.hpp"
#include "glp/worm.hpp"

namespace glp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = kExitOk;
  std::string text;
  Json json = Json::object();
};

struct Settings {
  std::string order;
  bool json = false;
  std::size_t guard = kDefaultGuard;
  std::string alpha;
  unsigned max_worlds = kDefaultMaxWorlds;
  bool mplus = false;
  std::string model_file;
};

Json ast_json(const Formula& f) {
  Json j;
  j["kind"] = std::string(to_string(f.kind()));
  if (f.kind() == NodeKind::Box || f.kind() == NodeKind::Dia) j["modal"] = f.modal().token();
  if (f.kind() == NodeKind::Var) j["name"] = f.name();
  Json children = Json::array();
  for (std::size_t i = 0; i < f.arity(); ++i) children.push_back(ast_json(f.child(i)));
  j["children"] = std::move(children);
  return j;
}

std::string print_worm(const Worm& w) { return print(to_formula(w)); }

Json worm_json(const Worm& w) {
  Json j = Json::array();
  for (const auto& m : w.modals) j.push_back(m.token());
  return j;
}

JModel load_model(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::IoError, "cannot read model file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return model_from_json(buffer.str());
}

class Session {
 public:
  explicit Session(const Settings& s) : s_(s), provider_(make_provider(s.order)) {}

  Formula formula(const std::string& text) const {
    Formula f = parse(text, *provider_);
    guard(length(f));
    return f;
  }

  Worm worm(const std::string& text) const {
    Worm w = parse_worm(text, *provider_);
    guard(w.size() + 1);
    return w;
  }

  Outcome decide_cmd(const std::string& text) const {
    Formula f = formula(text);
    auto h = hat(f, *provider_);
    auto clauses = formula_wnf(h.formula);
    Verdict v = glp::decide(clauses);
    Outcome o;
    o.code = v.provable ? kExitOk : kExitRefuted;
    o.text = v.provable ? "provable" : "not provable";
    o.json["provable"] = v.provable;
    o.json["verdict"] = o.text;
    o.json["formula"] = print(f);
    o.json["ast"] = ast_json(f);
    if (v.witness) {
      o.json["witness"] = *v.witness;
      o.json["failing_clause"] = print(unhat(to_formula(clauses[*v.witness]), h.map));
    }
    return o;
  }

  Outcome nf_cmd(const std::string& text) const {
    Worm w = worm(text);
    auto map = signature_of(*provider_, w.modals);
    Worm nf = unhat_worm(normalize(hat_worm(w, map)), map);
    Outcome o;
    o.text = print_worm(nf);
    o.json["worm"] = print_worm(w);
    o.json["normal_form"] = o.text;
    o.json["modals"] = worm_json(nf);
    return o;
  }

  Outcome compare_cmd(const std::string& a_text, const std::string& b_text) const {
    Worm a = worm(a_text);
    Worm b = worm(b_text);
    std::vector<Modal> modals = a.modals;
    modals.insert(modals.end(), b.modals.begin(), b.modals.end());
    std::optional<Modal> alpha;
    if (!s_.alpha.empty()) {
      alpha = provider_->parse(s_.alpha);
      modals.push_back(*alpha);
    } else if (auto least = provider_->least()) {
      alpha = provider_->parse(*least);
      modals.push_back(*alpha);
    }
    auto map = signature_of(*provider_, modals);
    Level level = alpha ? static_cast<Level>(map.index_of(*alpha)) : 0;
    Ordering ord = worm_compare(level, hat_worm(a, map), hat_worm(b, map));
    Outcome o;
    o.text = std::string(to_string(ord));
    o.json["a"] = print_worm(a);
    o.json["b"] = print_worm(b);
    if (alpha) o.json["alpha"] = alpha->token();
    o.json["ordering"] = o.text;
    return o;
  }

  Outcome conj_cmd(const std::string& a_text, const std::string& b_text) const {
    Worm a = worm(a_text);
    Worm b = worm(b_text);
    std::vector<Modal> modals = a.modals;
    modals.insert(modals.end(), b.modals.begin(), b.modals.end());
    auto map = signature_of(*provider_, modals);
    Worm c = unhat_worm(worm_conj(hat_worm(a, map), hat_worm(b, map)), map);
    Outcome o;
    o.text = print_worm(c);
    o.json["a"] = print_worm(a);
    o.json["b"] = print_worm(b);
    o.json["conjunction"] = o.text;
    o.json["modals"] = worm_json(c);
    return o;
  }

  Outcome bcw_cmd(const std::string& text) const {
    Formula f = formula(text);
    auto h = hat(f, *provider_);
    WormDNF d = bcw(h.formula);
    Outcome o;
    o.text = print(unhat(to_formula(d), h.map));
    Json disjuncts = Json::array();
    for (const auto& dj : d.disjuncts) {
      Json pos = Json::array();
      Json neg = Json::array();
      for (const auto& w : dj.positives) pos.push_back(print_worm(unhat_worm(w, h.map)));
      for (const auto& w : dj.negatives) neg.push_back(print_worm(unhat_worm(w, h.map)));
      disjuncts.push_back(Json{{"positives", pos}, {"negatives", neg}});
    }
    o.json["formula"] = print(f);
    o.json["bcw"] = o.text;
    o.json["disjuncts"] = std::move(disjuncts);
    return o;
  }

  Outcome wnf_cmd(const std::string& text) const {
    Formula f = formula(text);
    auto h = hat(f, *provider_);
    auto clauses = formula_wnf(h.formula);
    Outcome o;
    Json list = Json::array();
    std::string lines;
    for (const auto& c : clauses) {
      std::string line = print(unhat(to_formula(c), h.map));
      lines += (lines.empty() ? "" : "\n") + line;
      Json succ = Json::array();
      for (const auto& b : c.succedents) succ.push_back(print_worm(unhat_worm(b, h.map)));
      list.push_back(Json{{"antecedent", print_worm(unhat_worm(c.antecedent, h.map))},
                          {"succedents", succ}});
    }
    o.text = clauses.empty() ? "T" : lines;
    o.json["formula"] = print(f);
    o.json["clauses"] = std::move(list);
    return o;
  }

  Outcome reduce_cmd(const std::string& text) const {
    Formula f = formula(text);
    auto h = hat(f, *provider_);
    Bridge bridge = s_.mplus ? Bridge::MPlus : Bridge::NPlus;
    Formula target = reduction_target(f, *provider_, bridge);
    Outcome o;
    std::string map_text;
    Json map = Json::object();
    for (std::size_t i = 0; i < h.map.size(); ++i) {
      const std::string& tok = h.map.modal_at(i).token();
      map_text += (i ? ", " : "") + std::to_string(i) + " -> " + tok;
      map[std::to_string(i)] = tok;
    }
    o.text = "hat: " + print(h.formula) + "\nmap: " + (map_text.empty() ? "{}" : map_text) +
             "\ntarget: " + print(target);
    o.json["hat"] = print(h.formula);
    o.json["map"] = std::move(map);
    o.json["bridge"] = s_.mplus ? "M+" : "N+";
    o.json["target"] = print(target);
    return o;
  }

  Outcome countermodel_cmd(const std::string& text) const {
    Formula f = formula(text);
    Bridge bridge = s_.mplus ? Bridge::MPlus : Bridge::NPlus;
    auto found = countermodel_search(f, *provider_, s_.max_worlds, bridge);
    Outcome o;
    o.json["formula"] = print(f);
    o.json["max_worlds"] = s_.max_worlds;
    o.json["found"] = found.has_value();
    if (!found) {
      o.text = "no countermodel with at most " + std::to_string(s_.max_worlds) + " worlds";
      return o;
    }
    o.code = kExitRefuted;
    std::string model = to_json(found->model);
    const std::string& world = found->model.worlds()[found->world];
    o.text = "refuted at " + world + "\n" + model;
    o.json["world"] = world;
    o.json["model"] = Json::parse(model);
    return o;
  }

  Outcome check_model_cmd(const std::string& text) const {
    JModel m = load_model(s_.model_file);
    Formula f = formula(text);
    Level top = 0;
    for (const auto& modal : modals_of(f)) top = std::max(top, level_of(modal));
    m = m.widened(top);
    CheckResult r = is_valid_on(m, f);
    Outcome o;
    o.json["formula"] = print(f);
    o.json["valid"] = r.valid;
    if (r.valid) {
      o.text = "valid";
    } else {
      o.code = kExitRefuted;
      o.text = "refuted at " + m.worlds()[*r.refuting_world];
      o.json["world"] = m.worlds()[*r.refuting_world];
    }
    return o;
  }

  const OrderProvider& provider() const { return *provider_; }

 private:
  void guard(std::size_t symbols) const {
    if (symbols > s_.guard)
      throw Error(ErrorKind::GuardExceeded, "input has " + std::to_string(symbols) +
                                                " symbols; the guard is " +
                                                std::to_string(s_.guard));
  }

  const Settings& s_;
  ProviderPtr provider_;
};

using Handler = std::function<Outcome(const Session&, const std::vector<std::string>&)>;

int report(const std::string& verb, const Settings& s, const Error& e, std::ostream& out,
           std::ostream& err) {
  if (s.json) {
    Json j;
    j["command"] = verb;
    j["exit"] = kExitError;
    j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (e.position()) j["error"]["position"] = *e.position();
    out << j.dump() << "\n";
  } else {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int emit(const std::string& verb, const Settings& s, const Handler& handler,
         const std::vector<std::string>& operands, std::ostream& out, std::ostream& err) {
  try {
    Session session(s);
    Outcome o = handler(session, operands);
    if (s.json) {
      Json j;
      j["command"] = verb;
      j["order"] = session.provider().id();
      j["exit"] = o.code;
      for (auto& [k, v] : o.json.items()) j[k] = v;
      out << j.dump() << "\n";
    } else {
      out << o.text << "\n";
    }
    return o.code;
  } catch (const Error& e) {
    return report(verb, s, e, out, err);
  }
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// One operand per verb reads the whole line; two operands are split at
// whitespace.
int dispatch(const std::string& verb, const Settings& s, const Handler& handler,
             std::vector<std::string> operands, std::size_t arity, std::istream& in,
             std::ostream& out, std::ostream& err) {
  if (!operands.empty()) {
    if (operands.size() != arity) {
      err << "error: " << verb << " expects " << arity << " operand(s)\n";
      return kExitError;
    }
    return emit(verb, s, handler, operands, out, err);
  }
  int worst = kExitOk;
  for (std::string line; std::getline(in, line);) {
    if (blank(line)) continue;
    std::vector<std::string> ops = arity == 1 ? std::vector<std::string>{line} : split_words(line);
    int code;
    if (ops.size() != arity) {
      err << "error: " << verb << " expects " << arity << " operand(s) per line\n";
      code = kExitError;
    } else {
      code = emit(verb, s, handler, ops, out, err);
    }
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  const char* env_order = std::getenv("GLP_ORDER");
  s.order = env_order && *env_order ? env_order : "omega";

  CLI::App app{"Decision procedures and worm calculus for closed GLP formulas", "glp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--order", s.order,
                 "order of modalities: omega | finite:N | int | lexpair:O1,O2");
  app.add_flag("--json", s.json, "print each result as one JSON object");
  app.add_option("--guard", s.guard, "maximum input length in symbols")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> operands;
  std::string selected;
  std::size_t arity = 1;
  Handler handler;

  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::size_t n, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option(n == 1 ? "formula" : "operands", operands,
                    n == 1 ? "input; read from stdin, one per line, when omitted"
                           : "two worms; read from stdin, two per line, when omitted")
        ->expected(0, static_cast<int>(n));
    sub->callback([&, name, n, h] {
      selected = name;
      arity = n;
      handler = h;
    });
    return sub;
  };

  auto one = [](Outcome (Session::*fn)(const std::string&) const) {
    return Handler([fn](const Session& ses, const std::vector<std::string>& ops) {
      return (ses.*fn)(ops[0]);
    });
  };
  auto two = [](Outcome (Session::*fn)(const std::string&, const std::string&) const) {
    return Handler([fn](const Session& ses, const std::vector<std::string>& ops) {
      return (ses.*fn)(ops[0], ops[1]);
    });
  };

  verb(&app, "decide", "decide provability", 1, one(&Session::decide_cmd));
  verb(&app, "bcw", "Boolean combination of worms", 1, one(&Session::bcw_cmd));
  verb(&app, "wnf", "clausal worm normal form", 1, one(&Session::wnf_cmd));
  auto* reduce = verb(&app, "reduce", "relabel and add the J bridge", 1, one(&Session::reduce_cmd));
  reduce->add_flag("--mplus", s.mplus, "use M+ instead of N+");
  auto* cm = verb(&app, "countermodel", "search for a finite J countermodel", 1,
                  one(&Session::countermodel_cmd));
  cm->add_option("--max-worlds", s.max_worlds, "largest frame to try")
      ->check(CLI::Range(1U, kHardMaxWorlds));
  cm->add_flag("--mplus", s.mplus, "use M+ instead of N+");

  CLI::App* check = app.add_subcommand("check-model", "check validity on a model file");
  check->add_option("file", s.model_file, "model JSON")->required();
  check->add_option("formula", operands, "formula; read from stdin when omitted")
      ->expected(0, 1);
  check->callback([&] {
    selected = "check-model";
    arity = 1;
    handler = one(&Session::check_model_cmd);
  });

  auto add_worm_verbs = [&](CLI::App* parent) {
    verb(parent, "nf", "worm normal form", 1, one(&Session::nf_cmd));
    auto* cmp = verb(parent, "compare", "compare two worms in <_alpha", 2,
                     two(&Session::compare_cmd));
    cmp->add_option("--alpha", s.alpha, "the alpha of <_alpha (default: least modal of the order, else of the worms)");
    verb(parent, "conj", "worm equivalent to a conjunction", 2, two(&Session::conj_cmd));
  };
  add_worm_verbs(&app);
  CLI::App* worm = app.add_subcommand("worm", "worm operations");
  worm->require_subcommand(1);
  worm->fallthrough();
  add_worm_verbs(worm);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  if (selected == "check-model") {
    // Reject a bad model file before reading any formulas.
    try {
      load_model(s.model_file);
    } catch (const Error& e) {
      return report(selected, s, e, out, err);
    }
  }
  return dispatch(selected, s, handler, operands, arity, in, out, err);
}

}  // namespace glp::cli
