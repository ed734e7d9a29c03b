#include "cli.hpp"

#include "splicecert/splicecert.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace splicecli {

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kNoResult = 3, kInternal = 4 };

int exit_for(sc_status status) {
  switch (status) {
    case SC_OK: return kOk;
    case SC_STRUCTURE_ERROR:
    case SC_INVALID_DIAGRAM:
    case SC_NOT_MINIMAL:
      return kInvalid;
    case SC_NO_RESULT:
    case SC_EXCEPTIONAL:
    case SC_INFINITE_GAPS:
    case SC_TOO_LARGE:
      return kNoResult;
    case SC_CASE_EXHAUSTED:
    case SC_INTERNAL:
      return kInternal;
    default:
      return kUsage;
  }
}

struct StringDeleter {
  void operator()(char* s) const { sc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DiagramDeleter {
  void operator()(sc_diagram* d) const { sc_diagram_free(d); }
};

std::string num(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string generator_list(const json& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + num(gens[i]);
  return out + ">";
}

void print_certificate(std::ostream& out, const json& c) {
  if (c.at("kind") == "semigroup_condition_failure") {
    out << "semigroup condition fails at node " << c["node"].get<std::string>() << " on edge "
        << c["edge"].get<std::string>() << ": " << num(c["weight"]) << " not in " << generator_list(c["generators"])
        << '\n';
  } else {
    out << "delta obstruction for " << c["target"].get<std::string>() << ": mu = " << num(c["mu"])
        << " > 2*delta = 2*" << num(c["delta"]) << ", generators " << generator_list(c["generators"]) << '\n';
  }
}

void print_witness(std::ostream& out, const json& w) {
  out << "case: " << w["case"].get<std::string>() << '\n';
  if (!w["detail"].get<std::string>().empty()) out << w["detail"].get<std::string>() << '\n';
  for (const char* key : {"cabling", "second_cabling"}) {
    if (!w.contains(key) || w[key].is_null()) continue;
    const json& c = w[key];
    out << "cabling: new node on edge " << c["old_node"].get<std::string>() << "-" << c["far_end"].get<std::string>()
        << " with weights " << num(c["weight_toward_old_node"]) << " (toward " << c["old_node"].get<std::string>()
        << ") and " << num(c["weight_toward_far_side"]) << '\n';
  }
  out << "diagram:\n" << w["diagram"].get<std::string>();
  out << "certificate: ";
  print_certificate(out, w["certificate"]);
  out << "distinct knots: " << (w["distinct_knots"].get<bool>() ? "yes" : "no") << '\n';
}

class Driver {
 public:
  Driver(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  bool json_mode = false;

  // Reports a failed library call and returns its exit code.
  int failure(sc_status status, const std::string& context) {
    int line = 0, column = 0;
    sc_last_error_location(&line, &column);
    err_ << "error";
    if (!context.empty()) err_ << " (" << context << ")";
    if (line > 0) err_ << " at " << line << ":" << column;
    err_ << ": " << sc_last_error() << " [" << sc_status_name(status) << "]\n";
    return exit_for(status);
  }

  std::optional<std::string> read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err_ << "error: cannot open '" << path << "'\n";
      return std::nullopt;
    }
    buf << file.rdbuf();
    return buf.str();
  }

  // Parses FILE; on failure fills code.
  std::unique_ptr<sc_diagram, DiagramDeleter> load(const std::string& path, int& code) {
    auto text = read_input(path);
    if (!text) {
      code = kUsage;
      return nullptr;
    }
    sc_diagram* raw = nullptr;
    sc_status status = sc_diagram_parse(text->data(), text->size(), &raw);
    if (status != SC_OK) {
      code = failure(status, path);
      return nullptr;
    }
    return std::unique_ptr<sc_diagram, DiagramDeleter>(raw);
  }

  // Runs a JSON-producing query and renders it.
  template <class Call, class Render>
  int query(const std::string& path, Call call, Render render) {
    int code = kOk;
    auto d = load(path, code);
    if (!d) return code;
    char* raw = nullptr;
    sc_status status = call(d.get(), &raw);
    OwnedString result(raw);
    if (status != SC_OK && status != SC_NO_RESULT) return failure(status, path);
    const json value = json::parse(result.get());
    if (json_mode) {
      out_ << result.get() << '\n';
    } else {
      render(value);
    }
    if (status == SC_NO_RESULT) {
      err_ << "no certificate found\n";
      return kNoResult;
    }
    return kOk;
  }

  int validate(const std::string& path) {
    int code = kOk;
    auto d = load(path, code);
    if (!d) return code;
    char* raw = nullptr;
    sc_status status = sc_diagram_validate(d.get(), &raw);
    OwnedString result(raw);
    if (status != SC_OK) return failure(status, path);
    const json report = json::parse(result.get());
    if (json_mode) {
      out_ << result.get() << '\n';
    } else if (report["valid"].get<bool>()) {
      out_ << "valid\n";
    }
    if (report["valid"].get<bool>()) return kOk;
    for (const json& v : report["violations"]) {
      err_ << path;
      if (v.contains("line")) err_ << ':' << v["line"].get<int>() << ':' << v["column"].get<int>();
      err_ << ": " << v["kind"].get<std::string>() << ": " << v["message"].get<std::string>() << '\n';
    }
    return kInvalid;
  }

  int semigroup(const std::vector<std::string>& gens, const std::optional<std::string>& contains, bool gaps,
                bool frobenius) {
    if (static_cast<int>(contains.has_value()) + gaps + frobenius != 1) {
      err_ << "error: semigroup needs exactly one of --contains, --gaps, --frobenius\n";
      return kUsage;
    }
    std::vector<const char*> ptrs;
    for (const auto& g : gens) ptrs.push_back(g.c_str());
    sc_semigroup* raw = nullptr;
    sc_status status = sc_semigroup_create(ptrs.data(), ptrs.size(), &raw);
    if (status != SC_OK) return failure(status, "semigroup");
    std::unique_ptr<sc_semigroup, void (*)(sc_semigroup*)> s(raw, sc_semigroup_free);

    if (contains) {
      int member = 0;
      status = sc_semigroup_contains(s.get(), contains->c_str(), &member);
      if (status != SC_OK) return failure(status, "semigroup");
      if (json_mode) {
        out_ << json{{"contains", member == 1}, {"n", *contains}}.dump() << '\n';
      } else {
        out_ << (member ? "true" : "false") << '\n';
      }
      return kOk;
    }
    char* value = nullptr;
    status = gaps ? sc_semigroup_genus(s.get(), &value) : sc_semigroup_frobenius(s.get(), &value);
    OwnedString owned(value);
    if (status != SC_OK) return failure(status, "semigroup");
    if (json_mode) {
      json v = json::parse(owned.get());
      out_ << json{{gaps ? "gaps" : "frobenius", v}}.dump() << '\n';
    } else {
      out_ << owned.get() << '\n';
    }
    return kOk;
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates of non-principality for coloured links on splice diagrams", "splicecert"};
  app.require_subcommand(1);
  app.fallthrough();
  Driver driver(in, out, err);
  app.add_flag("--json", driver.json_mode, "Machine-readable output");

  std::string file, a, b, knot, target;
  std::vector<std::string> others;
  std::vector<std::string> gens;
  std::optional<std::string> contains;
  bool gaps = false, frobenius = false;

  auto* validate = app.add_subcommand("validate", "Check diagram validity");
  validate->add_option("FILE", file)->required();
  auto* invariants = app.add_subcommand("invariants", "Linking table and Milnor numbers");
  invariants->add_option("FILE", file)->required();
  auto* link = app.add_subcommand("linking", "Linking number of two end-knots");
  link->add_option("FILE", file)->required();
  link->add_option("A", a)->required();
  link->add_option("B", b)->required();
  auto* mil = app.add_subcommand("milnor", "Milnor number of an end-knot");
  mil->add_option("FILE", file)->required();
  mil->add_option("K", knot)->required();
  auto* check = app.add_subcommand("check", "Semigroup-condition certificate");
  check->add_option("FILE", file)->required();
  auto* m1 = app.add_subcommand("method1", "Delta-invariant certificate");
  m1->add_option("FILE", file)->required();
  m1->add_option("--target", target)->required();
  auto* others_opt = m1->add_option("--others", others)->delimiter(',');
  auto* wit = app.add_subcommand("witness", "Cabled witness link with certificate");
  wit->add_option("FILE", file)->required();
  auto* weak = app.add_subcommand("weak-witness", "Two parallel cables with certificate");
  weak->add_option("FILE", file)->required();
  auto* sg = app.add_subcommand("semigroup", "Numerical semigroup queries");
  sg->add_option("--gens", gens)->delimiter(',')->required();
  sg->add_option("--contains", contains);
  sg->add_flag("--gaps", gaps);
  sg->add_flag("--frobenius", frobenius);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto print_cert = [&](const json& c) { print_certificate(out, c); };
  if (*validate) return driver.validate(file);
  if (*invariants) {
    return driver.query(file, sc_diagram_invariants, [&](const json& v) {
      for (const json& e : v["linking"]) {
        out << "lk(" << e["a"].get<std::string>() << "," << e["b"].get<std::string>() << ") = " << num(e["value"])
            << '\n';
      }
      for (const auto& [k, mu] : v["milnor"].items()) out << "mu(" << k << ") = " << num(mu) << '\n';
    });
  }
  if (*link) {
    return driver.query(
        file, [&](const sc_diagram* d, char** o) { return sc_diagram_linking(d, a.c_str(), b.c_str(), o); },
        [&](const json& v) { out << num(v["value"]) << '\n'; });
  }
  if (*mil) {
    return driver.query(
        file, [&](const sc_diagram* d, char** o) { return sc_diagram_milnor(d, knot.c_str(), o); },
        [&](const json& v) { out << num(v["milnor"]) << '\n'; });
  }
  if (*check) {
    return driver.query(file, sc_diagram_check, [&](const json& v) {
      if (!v.is_null()) print_cert(v);
    });
  }
  if (*m1) {
    std::vector<const char*> ptrs;
    for (const auto& o : others) ptrs.push_back(o.c_str());
    const bool given = others_opt->count() > 0;
    return driver.query(
        file,
        [&](const sc_diagram* d, char** o) {
          return sc_diagram_method1(d, target.c_str(), given ? ptrs.data() : nullptr, ptrs.size(), o);
        },
        [&](const json& v) {
          if (!v.is_null()) print_cert(v);
        });
  }
  if (*wit) return driver.query(file, sc_diagram_witness, [&](const json& v) { print_witness(out, v); });
  if (*weak) return driver.query(file, sc_diagram_weak_witness, [&](const json& v) { print_witness(out, v); });
  if (*sg) return driver.semigroup(gens, contains, gaps, frobenius);
  return kUsage;
}

}  // namespace splicecli
