#pragma once

// Command-line front end. Every command is a thin adapter over the library:
// parse flags, call one module function, serialize the result.
//
// Exit codes: 0 success, 2 usage error, 1 computation or input error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tknot/json_io.hpp"

namespace tknot::cli {

using json_io::json;

inline constexpr std::string_view kCliModule = "cli";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kMaxCosetsEnv = "TKNOT_MAX_COSETS";

/// Default coset limit: $TKNOT_MAX_COSETS when set, else 10^6.
inline std::int64_t default_max_cosets() {
  const char* env = std::getenv(kMaxCosetsEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxCosets;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string_view(env).size() || v < 1) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(kCliModule, std::string(kMaxCosetsEnv) + " must be a positive integer, got '" + env + "'");
  }
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// Append-only JSONL results ledger.
class Ledger {
 public:
  explicit Ledger(std::string path) : path_(std::move(path)) {}

  void append(const std::string& command, const json& params, const json& result) {
    const json rec = {{"timestamp", utc_timestamp()},
                      {"command", command},
                      {"params", params},
                      {"result", result},
                      {"version", kVersion}};
    std::lock_guard lock(mu_);
    std::ofstream f(path_, std::ios::app);
    if (!f) throw Error(kCliModule, "cannot open ledger '" + path_ + "'");
    f << rec.dump() << '\n';
  }

 private:
  std::string path_;
  std::mutex mu_;
};

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(kCliModule, "cannot read '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(kCliModule, "malformed JSON input in '" + path + "': " + e.what());
  }
}

inline std::string render_text(const std::string& command, const json& payload) {
  std::ostringstream os;
  if (command == "bound") {
    os << payload.get<std::int64_t>() << '\n';
  } else if (command == "wirtinger") {
    const json& p = payload.contains("presentation") ? payload.at("presentation") : payload;
    os << "generators:";
    for (const auto& g : p.at("generators")) os << ' ' << g.get<std::string>();
    os << '\n';
    for (const auto& r : p.at("relators_text")) os << "  " << r.get<std::string>() << '\n';
    if (payload.contains("peripheral"))
      for (const auto& ps : payload.at("peripheral"))
        os << ps.at("component").get<std::string>() << ": meridian " << ps.at("meridian_text").get<std::string>()
           << ", longitude " << ps.at("longitude_text").get<std::string>() << '\n';
  } else if (command == "generate") {
    os << "relator: " << payload.at("relator_text").get<std::string>() << '\n'
       << "longitude (paper): " << payload.at("longitude_paper_text").get<std::string>() << '\n'
       << "longitude (corrected): " << payload.at("longitude_corrected_text").get<std::string>() << '\n'
       << "s_paper = " << payload.at("s_paper") << ", s_corrected = " << payload.at("s_corrected")
       << ", t = " << payload.at("t") << '\n';
  } else if (command == "verify-proof") {
    os << "u = " << payload.at("params").at("u") << ", v = " << payload.at("params").at("v") << '\n';
    for (const auto& c : payload.at("checks")) {
      os << "  [" << (c.at("passed").get<bool>() ? "pass" : "FAIL") << "] " << c.at("index") << ". "
         << c.at("name").get<std::string>();
      if (!c.at("measured").is_null()) os << " (measured " << c.at("measured") << ')';
      if (c.at("informational").get<bool>()) os << " [informational]";
      os << '\n';
    }
  } else if (command == "check-slope") {
    const auto& v = payload.at("verdict");
    os << v.at("kind").get<std::string>();
    if (v.contains("reason")) os << " (" << v.at("reason").get<std::string>() << ')';
    os << "; bound paper " << payload.at("bound_paper") << ", corrected " << payload.at("bound_corrected") << '\n';
  } else if (command == "h1") {
    os << "rank " << payload.at("rank") << ", torsion " << payload.at("torsion").dump() << '\n';
  } else if (command == "alexander") {
    os << payload.at("polynomial").get<std::string>() << '\n';
  } else if (command == "enumerate") {
    const auto& o = payload.at("outcome");
    if (o.at("kind") == "Finished")
      os << "Finished, order " << o.at("order");
    else
      os << "Exceeded, limit " << o.at("limit");
    os << " (" << payload.at("cosets_defined") << " cosets defined, trace " << payload.at("trace_hash").get<std::string>()
       << ")\n";
  } else {
    os << payload.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for twisted torus knot groups and Dehn surgery slopes", "tknot"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string format = "json";
  std::string ledger_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--ledger", ledger_path, "Append a JSONL record of the run to this file");

  std::int64_t u = 0, v = 0, p = 0, q = 1, max_cosets = 0;
  std::int64_t umin = -3, umax = 3, vmin = 0, vmax = 4;
  std::string mode = "closed", longitude = "paper", diagram_file, presentation_file, builtin;
  bool sweep = false, peripheral = false;
  std::optional<std::int64_t> surgery_p, surgery_q;

  auto add_uv = [&](CLI::App* sc, bool required) {
    auto* ou = sc->add_option("--u", u, "Full twists on two strands");
    auto* ov = sc->add_option("--v", v, "Torus knot type (3, 3v+2)");
    if (required) {
      ou->required();
      ov->required();
    }
    return std::pair{ou, ov};
  };
  auto add_longitude = [&](CLI::App* sc) {
    sc->add_option("--longitude", longitude, "Which longitude to use")->check(CLI::IsMember({"paper", "corrected"}));
  };

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation of a diagram");
  auto* wdiag = wirt->add_option("--diagram", diagram_file, "Diagram JSON file");
  wirt->add_option("--builtin", builtin, "Built-in diagram")->check(CLI::IsMember({"L", "trefoil"}))->excludes(wdiag);
  wirt->add_flag("--peripheral", peripheral, "Also emit each component's meridian and longitude");

  auto* gen = app.add_subcommand("generate", "Knot group of a twisted torus knot");
  add_uv(gen, true);
  gen->add_option("--mode", mode, "closed form or derivation from the diagram")
      ->check(CLI::IsMember({"closed", "derive"}));

  auto* vp = app.add_subcommand("verify-proof", "Replay the identities behind the closed form");
  auto [vpu, vpv] = add_uv(vp, false);
  auto* vsweep = vp->add_flag("--sweep", sweep, "Emit one report per line for a (u, v) range");
  vp->add_option("--umin", umin)->needs(vsweep);
  vp->add_option("--umax", umax)->needs(vsweep);
  vp->add_option("--vmin", vmin)->needs(vsweep);
  vp->add_option("--vmax", vmax)->needs(vsweep);
  vpu->excludes(vsweep);
  vpv->excludes(vsweep);

  auto* cs = app.add_subcommand("check-slope", "Criterion verdict for a surgery slope");
  add_uv(cs, true);
  cs->add_option("--p", p)->required();
  cs->add_option("--q", q)->required();
  add_longitude(cs);

  auto* bd = app.add_subcommand("bound", "Smallest integer slope the criterion certifies");
  add_uv(bd, true);
  add_longitude(bd);

  auto* h1 = app.add_subcommand("h1", "First homology of a knot group or a surgery on it");
  add_uv(h1, false);
  auto* h1pres = h1->add_option("--presentation", presentation_file, "Presentation JSON file");
  auto* h1p = h1->add_option("--p", surgery_p, "Surgery slope numerator")->excludes(h1pres);
  h1->add_option("--q", surgery_q, "Surgery slope denominator")->needs(h1p);
  add_longitude(h1);

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_uv(alex, false);
  auto* apres = alex->add_option("--presentation", presentation_file, "Presentation JSON file");
  alex->add_option("--diagram", diagram_file, "Knot diagram JSON file")->excludes(apres);

  auto* en = app.add_subcommand("enumerate", "Todd-Coxeter enumeration of a surgered knot group");
  add_uv(en, true);
  en->add_option("--p", p)->required();
  en->add_option("--q", q)->required();
  add_longitude(en);
  en->add_option("--max-cosets", max_cosets, "Coset limit (default $TKNOT_MAX_COSETS or 1000000)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"tknot"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const CLI::App* sc = app.get_subcommands().front();
  const std::string command = sc->get_name();
  auto set = [&](const char* name) { return sc->count(std::string("--") + name) > 0; };
  auto usage = [&](const std::string& msg) {
    err << "usage error: " << command << ": " << msg << '\n';
    return 2;
  };

  std::optional<Ledger> ledger;
  if (!ledger_path.empty()) ledger.emplace(ledger_path);
  json params = json::object();
  auto emit = [&](const json& payload) {
    if (format == "text")
      out << detail::render_text(command, payload);
    else
      out << payload.dump() << '\n';
    if (ledger) ledger->append(command, params, payload);
  };

  try {
    const TwistParams tp{u, v};
    const LongitudeChoice choice = parse_longitude_choice(longitude);
    auto model_for_cli = [&] { return closed_form(tp); };

    if (command == "wirtinger") {
      if (diagram_file.empty() && builtin.empty()) return usage("give --diagram FILE or --builtin L|trefoil");
      params = {{"diagram", diagram_file}, {"builtin", builtin}, {"peripheral", peripheral}};
      const LinkDiagram d = !builtin.empty() ? (builtin == "L" ? builtin_link_L() : trefoil_diagram())
                                             : json_io::diagram_from_json(detail::read_json_file(diagram_file));
      const json pres = json_io::to_json(wirtinger_presentation(d));
      if (!peripheral) {
        emit(pres);
      } else {
        json ps = json::array();
        for (const auto& c : d.components()) ps.push_back(json_io::to_json(peripheral_system(d, c.id)));
        emit({{"presentation", pres}, {"peripheral", ps}});
      }
    } else if (command == "generate") {
      params = {{"u", u}, {"v", v}, {"mode", mode}};
      emit(json_io::to_json(mode == "closed" ? closed_form(tp) : derive_from_diagram(tp).model));
    } else if (command == "verify-proof") {
      if (!sweep) {
        if (!set("u") || !set("v")) return usage("give --u and --v, or --sweep");
        params = {{"u", u}, {"v", v}};
        emit(json_io::to_json(verify_proof(tp)));
      } else {
        if (umin > umax || vmin > vmax || vmin < 0) return usage("empty or invalid sweep range");
        params = {{"umin", umin}, {"umax", umax}, {"vmin", vmin}, {"vmax", vmax}};
        std::vector<std::future<json>> jobs;
        for (std::int64_t uu = umin; uu <= umax; ++uu)
          for (std::int64_t vv = vmin; vv <= vmax; ++vv)
            jobs.push_back(std::async(std::launch::async, [uu, vv] {
              return json_io::to_json(verify_proof(TwistParams{uu, vv}));
            }));
        for (auto& j : jobs) {
          const json rep = j.get();
          if (format == "text")
            out << detail::render_text(command, rep);
          else
            out << rep.dump() << '\n';
          if (ledger) ledger->append(command, rep.at("params"), rep);
        }
      }
    } else if (command == "check-slope") {
      params = {{"u", u}, {"v", v}, {"p", p}, {"q", q}, {"longitude", longitude}};
      emit(json_io::to_json(check_slope(tp, Slope(p, q), choice)));
    } else if (command == "bound") {
      params = {{"u", u}, {"v", v}, {"longitude", longitude}};
      emit(json(minimal_integer_bound(tp, choice)));
    } else if (command == "h1") {
      if (!presentation_file.empty()) {
        params = {{"presentation", presentation_file}};
        emit(json_io::to_json(homology(json_io::presentation_from_json(detail::read_json_file(presentation_file)))));
      } else {
        if (!set("u") || !set("v")) return usage("give --u and --v, or --presentation FILE");
        params = {{"u", u}, {"v", v}};
        const auto model = model_for_cli();
        if (!surgery_p) {
          emit(json_io::to_json(homology(model.presentation)));
        } else {
          const Slope s(*surgery_p, surgery_q.value_or(1));
          params.update({{"p", s.p()}, {"q", s.q()}, {"longitude", longitude}});
          emit(json_io::to_json(homology(surgered_presentation(model, s, choice))));
        }
      }
    } else if (command == "alexander") {
      Presentation pres;
      if (!presentation_file.empty()) {
        params = {{"presentation", presentation_file}};
        pres = json_io::presentation_from_json(detail::read_json_file(presentation_file));
      } else if (!diagram_file.empty()) {
        params = {{"diagram", diagram_file}};
        pres = knot_presentation(json_io::diagram_from_json(detail::read_json_file(diagram_file)));
      } else {
        if (!set("u") || !set("v")) return usage("give --u and --v, --presentation FILE or --diagram FILE");
        params = {{"u", u}, {"v", v}};
        pres = model_for_cli().presentation;
      }
      emit(json_io::to_json(alexander_polynomial(pres)));
    } else if (command == "enumerate") {
      const std::int64_t limit = max_cosets > 0 ? max_cosets : default_max_cosets();
      params = {{"u", u}, {"v", v}, {"p", p}, {"q", q}, {"longitude", longitude}, {"max_cosets", limit}};
      emit(json_io::to_json(todd_coxeter(surgered_presentation(model_for_cli(), Slope(p, q), choice), limit)));
    } else {
      return usage("unknown command");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: cli: malformed JSON input: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tknot::cli
