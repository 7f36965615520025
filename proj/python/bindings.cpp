#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brickwords/config.hpp"
#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"
#include "brickwords/json_io.hpp"
#include "brickwords/pipeline.hpp"
#include "brickwords/spec_parser.hpp"

namespace py = pybind11;
namespace bw = brickwords;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const bw::Json& j) { return j.dump(); }

bw::Morphism powered(const bw::Morphism& m, unsigned k) { return k == 1 ? m : bw::power(m, k); }

bw::SimultaneousCoding code(const bw::RunConfig& cfg) {
  return bw::simultaneous_coding(powered(cfg.phi0, cfg.power), powered(cfg.phi1, cfg.power), cfg.seed0, cfg.seed1,
                                 cfg.coding_options());
}

bw::InferenceResult infer(const bw::RunConfig& cfg, const bw::SimultaneousCoding& coding) {
  bw::InferenceCaps caps = cfg.inference;
  caps.horizon = std::min(caps.horizon, coding.index_word.size());
  return bw::infer_fixing_substitution(coding, caps);
}

std::vector<std::string> format_all(const std::set<bw::Word>& words, const bw::Alphabet& a) {
  std::vector<std::string> out;
  for (const bw::Word& w : words) out.push_back(a.format(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simultaneous brick codings of substitution fixed points";

  static py::exception<bw::Error> error(m, "BrickwordsError");
  static py::exception<bw::ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<bw::OffsetBoundExceeded> bound_error(m, "OffsetBoundExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bw::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const bw::OffsetBoundExceeded& e) {
      py::set_error(bound_error, e.what());
    } catch (const bw::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("SCHEMA_VERSION") = bw::kSchemaVersion;

  m.def(
      "fixed_point_prefix",
      [](const std::string& spec, const std::string& seed, std::size_t n) {
        const bw::Morphism phi = bw::parse_morphism(spec);
        return phi.source().format(bw::fixed_point_prefix(phi, phi.source().at(seed), n));
      },
      py::arg("spec"), py::arg("seed"), py::arg("n"), "First n letters of the fixed point from `seed`.");

  m.def(
      "apply_morphism",
      [](const std::string& spec, const std::string& word) {
        const bw::Morphism phi = bw::parse_morphism(spec);
        return phi.target().format(phi.apply(phi.source().parse(word)));
      },
      py::arg("spec"), py::arg("word"));

  m.def(
      "incidence_matrix",
      [](const std::string& spec) { return bw::incidence_matrix(bw::parse_morphism(spec)).rows(); },
      py::arg("spec"));

  m.def(
      "normalize_config", [](const std::string& text) { return bw::format_run_config(bw::parse_run_config(text)); },
      py::arg("text"), "Parses a run config and prints it in canonical form.");

  m.def(
      "balance",
      [](const std::string& text) {
        const bw::RunConfig cfg = bw::parse_run_config(text);
        bw::Json j;
        j["initial_balanced_pair"] = bw::initial_pair_json(
            bw::find_initial_balanced_pair(cfg.phi0, cfg.phi1, cfg.seed0, cfg.seed1, cfg.bound, cfg.power));
        if (cfg.equal_incidence())
          j["algorithm"] = bw::algorithm_json(
              bw::balanced_pair_algorithm(cfg.phi0, cfg.phi1, cfg.seed0, cfg.seed1, cfg.power, cfg.algorithm_caps()),
              cfg.phi0.source());
        return dump(j);
      },
      py::arg("config"));

  m.def(
      "code",
      [](const std::string& text, bool with_word) { return dump(bw::coding_json(code(bw::parse_run_config(text)), with_word)); },
      py::arg("config"), py::arg("with_word") = false);

  m.def(
      "infer",
      [](const std::string& text) {
        const bw::RunConfig cfg = bw::parse_run_config(text);
        py::gil_scoped_release release;
        return dump(bw::inference_json(infer(cfg, code(cfg))));
      },
      py::arg("config"));

  m.def(
      "certify",
      [](const std::string& text, const std::string& letter, std::size_t back, std::size_t fwd, int row) {
        const bw::RunConfig cfg = bw::parse_run_config(text);
        const bw::SimultaneousCoding coding = code(cfg);
        const bw::InferenceResult r = infer(cfg, coding);
        if (!r.candidate) throw bw::PreconditionError("no substitution found: " + bw::to_string(r.status));
        const bw::CertifiedSystem sys = bw::certify_system(coding, *r.candidate);
        bw::Json j;
        j["verified"] = sys.verified();
        j["l2"] = format_all(sys.l2.factors, coding.index_alphabet);
        if (sys.maps) j["correction_maps"] = bw::correction_maps_json(*sys.maps, coding.index_alphabet, cfg.phi0.source());
        j["projection"] = bw::verdict_json(sys.projection);
        j["joins"] = bw::verdict_json(sys.joins);
        if (sys.verified()) {
          const bw::Letter x = cfg.phi0.source().at(letter);
          j["certificate"] = bw::certificate_json(bw::verify_letter_dominance(sys, x, {back, fwd}, row), cfg.phi0.source());
        }
        return dump(j);
      },
      py::arg("config"), py::arg("letter"), py::arg("back") = 1, py::arg("fwd") = 1, py::arg("row") = 1);

  m.def(
      "scan",
      [](const std::string& text, const std::string& letter, std::size_t n, int row) {
        const bw::RunConfig cfg = bw::parse_run_config(text);
        const bw::Letter x = cfg.phi0.source().at(letter);
        return dump(bw::scan_json(bw::scan_for(cfg, x, row, n), x, row, cfg.phi0.source()));
      },
      py::arg("config"), py::arg("letter"), py::arg("n"), py::arg("row") = 1);

  m.def(
      "render",
      [](const std::string& text, const std::string& word) {
        const bw::SimultaneousCoding coding = code(bw::parse_run_config(text));
        return bw::render_diagram(bw::bricks_of(coding, coding.index_alphabet.parse(word)), coding.phi0, coding.phi1);
      },
      py::arg("config"), py::arg("word"), "Diagram of pi(word); raises when two bricks do not join.");

  m.def(
      "pipeline",
      [](const std::string& text) {
        const bw::RunConfig cfg = bw::parse_run_config(text);
        py::gil_scoped_release release;
        const bw::PipelineReport r = bw::run_pipeline(cfg);
        return std::make_pair(dump(r.json), r.exit_code);
      },
      py::arg("config"), "Full run; returns (report JSON, exit code).");
}
