#include "gpi/dsl.hpp"
#include "gpi/error.hpp"
#include "gpi/serialize.hpp"
#include "gpi/z3reduce.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using Json = nlohmann::json;
namespace gj = gpi::json;

namespace {

std::string check(const std::string& text) {
  const auto doc = gpi::dsl::parse_document(text);
  if (!doc.poly) throw gpi::Error(gpi::ErrorKind::Parse, "input has no 'poly:' line");
  const auto v = gpi::is_graded_identity(doc.context, *doc.poly);
  Json out = {{"identity", v.identity}};
  if (v.witness) out["witness"] = gj::to_json(*v.witness);
  return out.dump();
}

std::string evaluate(const std::string& text, const std::optional<std::string>& word) {
  const auto doc = gpi::dsl::parse_document(text);
  if (word) return gj::to_json(gpi::eval_word_closed(doc.context, gpi::dsl::parse_word(*word, doc.context))).dump();
  if (!doc.poly) throw gpi::Error(gpi::ErrorKind::Parse, "input has no 'poly:' line");
  return gj::to_json(gpi::eval_poly(doc.context, *doc.poly)).dump();
}

std::optional<std::string> congruent(const std::string& text, const std::optional<std::string>& m,
                                     const std::optional<std::string>& n) {
  const auto doc = gpi::dsl::parse_document(text);
  const auto pick = [&](const std::optional<std::string>& expr, const std::optional<gpi::Word>& fallback) {
    if (expr) return gpi::dsl::parse_word(*expr, doc.context);
    if (!fallback) throw gpi::Error(gpi::ErrorKind::Parse, "missing word");
    return *fallback;
  };
  const gpi::Word mw = pick(m, doc.m);
  const gpi::Word nw = pick(n, doc.n);
  if (gpi::multidegree(mw) != gpi::multidegree(nw)) return std::nullopt;
  const auto pos = gpi::shared_entry(doc.context, mw, nw);
  if (!pos) return std::nullopt;
  return gj::to_json(gj::make_certificate(doc.context, gpi::congruence_chain(doc.context, mw, nw, *pos))).dump();
}

std::optional<std::string> express(const std::string& text) {
  const auto doc = gpi::dsl::parse_document(text);
  if (!doc.poly) throw gpi::Error(gpi::ErrorKind::Parse, "input has no 'poly:' line");
  try {
    return gj::to_json(gj::make_certificate(doc.context, gpi::express_in_J(doc.context, *doc.poly))).dump();
  } catch (const gpi::NoExpressionError&) {
    return std::nullopt;
  }
}

std::string z3reduce(const std::string& text, std::optional<gpi::VarId> fresh_start) {
  const auto doc = gpi::dsl::parse_document(text);
  if (!doc.generator) throw gpi::Error(gpi::ErrorKind::Parse, "input has no 'generator:' line");
  return gj::to_json(gj::make_certificate(gpi::z3::reduce(doc.context, *doc.generator, fresh_start))).dump();
}

std::size_t enum_reduced(std::size_t max_len, std::size_t max_vars) {
  return gpi::z3::enumerate_reduced(gpi::GradingTuple(gpi::cyclic_group(3)), max_len, max_vars).size();
}

std::pair<bool, std::string> verify(const std::string& cert) {
  Json j;
  try {
    j = Json::parse(cert);
  } catch (const Json::parse_error& e) {
    throw gpi::Error(gpi::ErrorKind::Parse, e.what());
  }
  const auto r = gj::verify(gj::certificate_from_json(j));
  return {r.ok, r.diagnostic};
}

std::string canonical(const std::string& text) {
  return gpi::dsl::format_document(gpi::dsl::parse_document(text));
}

}  // namespace

PYBIND11_MODULE(_gpi, m) {
  m.doc() = "Graded polynomial identities of (M_n(K), gl_n(K)): native core";

  static py::exception<gpi::Error> error(m, "GpiError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gpi::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("check", &check, py::arg("text"));
  m.def("evaluate", &evaluate, py::arg("text"), py::arg("word") = std::nullopt);
  m.def("congruent", &congruent, py::arg("text"), py::arg("m") = std::nullopt, py::arg("n") = std::nullopt);
  m.def("express", &express, py::arg("text"));
  m.def("z3reduce", &z3reduce, py::arg("text"), py::arg("fresh_start") = std::nullopt);
  m.def("enum_reduced", &enum_reduced, py::arg("max_len") = 3, py::arg("max_vars") = 0);
  m.def("verify", &verify, py::arg("certificate"));
  m.def("canonical", &canonical, py::arg("text"));
}
