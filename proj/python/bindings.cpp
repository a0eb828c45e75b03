#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wqo/ack_term.hpp"
#include "wqo/cli.hpp"
#include "wqo/errors.hpp"
#include "wqo/exp_term.hpp"
#include "wqo/finite_qo.hpp"
#include "wqo/hl_dl.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/text.hpp"
#include "wqo/tree.hpp"

namespace py = pybind11;
using namespace wqo;

namespace {

// Python ints go through decimal text; values can exceed 64 bits.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(std::string(py::str(v))); }

Budget budget_with(std::optional<std::size_t> max_bits) {
  Budget b;
  if (max_bits) b.max_bits = *max_bits;
  return b;
}

}  // namespace

PYBIND11_MODULE(_wqolab, m) {
  m.doc() = "Well-quasi-order laboratory";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one wqolab command line; returns (exit_code, stdout, stderr).");

  m.def("seq_embed", [](const std::string& qo_text, const std::vector<std::string>& s,
                        const std::vector<std::string>& t) {
    const auto qo = text::parse_qo(qo_text);
    FiniteSeq xs, ys;
    for (const auto& n : s) xs.push_back(qo.labels.id(n));
    for (const auto& n : t) ys.push_back(qo.labels.id(n));
    return seq_embed(qo.order, xs, ys);
  }, py::arg("qo"), py::arg("s"), py::arg("t"));

  m.def("tree_embeds", [](const std::string& qo_text, const std::string& t, const std::string& s) {
    const auto qo = text::parse_qo(qo_text);
    return embeds(qo.order, text::parse_tree(t, qo.labels), text::parse_tree(s, qo.labels));
  }, py::arg("qo"), py::arg("t"), py::arg("s"));

  m.def("weight", [](const std::string& w) { return hl::weight(hl::BinaryString01::parse(w)); });
  m.def("to_tuple", [](const std::string& w) {
    return hl::to_tuple(hl::BinaryString01::parse(w)).entries();
  });
  m.def("from_tuple", [](const std::vector<std::uint64_t>& t) {
    return hl::from_tuple(hl::PosTuple(t)).str();
  });

  m.def("ord_normalize", [](const std::string& a) { return text::parse_ordinal(a).str(); });
  m.def("ord_cmp", [](const std::string& a, const std::string& b) {
    const auto c = compare(text::parse_ordinal(a), text::parse_ordinal(b));
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  });
  m.def("natural_sum", [](const std::string& a, const std::string& b) {
    return natural_sum(text::parse_ordinal(a), text::parse_ordinal(b)).str();
  });
  m.def("fundamental_seq", [](const std::string& a, const py::int_& i) {
    return fundamental_seq(text::parse_ordinal(a), from_py(i)).str();
  });
  m.def("slow_growing", [](const std::string& a, const py::int_& n,
                           std::optional<std::size_t> max_bits) {
    return to_py(slow_growing(text::parse_ordinal(a), from_py(n), budget_with(max_bits)));
  }, py::arg("alpha"), py::arg("n"), py::arg("max_bits") = py::none());

  m.def("eval_exp", [](const std::string& e, const py::int_& k) {
    return to_py(eval_at(text::parse_exp(e), from_py(k)));
  });
  m.def("exp_to_ordinal", [](const std::string& e) { return to_ordinal(text::parse_exp(e)).str(); });

  m.def("swo_search", [](std::uint64_t K, std::uint64_t max_M) {
    return swo_search_min_M(K, max_M).min_M;
  }, py::arg("K"), py::arg("max_M"));

  m.def("w_search", [](std::uint64_t K, std::uint64_t max_M, std::uint64_t sigma) {
    return w_search_min_M(sigma_bound(sigma), K, max_M, WSearchOptions{}).min_M;
  }, py::arg("K"), py::arg("max_M"), py::arg("sigma") = 1);

  m.def("leq_k", [](const std::string& s, const std::string& t, bool embedding) {
    return leq_k(embedding ? RelationMode::Embedding : RelationMode::Literal, text::parse_ack(s),
                 text::parse_ack(t));
  }, py::arg("s"), py::arg("t"), py::arg("embedding") = true);
}
