#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fastdice/batch.hpp"
#include "fastdice/bench.hpp"
#include "fastdice/bernoulli.hpp"
#include "fastdice/bit_source.hpp"
#include "fastdice/cost.hpp"
#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"
#include "fastdice/permutation.hpp"

namespace py = pybind11;
using namespace fastdice;

namespace {

py::object to_fraction(const BigRational& q) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(numerator(q).str())), py::int_(py::str(denominator(q).str())));
}

template <class E>
void bind_error(py::module_& m, const char* name, py::handle base) {
  py::register_exception<E>(m, name, base);
}

void add_sources(py::module_& m) {
  py::class_<RandomBitSource>(m, "RandomBitSource")
      .def("next_bit", &RandomBitSource::next_bit)
      .def_property_readonly("bits_consumed", &RandomBitSource::bits_consumed)
      .def("reset_counter", &RandomBitSource::reset_counter);

  py::class_<BufferedWordSource, RandomBitSource>(m, "BitSource",
                                                  "Fair bits from buffered MT19937 words, MSB first.")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def_property_readonly("words_fetched", &BufferedWordSource::words_fetched);

  py::class_<ScriptedBitSource, RandomBitSource>(m, "ScriptedBitSource")
      .def(py::init<std::vector<std::uint8_t>>(), py::arg("bits"))
      .def_property_readonly("remaining", &ScriptedBitSource::remaining);
}

void add_sampling(py::module_& m) {
  m.attr("MAX_RANGE") = kMaxRange;

  m.def("fdr_uniform", [](RandomBitSource& s, std::uint64_t n) {
    const auto out = fdr_uniform(s, n);
    return py::make_tuple(out.value, out.bits_used);
  }, py::arg("source"), py::arg("n"), "Uniform integer in [0, n); returns (value, bits_used).");

  m.def("fdr_uniform_range", &fdr_uniform_range, py::arg("source"), py::arg("lo"), py::arg("hi"));

  m.def("uniform_many", [](RandomBitSource& s, std::uint64_t n, std::size_t count) {
    std::vector<std::uint64_t> out(count);
    for (auto& x : out) x = fdr_uniform(s, n).value;
    return out;
  }, py::arg("source"), py::arg("n"), py::arg("count"));

  m.def("auto_batch_size", &auto_batch_size, py::arg("n"));
  m.def("batch_uniform", [](RandomBitSource& s, std::uint64_t n, unsigned j) {
    return batch_uniform(s, plan_batch(n, j));
  }, py::arg("source"), py::arg("n"), py::arg("j"));

  m.def("bernoulli", [](RandomBitSource& s, std::uint64_t num, std::uint64_t den) {
    return bernoulli_rational(s, {num, den});
  }, py::arg("source"), py::arg("num"), py::arg("den"));
  m.def("binary_expansion", [](std::uint64_t num, std::uint64_t den, std::size_t count) {
    return binary_expansion({num, den}, count);
  }, py::arg("num"), py::arg("den"), py::arg("count"));
}

void add_permutations(py::module_& m) {
  auto values = [](const Permutation& p) { return p.values; };
  m.def("factorial", &factorial, py::arg("n"));
  m.def("fisher_yates", [=](RandomBitSource& s, std::size_t n) { return values(fisher_yates(s, n)); },
        py::arg("source"), py::arg("n"));
  m.def("random_permutation", [=](RandomBitSource& s, std::size_t n) {
    return values(random_permutation_unranked(s, n));
  }, py::arg("source"), py::arg("n"), "Uniform permutation from one rank draw (n <= 20).");
  m.def("random_permutation_selection", [=](RandomBitSource& s, std::size_t n) {
    return values(random_permutation_selection(s, n));
  }, py::arg("source"), py::arg("n"));
  m.def("rank_to_lehmer", [](std::uint64_t u, std::size_t n) { return factorial_decompose({u, n}).digits; },
        py::arg("rank"), py::arg("n"));
  m.def("lehmer_to_rank", [](std::vector<std::uint32_t> digits) {
    return factorial_compose({std::move(digits)}).value;
  }, py::arg("digits"));
  m.def("lehmer_to_permutation", [=](std::vector<std::uint32_t> digits, const std::string& method) {
    const LehmerCode code{std::move(digits)};
    if (method == "selection") return values(lehmer_to_permutation_selection(code));
    if (method == "fy") return values(lehmer_to_permutation_fy(code));
    throw InvalidArgument("method must be 'selection' or 'fy'");
  }, py::arg("digits"), py::arg("method") = "selection");
  m.def("inversion_count", [](std::vector<std::uint32_t> v) { return inversion_count({std::move(v)}); },
        py::arg("values"));
}

void add_cost(py::module_& m) {
  m.def("exact_cost", [](std::uint64_t n) { return to_fraction(exact_cost(n).rational()); }, py::arg("n"),
        "Expected flips of one draw in [0, n) as a Fraction.");
  m.def("exact_cost_float", [](std::uint64_t n) { return static_cast<double>(exact_cost(n).value()); },
        py::arg("n"));
  m.def("toll", &toll, py::arg("n"));
  m.def("batch_cost", &batch_cost, py::arg("n"), py::arg("j"));
  m.def("nu", [](std::uint64_t num, std::uint64_t den) { return nu({num, den}); }, py::arg("num"),
        py::arg("den"));
  m.def("asymptotic_constant", &asymptotic_constant);
  m.def("fluctuation", &fluctuation, py::arg("t"), py::arg("k_terms") = 12);
  m.def("asymptotic_cost", [](std::uint64_t n, unsigned k) { return asymptotic_cost(n, {k}); }, py::arg("n"),
        py::arg("k_terms") = 12);
  m.def("zeta", [](std::complex<double> s) { return zeta_complex(s); }, py::arg("s"));

  m.def("bench", [](std::uint64_t n, std::uint64_t count, unsigned batch, std::uint64_t seed) {
    BufferedWordSource source(seed);
    const auto r = run_bench(source, n, count, batch);
    py::dict d;
    d["n"] = r.n;
    d["batch"] = r.batch;
    d["count"] = r.count;
    d["total_bits"] = r.total_bits;
    d["mean_bits"] = r.mean_bits_per_variate;
    d["theory"] = r.theoretical;
    d["abs_deviation"] = r.abs_deviation;
    d["chi_square"] = r.uniformity.statistic;
    d["dof"] = r.uniformity.degrees_of_freedom;
    d["p_value"] = r.uniformity.p_value;
    return d;
  }, py::arg("n"), py::arg("count"), py::arg("batch") = 1, py::arg("seed") = 0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fast Dice Roller sampling and bit-cost analysis";

  // Translators run most-recent first, so the base goes in before its subclasses.
  const auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  bind_error<InvalidArgument>(m, "InvalidArgument", base);
  bind_error<ScriptExhausted>(m, "ScriptExhausted", base);
  bind_error<RangeTooLarge>(m, "RangeTooLarge", base);
  bind_error<EmptyRange>(m, "EmptyRange", base);
  bind_error<Overflow>(m, "Overflow", base);
  bind_error<ImproperFraction>(m, "ImproperFraction", base);
  bind_error<RankOutOfRange>(m, "RankOutOfRange", base);
  bind_error<DigitOutOfRange>(m, "DigitOutOfRange", base);
  bind_error<FactorialOverflow>(m, "FactorialOverflow", base);
  bind_error<PoleAtOne>(m, "PoleAtOne", base);

  add_sources(m);
  add_sampling(m);
  add_permutations(m);
  add_cost(m);
}
