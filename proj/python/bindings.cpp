#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gauss_landau/cli.hpp"
#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"
#include "gauss_landau/gcd_lcm.hpp"
#include "gauss_landau/landau.hpp"
#include "gauss_landau/permutation.hpp"
#include "gauss_landau/verify.hpp"

namespace py = pybind11;
namespace gl = gauss_landau;

namespace {

// Arbitrary-precision values cross the boundary as decimal text.
py::int_ to_py(const gl::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

gl::BigInt from_py(const py::int_& v) { return gl::parse_decimal(py::str(v)); }

std::vector<gl::BigInt> from_py(const std::vector<py::int_>& values) {
  std::vector<gl::BigInt> out;
  for (const auto& v : values) out.push_back(from_py(v));
  return out;
}

template <typename Span>
std::vector<typename Span::value_type> to_vec(Span s) {
  return {s.begin(), s.end()};
}

py::dict landau_dict(const gl::LandauRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["value"] = to_py(r.value);
  d["witness"] = to_vec(r.witness.parts());
  d["ratio"] = r.ratio ? py::cast(*r.ratio) : py::none();
  if (r.partitions_enumerated) d["partitions"] = *r.partitions_enumerated;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "gcd/lcm via prime exponents, Landau's function and permutation orders.";
  py::register_exception<gl::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("factorize", [](const py::int_& n, std::uint64_t rho_seed) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
        const gl::Factorization f = gl::factorize(from_py(n), {rho_seed});
        for (const auto& e : f.entries()) out.emplace_back(e.prime, e.exponent);
        return out;
      },
      py::arg("n"), py::arg("rho_seed") = gl::kDefaultRhoSeed,
      "Canonical factorization of 1 <= n < 2**64 as [(prime, exponent), ...].");

  m.def("reconstruct", [](const std::vector<std::pair<std::uint64_t, std::uint32_t>>& entries) {
        std::vector<gl::PrimePower> pp;
        for (const auto& [p, e] : entries) pp.push_back({p, e});
        return to_py(gl::reconstruct(gl::Factorization::from_entries(std::move(pp))));
      },
      py::arg("entries"));

  m.def("is_prime", &gl::is_prime, py::arg("n"));
  m.def("primes_up_to", &gl::primes_up_to, py::arg("limit"));

  m.def("gcd_lcm", [](const std::vector<py::int_>& values) {
        const gl::GcdLcmResult r = gl::gcd_lcm_set(from_py(values));
        py::dict d;
        d["gcd"] = r.gcd;
        d["lcm"] = to_py(r.lcm);
        d["support"] = to_vec(r.support.primes());
        d["min_exponents"] = to_vec(r.min_exponents.exponents());
        d["max_exponents"] = to_vec(r.max_exponents.exponents());
        return d;
      },
      py::arg("values"), "gcd and lcm of nonzero integers from min/max prime exponents.");

  m.def("gcd_euclid", [](const py::int_& a, const py::int_& b) { return to_py(gl::gcd_euclid(from_py(a), from_py(b))); },
        py::arg("a"), py::arg("b"));

  m.def("reduce_ratio", [](const py::int_& a, const py::int_& b) {
        const auto r = gl::reduce_ratio(from_py(a), from_py(b));
        return std::make_pair(r.left, r.right);
      },
      py::arg("a"), py::arg("b"));

  m.def("check_product_identity", [](std::uint64_t a, std::uint64_t b) {
        const auto r = gl::check_product_identity(a, b);
        py::dict d;
        d["holds"] = r.holds;
        d["product"] = to_py(r.product);
        d["gcd"] = r.gcd;
        d["lcm"] = to_py(r.lcm);
        return d;
      },
      py::arg("a"), py::arg("b"));

  m.def("check_distributive_identity", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        const auto r = gl::check_distributive_identity(a, b, c);
        py::dict d;
        d["holds"] = r.holds;
        d["lhs"] = to_py(r.lhs);
        d["rhs"] = to_py(r.rhs);
        py::list rows;
        for (const auto& row : r.per_prime) rows.append(py::make_tuple(row.prime, row.min_of_max, row.max_of_min));
        d["per_prime"] = rows;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("partitions", [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        gl::PartitionStream stream(n);
        while (stream.next()) out.push_back(to_vec(stream.parts()));
        return out;
      },
      py::arg("n"));

  m.def("landau_bruteforce", [](std::uint32_t n) { return landau_dict(gl::landau_bruteforce(n)); }, py::arg("n"));
  m.def("landau_dp", [](std::uint32_t n) { return landau_dict(gl::landau_dp(n)); }, py::arg("n"));
  m.def("asymptotic_table", [](std::uint32_t n_max, std::uint32_t step) {
        py::list rows;
        for (const auto& r : gl::asymptotic_table(n_max, step)) rows.append(landau_dict(r));
        return rows;
      },
      py::arg("n_max"), py::arg("step") = 1);

  m.def("cycle_decompose", [](const std::vector<std::uint32_t>& perm) {
        const gl::CycleDecomposition d = gl::cycle_decompose(perm);
        return to_vec(d.cycle_lengths());
      },
      py::arg("perm"), "Cycle lengths (non-increasing) of a 1-based one-line permutation.");
  m.def("order", [](std::vector<std::uint32_t> cycle_lengths) {
        return to_py(gl::order(gl::CycleDecomposition::from_lengths(std::move(cycle_lengths))));
      },
      py::arg("cycle_lengths"));
  m.def("verify_order", [](const std::vector<std::uint32_t>& perm, const py::int_& m_) {
        return gl::verify_order(perm, from_py(m_));
      },
      py::arg("perm"), py::arg("m"));

  m.def("verify_sweep", [](const std::string& kind, std::uint64_t count, std::uint64_t seed, std::uint64_t max) {
        const auto k = gl::parse_sweep_kind(kind);
        if (!k) throw gl::DomainError("unknown sweep kind '" + kind + "'");
        const auto r = gl::verify_sweep(*k, count, seed, max);
        py::dict d;
        d["passed"] = r.passed;
        d["failed"] = r.failed;
        if (r.first_failure) d["counterexample"] = py::make_tuple(r.first_failure->inputs, r.first_failure->detail);
        return d;
      },
      py::arg("kind"), py::arg("count"), py::arg("seed"), py::arg("max"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = gl::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
