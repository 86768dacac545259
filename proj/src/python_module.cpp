#include "opalg/cstar.hpp"
#include "opalg/douglas.hpp"
#include "opalg/ideals.hpp"
#include "opalg/linalg.hpp"
#include "opalg/sequences.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

using namespace opalg;

PYBIND11_MODULE(_opalg, m) {
    m.doc() = "Operator factorization, left-ideal and C*-convexity toolkit";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "OpalgError");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<NotHermitian>(m, "NotHermitian", base);
    py::register_exception<NotPositive>(m, "NotPositive", base);
    py::register_exception<NotEqualGram>(m, "NotEqualGram", base);
    py::register_exception<EmptyList>(m, "EmptyList", base);
    py::register_exception<NotContraction>(m, "NotContraction", base);
    py::register_exception<NotInIntersection>(m, "NotInIntersection", base);
    py::register_exception<MajorizationFails>(m, "MajorizationFails", base);
    py::register_exception<NotPartitionOfUnity>(m, "NotPartitionOfUnity", base);
    py::register_exception<NotNormal>(m, "NotNormal", base);
    py::register_exception<BadReference>(m, "BadReference", base);
    py::register_exception<InvalidDimension>(m, "InvalidDimension", base);

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init<>())
        .def(py::init([](double rank_cutoff_rel, double psd_slack_rel, double residual_rel) {
                 return Tolerance{rank_cutoff_rel, psd_slack_rel, residual_rel};
             }),
             py::arg("rank_cutoff_rel") = 1e-12, py::arg("psd_slack_rel") = 1e-9,
             py::arg("residual_rel") = 1e-9)
        .def_readwrite("rank_cutoff_rel", &Tolerance::rank_cutoff_rel)
        .def_readwrite("psd_slack_rel", &Tolerance::psd_slack_rel)
        .def_readwrite("residual_rel", &Tolerance::residual_rel);
    const Tolerance default_tol;

    m.def("adjoint", &adjoint, py::arg("m"));
    m.def("operator_norm", &operator_norm, py::arg("m"));
    m.def(
        "numerical_rank",
        [](const ComplexMatrix& mat, const Tolerance& tol) { return numerical_rank(mat, tol); },
        py::arg("m"), py::arg("tol") = default_tol);
    m.def("pseudoinverse", &pseudoinverse, py::arg("m"), py::arg("tol") = default_tol);
    m.def("sqrt_psd", &sqrt_psd, py::arg("m"), py::arg("tol") = default_tol);
    m.def("range_projection", &range_projection, py::arg("m"), py::arg("tol") = default_tol);
    m.def("psd_order_holds", &psd_order_holds, py::arg("p"), py::arg("q"),
          py::arg("tol") = default_tol);

    py::class_<FactorizationResult>(m, "FactorizationResult")
        .def_readonly("factor", &FactorizationResult::factor)
        .def_readonly("lambda_min", &FactorizationResult::lambda_min)
        .def_readonly("residual", &FactorizationResult::residual)
        .def_readonly("is_partial_isometry", &FactorizationResult::is_partial_isometry);
    m.def("majorization_lambda", &majorization_lambda, py::arg("a"), py::arg("b"),
          py::arg("tol") = default_tol);
    m.def("douglas_factor", &douglas_factor, py::arg("a"), py::arg("b"),
          py::arg("tol") = default_tol);
    m.def("douglas_factor_isometric", &douglas_factor_isometric, py::arg("a"), py::arg("b"),
          py::arg("tol") = default_tol);
    m.def(
        "polar_decomposition",
        [](const ComplexMatrix& a, const Tolerance& tol) {
            const PolarDecomposition p = polar_decomposition(a, tol);
            return py::make_tuple(p.partial_isometry, p.positive_part);
        },
        py::arg("a"), py::arg("tol") = default_tol);

    py::class_<StarAlgebraBasis>(m, "StarAlgebraBasis")
        .def_readonly("dim", &StarAlgebraBasis::dim)
        .def_readonly("basis", &StarAlgebraBasis::basis);
    py::class_<IdealDescriptor>(m, "IdealDescriptor")
        .def_readonly("generator", &IdealDescriptor::generator)
        .def_readonly("ambient", &IdealDescriptor::ambient);
    m.def("ideal_descriptor", &ideal_descriptor, py::arg("a"), py::arg("ambient"),
          py::arg("tol") = default_tol);
    py::class_<IdealIntersectionReport>(m, "IdealIntersectionReport")
        .def_readonly("dim_r1a_cap_r2", &IdealIntersectionReport::dim_r1a_cap_r2)
        .def_readonly("dim_r1a_cap_r2a", &IdealIntersectionReport::dim_r1a_cap_r2a)
        .def_readonly("dim_common_a", &IdealIntersectionReport::dim_common_a)
        .def_readonly("equal_12", &IdealIntersectionReport::equal_12)
        .def_readonly("equal_13", &IdealIntersectionReport::equal_13)
        .def_readonly("equal_23", &IdealIntersectionReport::equal_23)
        .def("all_equal", &IdealIntersectionReport::all_equal);
    m.def("ideal_contains", &ideal_contains, py::arg("a"), py::arg("b"),
          py::arg("tol") = default_tol);
    m.def("canonical_generator", &canonical_generator, py::arg("a"), py::arg("tol") = default_tol);
    m.def("finite_generator", &finite_generator, py::arg("generators"),
          py::arg("tol") = default_tol);
    m.def("countable_generator_truncated", &countable_generator_truncated, py::arg("generators"),
          py::arg("n"), py::arg("tol") = default_tol);
    m.def("generate_star_algebra", &generate_star_algebra, py::arg("generators"), py::arg("dim"),
          py::arg("tol") = default_tol);
    m.def("verify_ideal_intersection", &verify_ideal_intersection, py::arg("r1"), py::arg("r2"),
          py::arg("a"), py::arg("tol") = default_tol);
    m.def(
        "is_zero_isolated_matrix",
        [](const ComplexMatrix& a, const Tolerance& tol) {
            const ZeroIsolation z = is_zero_isolated_matrix(a, tol);
            return py::make_tuple(z.isolated, z.gap);
        },
        py::arg("a"), py::arg("tol") = default_tol);

    py::class_<SequenceFunction>(m, "SequenceFunction")
        .def(py::init<std::vector<Complex>, std::optional<Complex>, Index, bool, double>(),
             py::arg("samples"), py::arg("limit") = std::nullopt, py::arg("tail_window") = 0,
             py::arg("assert_continuity") = false, py::arg("tail_tol") = kDefaultTailTol)
        .def_readonly("samples", &SequenceFunction::samples)
        .def_readonly("limit", &SequenceFunction::limit)
        .def_readonly("tail_window", &SequenceFunction::tail_window)
        .def_property_readonly("depth", &SequenceFunction::depth);
    py::class_<ExtensionVerdict>(m, "ExtensionVerdict")
        .def_readonly("extendable", &ExtensionVerdict::extendable)
        .def_readonly("witness_limit", &ExtensionVerdict::witness_limit)
        .def_readonly("oscillation", &ExtensionVerdict::oscillation);
    py::class_<SequenceFactorization>(m, "SequenceFactorization")
        .def_readonly("verdict", &SequenceFactorization::verdict)
        .def_readonly("factor", &SequenceFactorization::factor);
    m.def("wpdp_factor", &wpdp_factor, py::arg("f"), py::arg("tail_tol") = kDefaultTailTol);
    m.def("dfp_factor", &dfp_factor, py::arg("f"), py::arg("g"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("wpdp_to_dfp", &wpdp_to_dfp, py::arg("f"), py::arg("g"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("substonean_reduce", &substonean_reduce, py::arg("t1"), py::arg("t2"), py::arg("t3"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def(
        "is_zero_isolated_sequence",
        [](const SequenceFunction& g, double gap_tol) {
            const ZeroIsolation z = is_zero_isolated_sequence(g, gap_tol);
            return py::make_tuple(z.isolated, z.gap);
        },
        py::arg("g"), py::arg("gap_tol") = kDefaultGapTol);

    py::class_<BimoduleElement>(m, "BimoduleElement")
        .def(py::init<std::vector<ComplexMatrix>>(), py::arg("parts"))
        .def_readonly("dim", &BimoduleElement::dim)
        .def_readonly("arity", &BimoduleElement::arity)
        .def_readonly("parts", &BimoduleElement::parts);
    py::class_<CoefficientTuple>(m, "CoefficientTuple")
        .def(py::init<std::vector<ComplexMatrix>>(), py::arg("coefficients"))
        .def_readonly("dim", &CoefficientTuple::dim)
        .def_readonly("coefficients", &CoefficientTuple::coefficients);
    py::class_<OperandRef>(m, "OperandRef")
        .def_static("input", &OperandRef::input, py::arg("index"))
        .def_static("step", &OperandRef::step, py::arg("index"))
        .def_property_readonly("is_input",
                               [](const OperandRef& r) { return r.kind == OperandRef::Kind::Input; })
        .def_readonly("index", &OperandRef::index);
    py::class_<SegmentStep>(m, "SegmentStep")
        .def_readonly("left", &SegmentStep::left)
        .def_readonly("right", &SegmentStep::right)
        .def_readonly("t1", &SegmentStep::t1)
        .def_readonly("t2", &SegmentStep::t2);
    py::class_<SegmentProgram>(m, "SegmentProgram")
        .def_readonly("steps", &SegmentProgram::steps)
        .def_readonly("output", &SegmentProgram::output);
    py::class_<UnitaryPolar>(m, "UnitaryPolar")
        .def_readonly("unitary", &UnitaryPolar::unitary)
        .def_readonly("positive", &UnitaryPolar::positive);
    py::class_<DiagonalBlocksReport>(m, "DiagonalBlocksReport")
        .def_readonly("generators", &DiagonalBlocksReport::generators)
        .def_readonly("coefficients", &DiagonalBlocksReport::coefficients)
        .def_readonly("max_isometry_residual", &DiagonalBlocksReport::max_isometry_residual)
        .def_readonly("max_block_residual", &DiagonalBlocksReport::max_block_residual);
    py::class_<SegmentRankReport>(m, "SegmentRankReport")
        .def_readonly("samples", &SegmentRankReport::samples)
        .def_readonly("max_segment_rank", &SegmentRankReport::max_segment_rank)
        .def_readonly("swap_reaches_conjugate", &SegmentRankReport::swap_reaches_conjugate)
        .def_readonly("swap_value", &SegmentRankReport::swap_value)
        .def_readonly("average_rank", &SegmentRankReport::average_rank);

    m.def("validate_coefficients", &validate_coefficients, py::arg("ts"),
          py::arg("tol") = default_tol);
    m.def("cstar_combination", &cstar_combination, py::arg("elements"), py::arg("coefficients"),
          py::arg("tol") = default_tol);
    m.def("unitary_polar", &unitary_polar, py::arg("t"));
    m.def("prep_coefficients", &prep_coefficients, py::arg("ts"), py::arg("tol") = default_tol);
    m.def("reduce_to_segments", &reduce_to_segments, py::arg("elements"), py::arg("coefficients"),
          py::arg("tol") = default_tol);
    m.def("replay_program", &replay_program, py::arg("elements"), py::arg("program"));
    m.def("matrix_range_sample", &matrix_range_sample, py::arg("t"), py::arg("n"),
          py::arg("kraus_count"), py::arg("count"), py::arg("seed"));
    m.def("verify_diagonal_blocks", &verify_diagonal_blocks, py::arg("a"), py::arg("m"),
          py::arg("n"), py::arg("tol") = default_tol);
    m.def("segment_rank_demo", &segment_rank_demo, py::arg("samples"), py::arg("seed"));
}
