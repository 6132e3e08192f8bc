use strandtrace_core::diagrams::{
    closed_form_single_crossing, closed_form_single_crossing_raw, iterate_trace_partial,
    reduce_to_h, StrandDiagram,
};
use strandtrace_core::identities::{double_sum_failures, factorial_h_check, newton_check};
use strandtrace_core::oracle::ch_gamma;
use strandtrace_core::orders::{enumerate_shapes, ShapeFilter};
use strandtrace_core::Basis;

#[test]
fn single_crossing_closed_forms_agree() {
    for n in 2..=6 {
        let d = StrandDiagram::from_pairs(n, &[(1, n)]).unwrap();
        for k in 0..=4 {
            let brute = iterate_trace_partial(&d, k, n - 1).unwrap();
            let closed = closed_form_single_crossing(n, k).unwrap();
            assert!(closed.is_h_nonnegative());
            assert_eq!(closed.expand().unwrap(), brute, "n={n}, k={k}");
            assert_eq!(
                closed_form_single_crossing_raw(n, k).unwrap(),
                brute,
                "n={n}, k={k}"
            );
        }
    }
}

#[test]
fn reduction_matches_oracle() {
    for n in 1..=7 {
        for shape in enumerate_shapes(n, ShapeFilter::Avoiding211).unwrap() {
            let r = reduce_to_h(&shape, true).unwrap();
            assert!(r.all_steps_h_nonnegative(), "{shape:?}");
            assert!(r.degrees_consistent(), "{shape:?}");
            assert!(r.is_h_positive(), "{shape:?}");
            assert_eq!(
                r.value,
                ch_gamma(&shape).unwrap().to_basis(Basis::Homogeneous),
                "{shape:?}"
            );
        }
    }
}

#[test]
fn identities_hold() {
    assert!((0..=7).all(factorial_h_check));
    assert!((1..=15).all(newton_check));
    assert!(double_sum_failures(6).is_empty());
}
