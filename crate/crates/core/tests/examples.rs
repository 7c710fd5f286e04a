#[path = "../examples/gabor_parseval.rs"]
#[allow(dead_code)]
mod gabor_parseval;

#[path = "../examples/haar_wavelet.rs"]
#[allow(dead_code)]
mod haar_wavelet;

#[path = "../examples/dual_window.rs"]
#[allow(dead_code)]
mod dual_window;

#[path = "../examples/kernel_roundtrip.rs"]
#[allow(dead_code)]
mod kernel_roundtrip;

#[path = "../examples/schur_certify.rs"]
#[allow(dead_code)]
mod schur_certify;

#[path = "../examples/meyer_criterion.rs"]
#[allow(dead_code)]
mod meyer_criterion;

#[path = "../examples/cross_representation.rs"]
#[allow(dead_code)]
mod cross_representation;

#[path = "../examples/atomic_decomposition.rs"]
#[allow(dead_code)]
mod atomic_decomposition;

#[path = "../examples/all_p_sweep.rs"]
#[allow(dead_code)]
mod all_p_sweep;

#[path = "../examples/report_files.rs"]
#[allow(dead_code)]
mod report_files;

#[test]
fn examples_run() {
    gabor_parseval::run_example().unwrap();
    haar_wavelet::run_example().unwrap();
    dual_window::run_example().unwrap();
    kernel_roundtrip::run_example().unwrap();
    schur_certify::run_example().unwrap();
    meyer_criterion::run_example().unwrap();
    cross_representation::run_example().unwrap();
    atomic_decomposition::run_example().unwrap();
    all_p_sweep::run_example().unwrap();
    report_files::run_example().unwrap();
}
