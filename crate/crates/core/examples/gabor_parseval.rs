//! Short-time Fourier coefficients of a chirp on the full time-frequency
//! lattice of Z_64 with a periodized Gaussian window.

use coorbit::prelude::*;
use num_complex::Complex64;

pub fn run_example() -> coorbit::Result<()> {
    let n = 64;
    let frame = FrameSpec::parseval_gabor(periodized_gaussian(n)?)?;
    println!("frame: {} atoms, Parseval deviation {:.2e}", frame.len(), frame.parseval_deviation());

    let chirp: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, std::f64::consts::PI * (t * t) as f64 / n as f64))
        .collect();
    let f = Signal::new(chirp)?;

    let direct = analyze(&f, &frame)?;
    let fast = analyze_fast(&f, &frame)?;
    println!("FFT path vs direct sums: {:.2e}", direct.max_abs_diff(&fast)?);
    println!("||V f||_2 = {:.12}, ||f||_2 = {:.12}", direct.l2_norm(), f.norm());

    let back = synthesize(&direct, &frame)?;
    println!("reconstruction error: {:.2e}", back.sub(&f)?.norm() / f.norm());

    for s in [0.0, 1.0, 2.0] {
        let m = Weight::PolynomialTf(s);
        let norm = coorbit_norm(&f, &frame, Exponent::ONE, &m)?;
        println!("M^1 norm with (1 + |x| + |w|)^{s}: {norm:.6}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}
