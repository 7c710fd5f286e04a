//! Boundedness of a time-frequency localization operator between weighted
//! modulation spaces, in both Schur directions.

use coorbit::prelude::*;
use coorbit::presets::{operator_class, SpaceSpec};
use num_complex::Complex64;

pub fn run_example() -> coorbit::Result<()> {
    let n = 16;
    let frame = FrameSpec::parseval_gabor(periodized_gaussian(n)?)?;
    // multiplication by a smooth bump followed by a small modulation
    let bump: Vec<Complex64> = (0..n)
        .map(|t| {
            let x = (t as f64 - n as f64 / 2.0) / 3.0;
            Complex64::new((-x * x).exp(), 0.0)
        })
        .collect();
    let shift = tf_shift_matrix(&TfPoint::new(0, 1, n)?);
    let a = OperatorMatrix::new(shift * nalgebra::DMatrix::from_diagonal(&nalgebra::DVector::from_vec(bump)))?;

    let pairs = [
        (SpaceSpec::Modulation { p: Exponent::ONE, s: 1.0 }, SpaceSpec::Modulation { p: Exponent::TWO, s: 0.0 }),
        (SpaceSpec::Modulation { p: Exponent::TWO, s: 0.0 }, SpaceSpec::Modulation { p: Exponent::Infinite, s: -1.0 }),
        (SpaceSpec::Modulation { p: Exponent::Finite(3.0), s: 0.5 }, SpaceSpec::Modulation { p: Exponent::Finite(3.0), s: 0.5 }),
    ];
    for (domain, codomain) in pairs {
        let spec = operator_class(&domain, &codomain, frame.clone(), frame.clone())?.with_sigma(2.0);
        let r = certify(&a, &spec)?;
        println!(
            "{:?} -> {:?}: {:?}, criterion {:.6}, oracle {:.6}, consistent {}",
            domain,
            codomain,
            r.direction,
            r.criterion_value,
            r.oracle_norm,
            r.consistent()
        );
        if let Some(s) = r.sandwich {
            println!("  tested lower bound {:.6}, window constant {:.4}", s.coorbit_lower_bound, s.window_constant);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}
