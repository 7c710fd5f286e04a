//! Operators from a Besov-type space (Haar frame) into a modulation space
//! (Gabor frame) and back.

use coorbit::prelude::*;
use coorbit::presets::{operator_class, SpaceSpec};

pub fn run_example() -> coorbit::Result<()> {
    let n = 16;
    let haar = FrameSpec::haar(n)?;
    let gabor = FrameSpec::parseval_gabor(periodized_gaussian(n)?)?;
    let identity = OperatorMatrix::identity(n);

    let besov = SpaceSpec::Besov { p: Exponent::ONE, r: 0.0 };
    let modulation = SpaceSpec::Modulation { p: Exponent::TWO, s: 1.0 };
    let spec = operator_class(&besov, &modulation, haar.clone(), gabor.clone())?;
    let r = certify(&identity, &spec)?;
    println!("B^0_{{1,1}} -> M^2_(m_1): criterion {:.6}, oracle {:.6}", r.criterion_value, r.oracle_norm);

    let back = operator_class(
        &SpaceSpec::Modulation { p: Exponent::TWO, s: 0.0 },
        &SpaceSpec::Besov { p: Exponent::Infinite, r: -0.5 },
        gabor.clone(),
        haar.clone(),
    )?;
    let r = certify(&identity, &back)?;
    println!("M^2 -> B^(-1/2)_(inf,inf): criterion {:.6}, oracle {:.6}", r.criterion_value, r.oracle_norm);

    // a rank-one operator factors into the two one-dimensional norms
    let (phi, upsilon) = (coorbit::random::signal(n, 1), coorbit::random::signal(n, 2));
    let r = certify(&OperatorMatrix::rank_one(&phi, &upsilon), &spec)?;
    let v = analyze(&upsilon, &haar)?;
    let m1 = spec.m1.values_on(&haar.lattice())?;
    let sup = v.values().iter().zip(&m1).map(|(z, w)| z.norm() / w).fold(0.0, f64::max);
    let factored = sup * weighted_lp_norm(&analyze(&phi, &gabor)?, Exponent::TWO, &spec.m2)?;
    println!("rank one: criterion {:.12}, factored {:.12}", r.criterion_value, factored);
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}
