//! The two endpoint Schur criteria bound the lifted operator on every l^p.

use coorbit::prelude::*;

pub fn run_example() -> coorbit::Result<()> {
    let frame = FrameSpec::parseval_gabor(periodized_gaussian(8)?)?;
    let m = Weight::PolynomialTf(1.0);
    let k = coorbit::random::operator(8, 8, 3);
    let r = certify_all_p(&k, &m, &m, &frame, &frame)?;
    let e = r.endpoint_criteria.expect("endpoints");
    println!("sup over first {:.6}, sup over second {:.6}", e.sup_over_first, e.sup_over_second);
    for entry in &r.p_sweep {
        println!("p = {:>3}: {:.6} ({}), within bound {}", entry.p.to_string(), entry.lifted_norm, entry.method, entry.within_bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}
