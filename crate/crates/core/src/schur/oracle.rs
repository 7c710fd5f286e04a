use crate::error::{Error, Result};
use crate::kernel::lift_operator;
use crate::norms::{mixed_norm, Exponent, MixedNormSpec, MixedVariant};
use crate::operator::OperatorMatrix;
use crate::repr::{LatticePoint, Weight};
use crate::transforms::{CoeffField2D, FrameSpec};

/// Norm of the lifted operator `l^1_{m1} -> l^p_{m2}` as the calligraphic
/// mixed norm `sup_l1 ||k(l1, .) m2||_p / m1(l1)`.
pub fn schur_norm_1_to_p(k: &CoeffField2D, p: Exponent, m1: &Weight, m2: &Weight) -> Result<f64> {
    mixed_norm(
        k,
        &MixedNormSpec {
            p,
            variant: MixedVariant::SupOverFirst,
            m1: *m1,
            m2: *m2,
        },
    )
}

/// Norm of the lifted operator `l^p_{m1} -> l^inf_{m2}` as the mixed norm
/// `sup_l2 m2(l2) ||k(., l2) / m1||_q` with `q` conjugate to `p`.
pub fn schur_norm_p_to_inf(k: &CoeffField2D, p: Exponent, m1: &Weight, m2: &Weight) -> Result<f64> {
    mixed_norm(
        k,
        &MixedNormSpec {
            p: p.conjugate(),
            variant: MixedVariant::SupOverSecond,
            m1: *m1,
            m2: *m2,
        },
    )
}

fn p_sum(values: impl Iterator<Item = f64>, p: Exponent) -> f64 {
    match p {
        Exponent::Infinite => values.fold(0.0, f64::max),
        Exponent::Finite(p) if p == 1.0 => values.sum(),
        Exponent::Finite(p) => values.map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p),
    }
}

/// Maximum of `||A_lift (delta_x / m1(x))||_{l^p_{m2}}` over the extreme
/// points of the unit ball of `l^1_{m1}`.
pub fn opnorm_oracle_1_to_p(k: &CoeffField2D, p: Exponent, m1: &Weight, m2: &Weight) -> Result<f64> {
    let lifted = lift_operator(k);
    let w1 = m1.values_on(lifted.domain())?;
    let w2 = m2.values_on(lifted.codomain())?;
    let matrix = lifted.matrix();
    let mut best: f64 = 0.0;
    for (x, wx) in w1.iter().enumerate() {
        let image = matrix.column(x);
        let norm = p_sum(image.iter().zip(&w2).map(|(z, w)| (z / wx).norm() * w), p);
        best = best.max(norm);
    }
    Ok(best)
}

/// Maximum over codomain points `y` of `|A_lift H_y (y)| m2(y) / ||H_y||_{l^p_{m1}}`
/// where `H_y` is the Hoelder extremizer of the functional `F -> (A_lift F)(y)`.
pub fn opnorm_oracle_p_to_inf(k: &CoeffField2D, p: Exponent, m1: &Weight, m2: &Weight) -> Result<f64> {
    let lifted = lift_operator(k);
    let w1 = m1.values_on(lifted.domain())?;
    let w2 = m2.values_on(lifted.codomain())?;
    let matrix = lifted.matrix();
    let mut best: f64 = 0.0;
    for (y, wy) in w2.iter().enumerate() {
        let row = matrix.row(y);
        let Some(h) = hoelder_extremizer(row.iter().copied(), &w1, p) else {
            continue;
        };
        let value: num_complex::Complex64 = row.iter().zip(&h).map(|(a, b)| a * b).sum();
        let denom = p_sum(h.iter().zip(&w1).map(|(z, w)| z.norm() * w), p);
        best = best.max(value.norm() * wy / denom);
    }
    Ok(best)
}

/// Coefficients `H` with `||H||_{l^p_{m}} = 1`-direction maximizing
/// `|sum H(x) a(x)|`; `None` when `a` vanishes.
pub(crate) fn hoelder_extremizer(
    a: impl Iterator<Item = num_complex::Complex64>,
    m: &[f64],
    p: Exponent,
) -> Option<Vec<num_complex::Complex64>> {
    let scaled: Vec<num_complex::Complex64> = a.zip(m).map(|(z, w)| z / *w).collect();
    if scaled.iter().all(|z| z.norm() == 0.0) {
        return None;
    }
    let phase = |z: &num_complex::Complex64| {
        if z.norm() == 0.0 {
            num_complex::Complex64::new(0.0, 0.0)
        } else {
            z.conj() / z.norm()
        }
    };
    let g: Vec<num_complex::Complex64> = match p.conjugate() {
        Exponent::Infinite => {
            let (arg, _) = scaled
                .iter()
                .enumerate()
                .fold((0, -1.0), |(bi, bv), (i, z)| if z.norm() > bv { (i, z.norm()) } else { (bi, bv) });
            let mut g = vec![num_complex::Complex64::new(0.0, 0.0); scaled.len()];
            g[arg] = phase(&scaled[arg]);
            g
        }
        Exponent::Finite(q) => scaled.iter().map(|z| phase(z) * z.norm().powf(q - 1.0)).collect(),
    };
    Some(g.iter().zip(m).map(|(z, w)| z / *w).collect())
}

/// `sup_l1 sum_l2 |<A psi_l1, psi_l2>| 2^{(j1 - j2)/2}` over a wavelet basis.
pub fn meyer_criterion(a: &OperatorMatrix, frame: &FrameSpec) -> Result<f64> {
    let lattice = frame.lattice();
    let points: Vec<(usize, i32)> = lattice
        .points()
        .enumerate()
        .map(|(i, p)| match p {
            LatticePoint::Affine(q) => Ok((i, q.j as i32)),
            LatticePoint::Tf(_) => Err(Error::InvalidLattice(
                "the wavelet criterion needs an affine lattice".into(),
            )),
        })
        .collect::<Result<_>>()?;
    a.expect_shape(frame.dim(), frame.dim())?;
    let atoms: Vec<_> = (0..frame.len()).map(|i| frame.atom(i)).collect();
    let mut best: f64 = 0.0;
    for &(i1, j1) in &points {
        let image = a.apply(&atoms[i1])?;
        let mut row = 0.0;
        for &(i2, j2) in &points {
            row += image.inner(&atoms[i2])?.norm() * (0.5 * f64::from(j1 - j2)).exp2();
        }
        best = best.max(row);
    }
    Ok(best)
}
