use rayon::prelude::*;

use super::config::Config;
use crate::error::{Error, Result};
use crate::kernel::{apply_via_factorization, atomic_decompose, galerkin_kernel, kernel_from_operator};
use crate::norms::Exponent;
use crate::operator::OperatorMatrix;
use crate::repr::{Lattice, Weight};
use crate::schur::{certify_all_p, opnorm_oracle_1_to_p, opnorm_oracle_p_to_inf, schur_norm_1_to_p, schur_norm_p_to_inf};
use crate::transforms::{analyze, synthesize, tensor_analysis, tensor_synthesis, CoeffField2D, FrameSpec};

const TRIALS: u64 = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantResult {
    pub name: &'static str,
    pub error: Option<f64>,
    pub tolerance: f64,
    pub detail: String,
}

impl InvariantResult {
    pub fn passed(&self) -> bool {
        self.error.is_some_and(|e| e <= self.tolerance)
    }
}

type Check = (&'static str, f64, Box<dyn Fn() -> Result<f64> + Sync + Send>);

fn rel(err: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        err / scale
    } else {
        err
    }
}

fn parseval(frame: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst = frame.parseval_deviation();
    for t in 0..TRIALS {
        let f = crate::random::signal(frame.dim(), seed + t);
        let back = synthesize(&analyze(&f, frame)?, frame)?;
        worst = worst.max(rel(back.sub(&f)?.norm(), f.norm()));
    }
    Ok(worst)
}

fn tensor_factorization(f1: &FrameSpec, f2: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for t in 0..TRIALS {
        let g1 = crate::random::signal(f1.dim(), seed + 2 * t);
        let g2 = crate::random::signal(f2.dim(), seed + 2 * t + 1);
        let vk = tensor_analysis(&OperatorMatrix::rank_one(&g2, &g1), f1, f2)?;
        let (v1, v2) = (analyze(&g1, f1)?, analyze(&g2, f2)?);
        for i1 in 0..f1.len() {
            for i2 in 0..f2.len() {
                let outer = v2.values()[i2] * v1.values()[i1].conj();
                worst = worst.max((vk.get(i1, i2) - outer).norm());
            }
        }
    }
    Ok(worst)
}

fn kernel_round_trip(f1: &FrameSpec, f2: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for t in 0..TRIALS {
        let k = crate::random::operator(f2.dim(), f1.dim(), seed + t);
        let rec = kernel_from_operator(&k, f1, f2, &Weight::Constant, &Weight::Constant)?;
        worst = worst.max(rel(rec.kernel.max_abs_diff(&k)?, k.frobenius_norm()));
        let back = tensor_synthesis(&tensor_analysis(&k, f1, f2)?, f1, f2)?;
        worst = worst.max(rel(back.max_abs_diff(&k)?, k.frobenius_norm()));
    }
    Ok(worst)
}

fn factorization(f1: &FrameSpec, f2: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for t in 0..TRIALS {
        let a = crate::random::operator(f2.dim(), f1.dim(), seed + t);
        let x = crate::random::signal(f1.dim(), seed + 100 + t);
        let direct = a.apply(&x)?;
        let via = apply_via_factorization(&galerkin_kernel(&a, f1, f2)?, &x, f1, f2)?;
        worst = worst.max(rel(via.sub(&direct)?.norm(), direct.norm()));
    }
    Ok(worst)
}

fn weight_for(lattice: &Lattice, s: f64) -> Weight {
    match lattice {
        Lattice::Tf(_) => Weight::PolynomialTf(s),
        Lattice::Affine(_) => Weight::Dyadic(s),
    }
}

fn schur_exactness(f1: &FrameSpec, f2: &FrameSpec, seed: u64) -> Result<f64> {
    let (l1, l2) = (f1.lattice(), f2.lattice());
    let mut rng = crate::random::rng(seed);
    let mut worst: f64 = 0.0;
    for (t, p) in [Exponent::ONE, Exponent::TWO, Exponent::Finite(3.0), Exponent::Infinite].into_iter().enumerate() {
        let values = nalgebra::DMatrix::from_fn(l1.len(), l2.len(), |_, _| crate::random::complex(&mut rng));
        let k = CoeffField2D::new(values, l1, l2)?;
        let s = [-2.0, -1.0, 0.0, 1.0, 2.0];
        let m1 = weight_for(&l1, s[t % 5]);
        let m2 = weight_for(&l2, s[(t + 2) % 5]);
        let a = schur_norm_1_to_p(&k, p, &m1, &m2)?;
        let b = opnorm_oracle_1_to_p(&k, p, &m1, &m2)?;
        worst = worst.max(rel((a - b).abs(), b));
        let a = schur_norm_p_to_inf(&k, p, &m1, &m2)?;
        let b = opnorm_oracle_p_to_inf(&k, p, &m1, &m2)?;
        worst = worst.max(rel((a - b).abs(), b));
    }
    Ok(worst)
}

/// Largest excess of a sampled `l^p -> l^p` lifted norm over the endpoint bound.
fn all_p(f1: &FrameSpec, f2: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for t in 0..2 {
        let k = crate::random::operator(f2.dim(), f1.dim(), seed + t);
        let m1 = weight_for(&f1.lattice(), 1.0);
        let m2 = weight_for(&f2.lattice(), 1.0);
        let r = certify_all_p(&k, &m1, &m2, f1, f2)?;
        for e in &r.p_sweep {
            worst = worst.max(rel((e.lifted_norm - r.criterion_value).max(0.0), r.criterion_value));
        }
    }
    Ok(worst)
}

fn atomic(frame: &FrameSpec, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let w = weight_for(&frame.lattice(), 1.0);
    for t in 0..TRIALS {
        let f = crate::random::signal(frame.dim(), seed + t);
        let d = atomic_decompose(&f, frame, &w)?;
        worst = worst.max(rel(d.reconstruct()?.sub(&f)?.norm(), f.norm()));
    }
    Ok(worst)
}

/// Runs the invariant suite on the frames of `config`. Checks run
/// concurrently and are reported in a fixed order.
pub fn run_invariants(config: &Config) -> Vec<InvariantResult> {
    let failure = |name, detail: String| {
        vec![InvariantResult {
            name,
            error: None,
            tolerance: 0.0,
            detail,
        }]
    };
    let (f1, f2) = match (config.frame(1), config.frame(2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            let name = if e == Error::NonFinite { "window-finite" } else { "frame-construction" };
            return failure(name, e.to_string());
        }
    };
    let finite = |f: &FrameSpec| f.atom_matrix().iter().all(|z| z.re.is_finite() && z.im.is_finite());
    if !finite(&f1) || !finite(&f2) {
        return failure("window-finite", "frame atoms contain NaN or infinity".into());
    }
    let seed = config.seed;
    let checks: Vec<Check> = vec![
        ("parseval-frame-1", 1e-10, Box::new({
            let f1 = f1.clone();
            move || parseval(&f1, seed)
        })),
        ("parseval-frame-2", 1e-10, Box::new({
            let f2 = f2.clone();
            move || parseval(&f2, seed + 1000)
        })),
        ("tensor-factorization", 1e-12, Box::new({
            let (f1, f2) = (f1.clone(), f2.clone());
            move || tensor_factorization(&f1, &f2, seed)
        })),
        ("kernel-round-trip", 1e-9, Box::new({
            let (f1, f2) = (f1.clone(), f2.clone());
            move || kernel_round_trip(&f1, &f2, seed)
        })),
        ("operator-factorization", 1e-9, Box::new({
            let (f1, f2) = (f1.clone(), f2.clone());
            move || factorization(&f1, &f2, seed)
        })),
        ("schur-exactness", 1e-12, Box::new({
            let (f1, f2) = (f1.clone(), f2.clone());
            move || schur_exactness(&f1, &f2, seed)
        })),
        ("all-p-endpoint-bound", 1e-10, Box::new({
            let (f1, f2) = (f1.clone(), f2.clone());
            move || all_p(&f1, &f2, seed)
        })),
        ("atomic-reconstruction", 1e-9, Box::new({
            let f1 = f1.clone();
            move || atomic(&f1, seed)
        })),
    ];
    checks
        .par_iter()
        .map(|(name, tolerance, check)| match check() {
            Ok(err) if err.is_finite() => InvariantResult {
                name,
                error: Some(err),
                tolerance: *tolerance,
                detail: String::new(),
            },
            Ok(_) => InvariantResult {
                name,
                error: None,
                tolerance: *tolerance,
                detail: "non-finite error".into(),
            },
            Err(e) => InvariantResult {
                name,
                error: None,
                tolerance: *tolerance,
                detail: e.to_string(),
            },
        })
        .collect()
}

pub fn format_table(results: &[InvariantResult]) -> String {
    let mut out = format!("{:<24} {:>12} {:>10}  {}\n", "invariant", "max error", "tolerance", "status");
    for r in results {
        let err = r.error.map_or("-".to_string(), |e| format!("{e:.3e}"));
        let status = if r.passed() { "pass".to_string() } else { format!("FAIL {}", r.detail) };
        let tol = if r.tolerance > 0.0 { format!("{:.0e}", r.tolerance) } else { "-".into() };
        out.push_str(&format!("{:<24} {:>12} {:>10}  {}\n", r.name, err, tol, status.trim_end()));
    }
    out
}
