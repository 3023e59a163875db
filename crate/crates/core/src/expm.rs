//! Matrix exponential and closed-form affine flows.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

fn norm1(m: &DMatrix<f64>) -> f64 {
    m.column_iter().map(|c| c.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// `[I, M, M², …, M^{k−1}]` if `M^k = 0` exactly for some `k ≤ n+1`.
pub fn nilpotent_powers(m: &DMatrix<f64>) -> Option<Vec<DMatrix<f64>>> {
    let n = m.nrows();
    let mut powers = vec![DMatrix::identity(n, n)];
    for _ in 0..=n {
        let next = powers.last().unwrap() * m;
        if next.iter().all(|x| *x == 0.0) {
            return Some(powers);
        }
        powers.push(next);
    }
    None
}

/// `exp(M)` by scaling and squaring on a truncated Taylor series.
pub fn expm(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    if let Some(p) = nilpotent_powers(m) {
        return series(&p, 1.0);
    }
    let nrm = norm1(m);
    let s = if nrm > 0.5 { (nrm / 0.5).log2().ceil() as i32 } else { 0 };
    let a = m / 2f64.powi(s);
    let mut sum = DMatrix::identity(n, n);
    let mut term = DMatrix::identity(n, n);
    for k in 1..64 {
        term = &term * &a / k as f64;
        sum += &term;
        if norm1(&term) <= 1e-17 * norm1(&sum) {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// `Σ_k t^k M^k / k!` from precomputed powers.
fn series(powers: &[DMatrix<f64>], t: f64) -> DMatrix<f64> {
    let n = powers[0].nrows();
    let mut out = DMatrix::zeros(n, n);
    let mut c = 1.0;
    for (k, p) in powers.iter().enumerate() {
        if k > 0 {
            c *= t / k as f64;
        }
        out += p * c;
    }
    out
}

/// The flow of `ẋ = A x + b`, evaluated through the augmented system
/// `ż = M z` with `z = (x, 1)`.
#[derive(Clone, Debug)]
pub struct AffineFlow {
    a: DMatrix<f64>,
    b: DVector<f64>,
    aug: DMatrix<f64>,
    powers: Option<Vec<DMatrix<f64>>>,
}

impl PartialEq for AffineFlow {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b
    }
}

impl AffineFlow {
    pub fn new(a: DMatrix<f64>, b: DVector<f64>) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n || b.len() != n {
            return Err(Error::InvalidValue(format!(
                "flow shape mismatch: A is {}×{}, b has {}",
                a.nrows(),
                a.ncols(),
                b.len()
            )));
        }
        if a.iter().chain(b.iter()).any(|x| !x.is_finite()) {
            return Err(Error::Numeric("non-finite flow coefficient".into()));
        }
        let mut aug = DMatrix::zeros(n + 1, n + 1);
        aug.view_mut((0, 0), (n, n)).copy_from(&a);
        aug.view_mut((0, n), (n, 1)).copy_from(&b);
        let powers = nilpotent_powers(&aug);
        Ok(AffineFlow { a, b, aug, powers })
    }

    pub fn dim(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn b(&self) -> &DVector<f64> {
        &self.b
    }

    pub fn is_nilpotent(&self) -> bool {
        self.powers.is_some()
    }

    pub fn eval(&self, x0: &DVector<f64>, t: f64) -> DVector<f64> {
        let n = self.dim();
        let e = match &self.powers {
            Some(p) => series(p, t),
            None => expm(&(&self.aug * t)),
        };
        let mut z = DVector::zeros(n + 1);
        z.rows_mut(0, n).copy_from(x0);
        z[n] = 1.0;
        (e * z).rows(0, n).into_owned()
    }
}

/// Value at `t` of the solution of `ẋ = A x + b`, `x(0) = x0`.
pub fn solve_flow(a: &DMatrix<f64>, b: &DVector<f64>, x0: &DVector<f64>, t: f64) -> Result<DVector<f64>> {
    if !t.is_finite() || t < 0.0 || x0.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(format!("bad flow input (t = {t})")));
    }
    let f = AffineFlow::new(a.clone(), b.clone())?;
    if x0.len() != f.dim() {
        return Err(Error::InvalidValue("initial state has the wrong dimension".into()));
    }
    Ok(f.eval(x0, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decay_matches_exp() {
        let a = DMatrix::from_element(1, 1, -1.0);
        let x = solve_flow(&a, &DVector::zeros(1), &DVector::from_element(1, 1.0), 1.0).unwrap();
        assert!((x[0] - (-1f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn rotation_is_accurate() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        let x = solve_flow(&a, &DVector::zeros(2), &DVector::from_vec(vec![1.0, 0.0]), 10.0).unwrap();
        assert!((x[0] - 10f64.cos()).abs() < 1e-11);
        assert!((x[1] + 10f64.sin()).abs() < 1e-11);
    }

    #[test]
    fn ball_is_exact_polynomial() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let b = DVector::from_vec(vec![0.0, -9.8]);
        let f = AffineFlow::new(a, b).unwrap();
        assert!(f.is_nilpotent());
        let x = f.eval(&DVector::from_vec(vec![5.0, 0.0]), 1.0);
        assert!((x[0] - 0.1).abs() < 1e-14);
        assert_eq!(x[1], -9.8);
    }

    #[test]
    fn clock_hits_integers_exactly() {
        let f = AffineFlow::new(DMatrix::zeros(1, 1), DVector::from_element(1, 1.0)).unwrap();
        assert_eq!(f.eval(&DVector::zeros(1), 3.0)[0], 3.0);
    }
}
