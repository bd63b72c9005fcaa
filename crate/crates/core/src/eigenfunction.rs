//! The two-parameter eigenfunctions
//! `Φ^θ_{m,n}(x, y) = cos θ sin(mx) sin(ny) + sin θ sin(nx) sin(my)`
//! together with their derivatives and the polynomial forms obtained by
//! substituting `u = cos x`, `v = cos y`.

use serde::Serialize;

use crate::chebyshev::{u_eval, u_eval_with_derivatives};
use crate::error::{invalid, Result};
use crate::scalar::{canonical_theta, Scalar};

/// `Φ^θ_{m,n}` for fixed `(m, n, θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThetaFamily<T> {
    pub m: usize,
    pub n: usize,
    /// Canonical representative in `[0, π)`. Shifting `θ` by `π` negates `Φ`,
    /// so this identifies `Φ` with `−Φ`.
    pub theta: T,
}

impl<T: Scalar> ThetaFamily<T> {
    pub fn new(m: usize, n: usize, theta: T) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(invalid(format!("mode ({m}, {n}) must have m, n >= 1")));
        }
        if !theta.is_finite() {
            return Err(invalid("theta must be finite"));
        }
        Ok(ThetaFamily {
            m,
            n,
            theta: canonical_theta(theta),
        })
    }

    /// `X = Φ^0`.
    pub fn x_product(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, T::zero())
    }

    /// `Y = Φ^{π/2}`.
    pub fn y_product(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, T::FRAC_PI_2())
    }

    /// `Z₊ = Φ^{π/4}`.
    pub fn z_plus(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, T::FRAC_PI_4())
    }

    /// `Z₋ = Φ^{3π/4}`.
    pub fn z_minus(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, T::lit(3.0) * T::FRAC_PI_4())
    }

    /// Member `ψ + μ φ` of the pencil with `μ = tan θ`, `φ = Y`, `ψ = X`.
    pub fn from_mu(m: usize, n: usize, mu: T) -> Result<Self> {
        Self::new(m, n, mu.atan())
    }

    /// `μ = tan θ` (infinite at `θ = π/2`).
    pub fn mu(&self) -> T {
        self.theta.tan()
    }

    /// `λ̂_{m,n} = m² + n²`.
    pub fn eigenvalue(&self) -> usize {
        self.m * self.m + self.n * self.n
    }

    /// The same function written with `m` and `n` exchanged, using
    /// `Φ^θ_{m,n} = Φ^{π/2−θ}_{n,m}`. For `θ > π/2` the folded angle
    /// describes `−Φ`, which has the same nodal set.
    pub fn transposed(&self) -> Self {
        ThetaFamily {
            m: self.n,
            n: self.m,
            theta: canonical_theta(T::FRAC_PI_2() - self.theta),
        }
    }

    pub fn is_one_r(&self) -> bool {
        self.m == 1
    }

    fn cs(&self) -> (T, T) {
        (self.theta.cos(), self.theta.sin())
    }

    pub fn eval(&self, x: T, y: T) -> T {
        let (c, s) = self.cs();
        let (m, n) = (T::from_count(self.m), T::from_count(self.n));
        c * (m * x).sin() * (n * y).sin() + s * (n * x).sin() * (m * y).sin()
    }

    /// `∇Φ`. For `m = 1` the factored form through `U_{n−1}` is used.
    pub fn grad(&self, x: T, y: T) -> (T, T) {
        if self.m == 1 {
            return self.grad_factored(x, y);
        }
        self.grad_direct(x, y)
    }

    pub fn grad_direct(&self, x: T, y: T) -> (T, T) {
        let (c, s) = self.cs();
        let (m, n) = (T::from_count(self.m), T::from_count(self.n));
        let gx = c * m * (m * x).cos() * (n * y).sin() + s * n * (n * x).cos() * (m * y).sin();
        let gy = c * n * (m * x).sin() * (n * y).cos() + s * m * (n * x).sin() * (m * y).cos();
        (gx, gy)
    }

    /// `[[Φ_xx, Φ_xy], [Φ_xy, Φ_yy]]`. Factored through `U_{n−1}` when `m = 1`.
    pub fn hessian(&self, x: T, y: T) -> [[T; 2]; 2] {
        if self.m == 1 {
            return self.hessian_factored(x, y);
        }
        self.hessian_direct(x, y)
    }

    pub fn hessian_direct(&self, x: T, y: T) -> [[T; 2]; 2] {
        let (c, s) = self.cs();
        let (m, n) = (T::from_count(self.m), T::from_count(self.n));
        let a = c * (m * x).sin() * (n * y).sin();
        let b = s * (n * x).sin() * (m * y).sin();
        let xx = -(m * m) * a - n * n * b;
        let yy = -(n * n) * a - m * m * b;
        let xy = m * n * (c * (m * x).cos() * (n * y).cos() + s * (n * x).cos() * (m * y).cos());
        [[xx, xy], [xy, yy]]
    }

    /// `φ = cos θ U_{R−1}(cos y) + sin θ U_{R−1}(cos x)`, so that
    /// `Φ^θ_{1,R} = sin x sin y φ`. Only meaningful for `m = 1`.
    pub fn reduced(&self, x: T, y: T) -> T {
        let (c, s) = self.cs();
        let k = self.n - 1;
        c * u_eval(k, y.cos()) + s * u_eval(k, x.cos())
    }

    fn grad_factored(&self, x: T, y: T) -> (T, T) {
        let (c, s) = self.cs();
        let k = self.n - 1;
        let (sx, cx, sy, cy) = (x.sin(), x.cos(), y.sin(), y.cos());
        let (ux, dux, _) = u_eval_with_derivatives(k, cx);
        let (uy, duy, _) = u_eval_with_derivatives(k, cy);
        let phi = c * uy + s * ux;
        let gx = sy * (cx * phi - s * sx * sx * dux);
        let gy = sx * (cy * phi - c * sy * sy * duy);
        (gx, gy)
    }

    fn hessian_factored(&self, x: T, y: T) -> [[T; 2]; 2] {
        let (c, s) = self.cs();
        let k = self.n - 1;
        let (sx, cx, sy, cy) = (x.sin(), x.cos(), y.sin(), y.cos());
        let (ux, dux, ddux) = u_eval_with_derivatives(k, cx);
        let (uy, duy, dduy) = u_eval_with_derivatives(k, cy);
        let phi = c * uy + s * ux;
        let phi_x = -s * sx * dux;
        let phi_y = -c * sy * duy;
        let phi_xx = s * (sx * sx * ddux - cx * dux);
        let phi_yy = c * (sy * sy * dduy - cy * duy);
        let p = sx * sy;
        let two = T::lit(2.0);
        let xx = -p * phi + two * cx * sy * phi_x + p * phi_xx;
        let yy = -p * phi + two * sx * cy * phi_y + p * phi_yy;
        let xy = cx * cy * phi + cx * sy * phi_y + sx * cy * phi_x;
        [[xx, xy], [xy, yy]]
    }
}

/// Which substituted polynomial to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormCase {
    OneThree,
    TwoThree,
    OneFour,
    /// `(1, R)` with its `R`.
    OneR(usize),
}

/// Polynomial `Ψ(u, v)` with `Φ(x, y) = prefactor(x, y) · Ψ(cos x, cos y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubstitutedForm<T> {
    pub case: FormCase,
    pub theta: T,
}

impl<T: Scalar> SubstitutedForm<T> {
    pub fn new(case: FormCase, theta: T) -> Result<Self> {
        if let FormCase::OneR(r) = case {
            if r < 1 {
                return Err(invalid("(1, R) form needs R >= 1"));
            }
        }
        Ok(SubstitutedForm {
            case,
            theta: canonical_theta(theta),
        })
    }

    /// Form matching the mode `(m, n)`; `(1, 3)` and `(1, 4)` get their own
    /// cases, other `(1, R)` the general one.
    pub fn for_mode(m: usize, n: usize, theta: T) -> Result<Self> {
        let case = match (m, n) {
            (1, 3) => FormCase::OneThree,
            (1, 4) => FormCase::OneFour,
            (2, 3) => FormCase::TwoThree,
            (1, r) if r >= 1 => FormCase::OneR(r),
            _ => {
                return Err(invalid(format!(
                    "no substituted form for mode ({m}, {n})"
                )))
            }
        };
        Self::new(case, theta)
    }

    pub fn eval_substituted(&self, u: T, v: T) -> T {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        let one = T::one();
        let two = T::lit(2.0);
        let four = T::lit(4.0);
        match self.case {
            FormCase::OneThree => c * (four * v * v - one) + s * (four * u * u - one),
            FormCase::TwoThree => {
                u * (four * v * v - one) * c + v * (four * u * u - one) * s
            }
            FormCase::OneFour => c * v * (two * v * v - one) + s * u * (two * u * u - one),
            FormCase::OneR(r) => c * u_eval(r - 1, v) + s * u_eval(r - 1, u),
        }
    }

    pub fn prefactor(&self, x: T, y: T) -> T {
        let base = x.sin() * y.sin();
        match self.case {
            FormCase::OneThree | FormCase::OneR(_) => base,
            FormCase::TwoThree => T::lit(2.0) * base,
            FormCase::OneFour => T::lit(4.0) * base,
        }
    }

    pub fn mode(&self) -> (usize, usize) {
        match self.case {
            FormCase::OneThree => (1, 3),
            FormCase::TwoThree => (2, 3),
            FormCase::OneFour => (1, 4),
            FormCase::OneR(r) => (1, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn fam(m: usize, n: usize, th: f64) -> ThetaFamily<f64> {
        ThetaFamily::new(m, n, th).unwrap()
    }

    #[test]
    fn theta_zero_is_product() {
        let f = fam(2, 5, 0.0);
        let (x, y) = (0.7, 1.9);
        assert!((f.eval(x, y) - (2.0 * x).sin() * (5.0 * y).sin()).abs() < 1e-15);
    }

    #[test]
    fn ground_state_has_flat_top() {
        let (gx, gy) = fam(1, 1, 0.0).grad(PI / 2.0, PI / 2.0);
        assert!(gx.abs() < 1e-15 && gy.abs() < 1e-15);
    }

    #[test]
    fn factored_and_direct_derivatives_agree() {
        for r in 1..10 {
            let f = fam(1, r, 0.37);
            for &(x, y) in &[(0.3, 0.4), (1.2, 2.9), (2.2, 0.05)] {
                let a = f.grad(x, y);
                let b = f.grad_direct(x, y);
                assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
                let h = f.hessian(x, y);
                let k = f.hessian_direct(x, y);
                for i in 0..2 {
                    for j in 0..2 {
                        assert!((h[i][j] - k[i][j]).abs() < 1e-11, "r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_identity() {
        let f = fam(2, 5, 0.4);
        let t = f.transposed();
        assert_eq!((t.m, t.n), (5, 2));
        assert!((t.eval(1.1, 0.3) - f.eval(1.1, 0.3)).abs() < 1e-14);
    }

    #[test]
    fn mu_roundtrip() {
        let f = ThetaFamily::<f64>::from_mu(1, 3, 0.5).unwrap();
        assert!((f.mu() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn substituted_forms_reject_unknown_modes() {
        assert!(SubstitutedForm::for_mode(2, 5, 0.1_f64).is_err());
        assert!(SubstitutedForm::for_mode(3, 3, 0.1_f64).is_err());
        assert_eq!(
            SubstitutedForm::for_mode(1, 7, 0.1_f64).unwrap().case,
            FormCase::OneR(7)
        );
    }

    #[test]
    fn two_three_vanishes_at_origin() {
        for k in 0..10 {
            let f = SubstitutedForm::new(FormCase::TwoThree, k as f64 * 0.3).unwrap();
            assert_eq!(f.eval_substituted(0.0, 0.0), 0.0);
        }
    }

    #[test]
    fn one_three_diagonals_at_three_quarters() {
        let f = SubstitutedForm::new(FormCase::OneThree, 0.75 * PI).unwrap();
        for k in 0..21 {
            let u = -1.0 + k as f64 * 0.1;
            assert!(f.eval_substituted(u, u).abs() < 1e-15);
            assert!(f.eval_substituted(u, -u).abs() < 1e-15);
        }
        assert!(f.eval_substituted(0.5, 0.1).abs() > 1e-3);
    }

    #[test]
    fn one_four_factorization_at_quarter() {
        let f = SubstitutedForm::new(FormCase::OneFour, 0.25 * PI).unwrap();
        for i in 0..11 {
            for j in 0..11 {
                let (u, v) = (-1.0 + 0.2 * i as f64, -1.0 + 0.2 * j as f64);
                let w = u - v / 2.0;
                let rhs = (u + v) * (2.0 * w * w + 1.5 * v * v - 1.0) / 2.0_f64.sqrt();
                assert!((f.eval_substituted(u, v) - rhs).abs() < 1e-12);
            }
        }
    }
}
