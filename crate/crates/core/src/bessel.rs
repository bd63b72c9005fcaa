//! Order-zero Bessel function of the first kind and its first positive zero.

use crate::scalar::{bisect, Scalar};

/// `J_0(x)` from the ascending series `Σ (-1)^k (x²/4)^k / (k!)²`.
///
/// Accurate to rounding for `|x| ≲ 10`, which covers the bracket used for `j_{0,1}`.
pub fn bessel_j0<T: Scalar>(x: T) -> T {
    let q = x * x / T::lit(4.0);
    let mut term = T::one();
    let mut sum = T::one();
    for k in 1..200usize {
        let kk = T::from_count(k);
        term = -term * q / (kk * kk);
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    sum
}

/// Smallest positive zero `j_{0,1}` of `J_0`, by bisection on `[2.0, 2.5]`.
pub fn first_bessel_zero<T: Scalar>() -> T {
    bisect(T::lit(2.0), T::lit(2.5), bessel_j0)
}

/// `π / j_{0,1}²`, the largest ratio `k / λ_k` compatible with Faber–Krahn.
pub fn faber_krahn_ratio<T: Scalar>() -> T {
    let j = first_bessel_zero::<T>();
    T::PI() / (j * j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_matches_known_values() {
        // J0(0) = 1, J0(1) = 0.7651976865579666 (A&S table 9.1)
        assert_eq!(bessel_j0(0.0_f64), 1.0);
        assert!((bessel_j0(1.0_f64) - 0.765_197_686_557_966_6).abs() < 1e-15);
    }

    #[test]
    fn first_zero_to_twelve_digits() {
        // j_{0,1} = 2.404825557695773 (A&S table 9.5)
        let j: f64 = first_bessel_zero();
        assert!((j - 2.404_825_557_695_773).abs() < 1e-12);
        assert!(bessel_j0(j).abs() < 1e-14);
    }

    #[test]
    fn faber_krahn_ratio_below_published_bound() {
        let r: f64 = faber_krahn_ratio();
        assert!(r < 0.54323);
        assert!(r > 0.5432);
        let r32: f32 = faber_krahn_ratio();
        assert!((r32 as f64 - r).abs() < 1e-5);
    }
}
