//! Fraction-free Gaussian elimination for small integer systems.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// Solves `a x = b` for square integer `a`, returning `None` when `a` is
/// singular. Forward elimination is Bareiss' fraction-free scheme, so every
/// intermediate entry stays an integer (a minor of the input).
pub(crate) fn solve_integer_system(mut a: Vec<Vec<BigInt>>, mut b: Vec<BigInt>) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut prev = BigInt::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        if pivot != col {
            a.swap(pivot, col);
            b.swap(pivot, col);
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = (&a[r][c] * &a[col][col] - &a[r][col] * &a[col][c]) / &prev;
                a[r][c] = v;
            }
            b[r] = (&b[r] * &a[col][col] - &a[r][col] * &b[col]) / &prev;
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for r in (0..n).rev() {
        let mut acc = Rational::from_integer(b[r].clone());
        for c in r + 1..n {
            acc -= Rational::from_integer(a[r][c].clone()) * &x[c];
        }
        x[r] = acc / Rational::from_integer(a[r][r].clone());
    }
    Some(x)
}
