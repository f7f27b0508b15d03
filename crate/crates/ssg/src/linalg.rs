//! Exact linear solves via fraction-free (Bareiss) elimination.
//!
//! Rows are scaled to integers first; elimination then stays in big
//! integers, every interior division being exact. Pivots are chosen by
//! smallest bit length to limit coefficient growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::game::Rational;

/// Solves the square system `a · x = b` exactly.
/// Returns `None` when the matrix is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "dimension mismatch");
    if n == 0 {
        return Some(Vec::new());
    }

    // Augmented integer matrix: scale each row by the lcm of its denominators.
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (row, rhs) in a.iter().zip(b) {
        assert_eq!(row.len(), n, "dimension mismatch");
        let mut scale = BigInt::one();
        for entry in row.iter().chain(std::iter::once(rhs)) {
            scale = scale.lcm(entry.denom());
        }
        let scaled: Vec<BigInt> = row
            .iter()
            .chain(std::iter::once(rhs))
            .map(|entry| entry.numer() * (&scale / entry.denom()))
            .collect();
        m.push(scaled);
    }

    let mut prev = BigInt::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].magnitude().bits())?;
        m.swap(col, pivot);
        for r in col + 1..n {
            for c in col + 1..=n {
                let t = &m[col][col] * &m[r][c] - &m[r][col] * &m[col][c];
                m[r][c] = t / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[col][col].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from(m[i][i].clone());
    }
    Some(x)
}
