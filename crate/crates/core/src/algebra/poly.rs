use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

/// Dense integer polynomial in one variable, lowest degree first, with no
/// trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i128>);

impl Poly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: i128) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(1), |acc, _| &acc * self)
    }

    /// Exact quotient by `1 - x`; `None` if `1 - x` does not divide.
    pub fn div_one_minus_x(&self) -> Option<Poly> {
        if self.eval(1) != 0 {
            return None;
        }
        // p = (1 - x) q  <=>  q_k = sum_{i<=k} p_i
        let mut q = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut acc = 0;
        for &c in &self.0[..self.0.len().saturating_sub(1)] {
            acc += c;
            q.push(acc);
        }
        Some(Poly::new(q))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly::new(
            (0..len)
                .map(|i| self.0.get(i).copied().unwrap_or(0) + rhs.0.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut out = vec![0i128; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let one_minus_x = Poly::new(vec![1, -1]);
        let p = one_minus_x.pow(3);
        assert_eq!(p.coeffs(), &[1, -3, 3, -1]);
        assert_eq!(p.div_one_minus_x().unwrap(), one_minus_x.pow(2));
        assert_eq!(Poly::new(vec![1, 1]).div_one_minus_x(), None);
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(Poly::monomial(5, 2).eval(2), 20);
    }
}
