use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Exponent vector over `2n` variable slots. Derived `Ord` is the lex order
/// with slot 0 largest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        Monomial((0..nvars).map(|i| (mask >> i & 1) as u8).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Bit mask of the support when every exponent is at most one.
    pub fn squarefree_mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => m |= 1 << i,
                _ => return None,
            }
        }
        Some(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len() / 2;
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let (name, idx) = if i < n {
                ('x', i + 1)
            } else {
                ('y', i - n + 1)
            };
            write!(f, "{name}{idx}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `lead - trail` with `lead > trail` in lex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orients `a - b` (up to sign); `None` when the terms cancel.
    pub fn oriented(a: Monomial, b: Monomial) -> Option<Binomial> {
        match a.cmp(&b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    /// `f_ij = x_i y_j - x_j y_i` for 0-based `i < j` in a graph on `n`
    /// vertices.
    pub fn edge(n: usize, i: usize, j: usize) -> Binomial {
        debug_assert!(i < j && j < n);
        Binomial::edge_with_cofactor(n, i, j, 0)
    }

    /// `u * f_ij` with the squarefree cofactor `u` given as a slot mask.
    pub fn edge_with_cofactor(n: usize, i: usize, j: usize, cofactor: u64) -> Binomial {
        let lead = cofactor | 1 << i | 1 << (n + j);
        let trail = cofactor | 1 << j | 1 << (n + i);
        Binomial {
            lead: Monomial::from_mask(2 * n, lead),
            trail: Monomial::from_mask(2 * n, trail),
        }
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.lead, self.trail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_puts_x1_first() {
        // x1 > x2 > y1 > y2 with n = 2
        let x1 = Monomial::from_mask(4, 0b0001);
        let x2 = Monomial::from_mask(4, 0b0010);
        let y1 = Monomial::from_mask(4, 0b0100);
        let x2y1y2 = Monomial::from_mask(4, 0b1110);
        assert!(x1 > x2 && x2 > y1);
        assert!(x1 > x2y1y2);
        let f = Binomial::edge(2, 0, 1);
        assert_eq!(f.lead.squarefree_mask(), Some(0b1001));
        assert_eq!(f.trail.squarefree_mask(), Some(0b0110));
    }

    #[test]
    fn arithmetic() {
        let a = Monomial(vec![1, 2, 0]);
        let b = Monomial(vec![0, 1, 1]);
        assert_eq!(a.lcm(&b), Monomial(vec![1, 2, 1]));
        assert!(b.div(&Monomial(vec![0, 1, 0])).divides(&b));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.squarefree_mask(), None);
        assert_eq!(a.mul(&b).degree(), 5);
    }
}
